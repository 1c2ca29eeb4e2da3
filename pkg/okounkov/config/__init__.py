"""
Configuration package for OKOUNKOV
Loads .env before the settings object is built, then exports it
"""
from .load_env import load_environment

# ---------------------------------------------
# LOAD ENVIRONMENT VARIABLES
# ---------------------------------------------
load_environment()

from .settings import settings, validate_settings  # noqa: E402

__all__ = ["settings", "validate_settings", "load_environment"]
