# Importing the check modules registers them in CHECK_REGISTRY.
from . import seshadri_checks, surface_checks, toric_checks  # noqa: F401
