"""
Configuration settings for OKOUNKOV
Handles environment variables and run defaults
"""
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import field_validator


class Settings(BaseSettings):
    """Toolkit settings"""

    model_config = SettingsConfigDict(
        env_file=".env",
        case_sensitive=True,
        extra="ignore",  # Ignore extra fields from .env file
    )

    # Application
    APP_NAME: str = "okounkov"
    APP_VERSION: str = "1.0.0"
    ENVIRONMENT: str = "production"
    LOG_LEVEL: str = "INFO"

    # Semigroup oracle
    DEFAULT_K_MAX: int = 50
    # additivity of the value semigroups is checked for k + l up to this level
    ADDITIVITY_MAX_LEVEL: int = 10

    # Output
    OUTPUT_DIR: str = "out"
    REPORT_FILENAME: str = "report.json"
    TIMINGS_FILENAME: str = "timings.json"
    SVG_SIZE: int = 600

    # Seshadri certificate: xi + 1/CERTIFICATE_DENOMINATOR must fail
    CERTIFICATE_DENOMINATOR: int = 10**6

    # Random Delzant corpus used by the `check` subcommand
    CORPUS_SEED: int = 20240
    CORPUS_SIZE: int = 20

    # Automatic (-1)-curve lists stop at the del Pezzo range
    MAX_DELPEZZO_POINTS: int = 8

    @field_validator("LOG_LEVEL")
    @classmethod
    def normalize_log_level(cls, v):
        if isinstance(v, str):
            return v.strip().upper()
        return v


# Create settings instance
settings = Settings()


# Environment-specific overrides
if settings.ENVIRONMENT == "development":
    settings.LOG_LEVEL = "DEBUG"


# Validation
def validate_settings():
    """Validate critical settings"""
    issues = []

    if settings.DEFAULT_K_MAX < 1:
        issues.append("DEFAULT_K_MAX must be at least 1")
    if settings.ADDITIVITY_MAX_LEVEL < 2:
        issues.append("ADDITIVITY_MAX_LEVEL must be at least 2")
    if settings.SVG_SIZE <= 0:
        issues.append("SVG_SIZE must be positive")
    if settings.CERTIFICATE_DENOMINATOR < 1:
        issues.append("CERTIFICATE_DENOMINATOR must be at least 1")
    if not 1 <= settings.MAX_DELPEZZO_POINTS <= 8:
        issues.append("MAX_DELPEZZO_POINTS must lie in 1..8")
    if settings.LOG_LEVEL not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
        issues.append(f"LOG_LEVEL {settings.LOG_LEVEL!r} is not a logging level")

    if issues:
        raise ValueError(f"Configuration issues: {', '.join(issues)}")
