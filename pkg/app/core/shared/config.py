"""Application configuration settings."""

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    # Application
    app_name: str = "Wallcross Engine"
    app_version: str = "1.0.0"
    log_level: str = "WARNING"
    log_json: bool = False

    # Reporting
    default_format: str = "json"

    # Hall algebra truncation
    max_word_length: int = 4

    # Acceptance suite
    selftest_seed: int = 20240917
    selftest_trials: int = 100

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="WALLCROSS_",
        case_sensitive=False,
        extra="ignore",
    )


# Global settings instance
settings = Settings()
