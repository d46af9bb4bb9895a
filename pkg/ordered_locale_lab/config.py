"""Configuration for the workbench.

Settings are read from environment variables (prefix ``OLAB_``) and an optional
``.env`` file using pydantic-settings.
"""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Global enumeration limits and runtime options.

    - OLAB_BUDGET: states/paths/tuples any single search may visit
    - OLAB_WORKERS: default worker count for parallel checks
    - OLAB_DISCRETE_CAP: largest discrete space whose opens may be enumerated
    - OLAB_MAX_POINTS: largest space (bitmask width)
    - OLAB_LOG_LEVEL: stdlib level name for structlog output
    """

    budget: int = Field(
        default=200_000,
        ge=1,
        description="Global enumeration budget per search (OLAB_BUDGET)",
    )
    workers: int = Field(default=1, ge=1, le=64)
    discrete_cap: int = Field(
        default=16,
        ge=1,
        le=24,
        description="Point count above which discrete topologies stay virtual",
    )
    max_points: int = Field(default=64, ge=1, le=64)
    log_level: str = Field(default="INFO")

    model_config = SettingsConfigDict(
        env_prefix="OLAB_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance.

    Returns:
        Settings with validated limits

    Raises:
        ValidationError: If an OLAB_ variable is out of range
    """
    return Settings()
