from typing import Optional

from pydantic import field_validator
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    PROJECT_NAME: str = "symtope"
    VERSION: str = "1.0.0"
    API_V1_STR: str = "/api/v1"
    SCHEMA_VERSION: str = "symtope/1"

    # Worker cap for the subcomplex sweep (SYMTOPE_THREADS)
    THREADS: int = 1

    # Size guards
    MAX_MINORS: int = 10**8
    MAX_POINTS: int = 2_000_000
    MAX_CELLS: int = 200_000
    MAX_HULL_DIM: int = 12
    MAX_HULL_VERTICES: int = 60
    MAX_CIRCUIT_COLUMNS: int = 25
    MAX_BASES: int = 100_000
    MAX_GRAPH_VERTICES: int = 12
    MAX_ISO_FACETS: int = 30
    WITNESS_CAP: int = 10_000

    # Groebner checks
    GB_TRIALS: int = 1000
    DEFAULT_NORM_BOUND: int = 3

    # Logging
    LOG_LEVEL: str = "WARNING"
    LOG_JSON: bool = True

    # Monitoring
    SENTRY_DSN: Optional[str] = None
    SENTRY_ENVIRONMENT: str = "production"

    @field_validator(
        "THREADS",
        "MAX_MINORS",
        "MAX_POINTS",
        "MAX_CELLS",
        "MAX_HULL_DIM",
        "MAX_HULL_VERTICES",
        "MAX_CIRCUIT_COLUMNS",
        "MAX_BASES",
        "MAX_GRAPH_VERTICES",
        "MAX_ISO_FACETS",
        "WITNESS_CAP",
        "GB_TRIALS",
        "DEFAULT_NORM_BOUND",
    )
    @classmethod
    def check_positive(cls, v: int) -> int:
        if v <= 0:
            raise ValueError(f"guard values must be positive, got {v}")
        return v

    @field_validator("LOG_LEVEL", mode="before")
    @classmethod
    def normalize_level(cls, v: str) -> str:
        return str(v).upper()

    model_config = {"env_file": ".env", "env_prefix": "SYMTOPE_", "extra": "ignore"}


settings = Settings()


def resolve(override: Optional[Settings] = None) -> Settings:
    """Return the explicit settings object or the process-wide singleton."""
    return override if override is not None else settings
