from functools import lru_cache

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Harness settings, loaded from PVI_HEAT_* environment variables or a .env file."""

    model_config = SettingsConfigDict(env_prefix="PVI_HEAT_", env_file=".env", env_file_encoding="utf-8", extra="ignore")

    PROJECT_NAME: str = "pvi-heat"
    LOGGER_NAME: str = "PVI_Heat"
    LOG_LEVEL: str = "INFO"
    LOG_DIR: str | None = None

    # overrides --seed when set
    SEED: int | None = None

    # numerics
    RTOL: float = 1e-10
    ATOL: float = 1e-12
    EXCLUSION_RADIUS: float = 1e-3
    BLOWUP_BOUND: float = 1e8
    RICHARDSON_LEVELS: int = 3
    MIN_CONVERGENCE_ORDER: float = 1.9

    ZERO_TEST_RETRIES: int = 64


@lru_cache
def get_settings() -> Settings:
    return Settings()
