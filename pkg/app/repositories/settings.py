from typing import List

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_file=".env", env_file_encoding="utf-8", extra="ignore")

    # sweep
    SWEEP_MAX_M: int = 2000
    ORACLE_BOUND: int = 500
    SWEEP_JOBS: int = 1

    # deciders
    CYCLE_CAP: int = 1_000_000

    # api
    MAX_API_M: int = 100_000
    ALLOWED_ORIGINS: List[str] = []

    LOG_LEVEL: str = "INFO"


settings = Settings()  # type: ignore
