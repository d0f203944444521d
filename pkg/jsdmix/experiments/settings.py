from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class ExperimentSettings(BaseSettings):
    """
    Defaults of the experiment runners, overridable through ``JSDMIX_*`` environment variables.
    Command-line flags take precedence over both.
    """
    model_config = SettingsConfigDict(env_prefix="JSDMIX_", extra="ignore")

    resolution: int = Field(200, ge=2, description="Grid intervals per swept axis.")
    epsilon: float = Field(0.3, ge=0.0, le=1.0, description="Epsilon of the built-in scenario family.")
    seed: int = Field(0, ge=0, le=2**64 - 1, description="Seed of every randomized run.")
    n_random: int = Field(1000, ge=1, description="Random scenarios per verification suite.")
    n_trials: int = Field(1_000_000, ge=1, description="Rounds of the urn game.")
    n_workers: int = Field(1, ge=1, description="Threads used by grid sweeps and the urn game.")
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = Field(
        "WARNING", description="Level of the command-line stderr log handler.")

    @field_validator("log_level", mode="before")
    @classmethod
    def _upper_level(cls, v):
        return v.upper() if isinstance(v, str) else v
