# csformula/utils/config.py

"""
Runtime configuration.

Values come from (lowest to highest priority):
1. The defaults below.
2. A `.env` file in the working directory (see sample_env.txt).
3. Environment variables prefixed with CSFORMULA_.

The CLI overrides individual values with its own flags.
"""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path

from dotenv import load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict

load_dotenv()

PROJECT_ROOT = Path(__file__).resolve().parents[2]


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="CSFORMULA_",
        env_file=".env",
        extra="ignore",
    )

    catalog_dir: Path = PROJECT_ROOT / "data" / "catalog"
    default_datum: str = "catalog:A1-adjoint"
    seed: int = 0
    output_format: str = "json"
    log_level: str = "WARNING"

    # sweep sizes
    dim_limit: int = 500
    rank_trials: int = 5
    assoc_triples: int = 200
    specialization_points: int = 20


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()
