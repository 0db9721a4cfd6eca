"""
Configuration.

Settings are read from the environment (optionally populated from a .env
file) and may be overridden from the command line.
"""

import os
from pathlib import Path
from typing import Optional

import dotenv
from pydantic import BaseModel, Field

PROJECT_ROOT = Path(__file__).resolve().parents[2]


class Settings(BaseModel):
    """Runtime limits and paths used across the package."""

    factor_norm_bound: int = Field(default=10**12, gt=1)
    max_tower_depth: int = Field(default=3, ge=1, le=3)
    bound_prime_count: int = Field(default=5, ge=3)
    bound_max_norm: int = Field(default=169, ge=9)
    tower_order_cap: int = Field(default=16, ge=2, le=16)
    fermat_max_height: int = Field(default=50, ge=1)
    log_level: str = "INFO"
    conway_table: Path = PROJECT_ROOT / "data" / "finite_fields" / "conway_polynomials.json"

    model_config = {"frozen": True}


def load_settings() -> Settings:
    """
    Build settings from environment variables.

    Returns:
        Settings populated from the environment, defaults elsewhere
    """
    dotenv.load_dotenv()

    values = {}
    for name, field in Settings.model_fields.items():
        raw = os.getenv(name.upper())
        if raw is not None and raw != "":
            values[name] = raw
    return Settings(**values)


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Return the active settings, loading them on first use."""
    global _settings
    if _settings is None:
        _settings = load_settings()
    return _settings


def configure(**overrides) -> Settings:
    """
    Replace selected settings (used by the CLI flags).

    Args:
        **overrides: Field values to replace; None values are ignored

    Returns:
        The new active settings
    """
    global _settings
    current = get_settings().model_dump()
    current.update({k: v for k, v in overrides.items() if v is not None})
    _settings = Settings(**current)
    return _settings
