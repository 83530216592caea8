"""Application configuration via pydantic-settings and YAML."""

from functools import lru_cache
from pathlib import Path

import yaml
from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parents[2] / "configs" / "config.yaml"


class Settings(BaseSettings):
    """Process-level settings loaded from environment variables."""

    log_level: str = Field(default="INFO")
    config_path: str = Field(default=str(DEFAULT_CONFIG_PATH))

    model_config = {"env_file": ".env", "env_file_encoding": "utf-8", "env_prefix": "HYPROOTS_"}


class NumericsConfig(BaseModel):
    tol: float = 1e-10
    gcd_rtol: float = 1e-9
    split_max_iter: int = 50


class CurvesConfig(BaseModel):
    validation_grid: int = 1024


class BoundsConfig(BaseModel):
    alpha_grid: int = 2048
    assumption_samples: int = 256


class TrackingConfig(BaseModel):
    grid: int = 2048
    h0: float = 1e-3
    richardson_tol: float = 1e-4
    halvings: int = 4


class CalibrationConfig(BaseModel):
    families: int = 100
    root_degree: int = 4
    coeff_range: float = 2.0
    I0: tuple[float, float] = (-1.0, 1.0)
    I1: tuple[float, float] = (-2.0, 2.0)
    stability_threshold: float = 0.1


class GuardrailsConfig(BaseModel):
    max_degree: int = 12
    max_grid: int = 1_000_000


class AppConfig(BaseModel):
    """Validated contents of configs/config.yaml."""

    numerics: NumericsConfig = Field(default_factory=NumericsConfig)
    curves: CurvesConfig = Field(default_factory=CurvesConfig)
    bounds: BoundsConfig = Field(default_factory=BoundsConfig)
    tracking: TrackingConfig = Field(default_factory=TrackingConfig)
    calibration: CalibrationConfig = Field(default_factory=CalibrationConfig)
    guardrails: GuardrailsConfig = Field(default_factory=GuardrailsConfig)


@lru_cache
def get_settings() -> Settings:
    """Return cached process settings."""
    return Settings()


def load_yaml_config(path: str | None = None) -> dict:
    """Load the raw YAML configuration file."""
    with open(path or get_settings().config_path) as f:
        return yaml.safe_load(f) or {}


@lru_cache
def get_config(path: str | None = None) -> AppConfig:
    """Return the validated, cached application config."""
    return AppConfig.model_validate(load_yaml_config(path))
