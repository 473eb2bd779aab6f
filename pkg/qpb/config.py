"""Runtime settings.

Defaults live on the pydantic models; ``load_settings`` layers environment
overrides on top (``QPB_MAX_DENOM``, ``QPB_WORKERS``, ``QPB_LOG_LEVEL``).
"""

import os
from typing import Optional

from pydantic import BaseModel, Field, ValidationError

from qpb.errors import ConfigError

ENV_PREFIX = "QPB_"


class SolverOptions(BaseModel):
    """Options for a single damped Newton run."""

    max_iter: int = Field(default=200, gt=0)
    step_tol: float = Field(default=1e-12, gt=0)
    residual_tol: float = Field(default=1e-14, gt=0)
    accept_tol: float = Field(default=1e-9, gt=0)
    damping: float = Field(default=1e-8, ge=0)
    fd_step: float = Field(default=1e-7, gt=0)
    max_backtracks: int = Field(default=40, gt=0)
    snap_tol: float = Field(default=1e-9, gt=0)
    max_denom: int = Field(default=10_000, gt=0)


class Settings(BaseModel):
    """Process-wide defaults."""

    max_denom: int = Field(default=10_000, gt=0)
    snap_tol: float = Field(default=1e-9, gt=0)
    workers: int = Field(default=1, gt=0)
    seed: int = Field(default=0, ge=0)
    log_level: str = "INFO"

    def solver_options(self, **overrides) -> SolverOptions:
        return SolverOptions(max_denom=self.max_denom, snap_tol=self.snap_tol, **overrides)


def load_settings(environ: Optional[dict] = None) -> Settings:
    """Build Settings from defaults plus ``QPB_*`` environment variables."""
    env = os.environ if environ is None else environ
    values = {}
    for field in ("max_denom", "workers", "log_level"):
        raw = env.get(ENV_PREFIX + field.upper())
        if raw is not None and raw != "":
            values[field] = raw
    try:
        return Settings(**values)
    except ValidationError as exc:
        raise ConfigError(f"invalid environment settings: {exc}") from exc


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Get the singleton Settings instance."""
    global _settings
    if _settings is None:
        _settings = load_settings()
    return _settings
