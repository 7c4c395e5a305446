"""Runtime settings read from the environment."""

import os
from collections.abc import Mapping
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator

from .errors import ConfigError

ENV_CACHE = "FOCKKIT_CACHE"
ENV_NODE_BUDGET = "FOCKKIT_NODE_BUDGET"
ENV_WORKERS = "FOCKKIT_WORKERS"
ENV_LOG_LEVEL = "FOCKKIT_LOG_LEVEL"

DEFAULT_NODE_BUDGET = 1_000_000


class Settings(BaseModel):
    """Process-wide knobs; CLI flags override the environment."""

    model_config = ConfigDict(frozen=True)

    cache_path: Path | None = None
    node_budget: int = DEFAULT_NODE_BUDGET
    workers: int = 1
    log_level: str = "WARNING"

    @field_validator("cache_path", mode="before")
    @classmethod
    def parse_cache_path(cls, v: Any) -> Path | None:
        """Empty strings mean no persistent cache."""
        if v is None or (isinstance(v, str) and v.strip() == ""):
            return None
        return Path(v)

    @field_validator("node_budget", "workers", mode="before")
    @classmethod
    def parse_positive_int(cls, v: Any) -> int:
        if isinstance(v, str):
            v = int(v.strip())
        if int(v) < 1:
            raise ValueError("must be a positive integer")
        return int(v)

    @field_validator("log_level", mode="before")
    @classmethod
    def parse_log_level(cls, v: Any) -> str:
        level = str(v).strip().upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level {v!r}")
        return level


def load_settings(environ: Mapping[str, str] | None = None, **overrides: Any) -> Settings:
    """Build settings from environment variables plus explicit overrides.

    Overrides whose value is None are ignored so CLI defaults do not mask the
    environment.
    """
    env = os.environ if environ is None else environ
    raw: dict[str, Any] = {}
    if env.get(ENV_CACHE):
        raw["cache_path"] = env[ENV_CACHE]
    if env.get(ENV_NODE_BUDGET):
        raw["node_budget"] = env[ENV_NODE_BUDGET]
    if env.get(ENV_WORKERS):
        raw["workers"] = env[ENV_WORKERS]
    if env.get(ENV_LOG_LEVEL):
        raw["log_level"] = env[ENV_LOG_LEVEL]
    raw.update({key: value for key, value in overrides.items() if value is not None})
    try:
        return Settings(**raw)
    except (ValidationError, ValueError) as exc:
        raise ConfigError(str(exc)) from exc
