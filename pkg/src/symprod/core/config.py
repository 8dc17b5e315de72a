"""Configuration loading and validation for symprod.

Loads configuration from ``symprod.yaml`` with support for
``${ENV_VAR}`` interpolation and sensible defaults.
"""

from __future__ import annotations

import logging
import os
import re
from pathlib import Path
from typing import Any, Literal

import yaml
from pydantic import BaseModel, ConfigDict, Field

from symprod.core.exceptions import ConfigError

logger = logging.getLogger(__name__)

_ENV_VAR_PATTERN = re.compile(r"\$\{([^}]+)\}")

CONFIG_FILENAMES = ("symprod.yaml", "symprod.yml")


def _interpolate_env_vars(value: str) -> str:
    """Replace ``${VAR}`` references with environment variable values."""

    def _replace(match: re.Match[str]) -> str:
        var_name = match.group(1)
        env_val = os.environ.get(var_name)
        if env_val is None:
            logger.warning("Environment variable '%s' not set", var_name)
            return match.group(0)
        return env_val

    return _ENV_VAR_PATTERN.sub(_replace, value)


def _interpolate_recursive(data: Any) -> Any:
    """Recursively interpolate environment variables in a data structure."""
    if isinstance(data, str):
        return _interpolate_env_vars(data)
    if isinstance(data, dict):
        return {k: _interpolate_recursive(v) for k, v in data.items()}
    if isinstance(data, list):
        return [_interpolate_recursive(item) for item in data]
    return data


class LimitsConfig(BaseModel):
    """Desk-scale resource bounds.

    Attributes:
        group_order_bound: Largest group order for subgroup enumeration.
        hom_order_bound: Largest source/target order for homomorphism search.
        biset_size_bound: Largest biset produced by a balanced product.
    """

    model_config = ConfigDict(extra="forbid")

    group_order_bound: int = Field(default=2000, ge=1)
    hom_order_bound: int = Field(default=120, ge=1)
    biset_size_bound: int = Field(default=100_000, ge=1)


class RunnerConfig(BaseModel):
    """Configuration for dispatching independent jobs.

    Attributes:
        parallel: Whether independent (G, n) jobs run concurrently.
        max_workers: Maximum number of concurrent jobs.
    """

    model_config = ConfigDict(extra="forbid")

    parallel: bool = False
    max_workers: int = Field(default=4, ge=1)


class SamplingConfig(BaseModel):
    """Configuration for randomized property sampling.

    Attributes:
        seed: Seed for the sampling RNG.
        samples: Number of random samples per property.
    """

    model_config = ConfigDict(extra="forbid")

    seed: int = 0
    samples: int = Field(default=100, ge=1)


class ReportingConfig(BaseModel):
    """Configuration for result output.

    Attributes:
        default_format: Format used when no ``--json``/``--csv`` flag is given.
        output_dir: Directory for report files written with ``--output``.
    """

    model_config = ConfigDict(extra="forbid")

    default_format: Literal["text", "json", "csv"] = "text"
    output_dir: str = "symprod-report"


class SymprodConfig(BaseModel):
    """Top-level symprod configuration.

    Attributes:
        limits: Resource bounds.
        runner: Job dispatch configuration.
        sampling: Randomized sampling configuration.
        reporting: Output configuration.
    """

    model_config = ConfigDict(extra="forbid")

    limits: LimitsConfig = Field(default_factory=LimitsConfig)
    runner: RunnerConfig = Field(default_factory=RunnerConfig)
    sampling: SamplingConfig = Field(default_factory=SamplingConfig)
    reporting: ReportingConfig = Field(default_factory=ReportingConfig)

    def with_overrides(self, *, bound: int | None = None, seed: int | None = None) -> SymprodConfig:
        """Return a copy with command-line overrides applied.

        Args:
            bound: Override for ``limits.group_order_bound``.
            seed: Override for ``sampling.seed``.

        Returns:
            A new configuration instance.
        """
        config = self
        if bound is not None:
            limits = config.limits.model_copy(update={"group_order_bound": bound})
            config = config.model_copy(update={"limits": limits})
        if seed is not None:
            sampling = config.sampling.model_copy(update={"seed": seed})
            config = config.model_copy(update={"sampling": sampling})
        return config


def load_config(
    path: str | Path | None = None,
) -> SymprodConfig:
    """Load configuration from a YAML file.

    Searches for ``symprod.yaml`` or ``symprod.yml`` in the current
    directory if no path is provided. Returns default config if no
    file is found.

    Args:
        path: Explicit path to a config file.

    Returns:
        A validated SymprodConfig instance.

    Raises:
        ConfigError: If the file exists but is invalid.
    """
    if path is not None:
        config_path = Path(path)
        if not config_path.exists():
            raise ConfigError(f"Config file not found: {config_path}")
    else:
        for candidate in CONFIG_FILENAMES:
            config_path = Path(candidate)
            if config_path.exists():
                break
        else:
            logger.debug("No config file found, using defaults")
            return SymprodConfig()

    logger.info("Loading config from %s", config_path)
    try:
        raw = yaml.safe_load(config_path.read_text(encoding="utf-8"))
    except yaml.YAMLError as exc:
        raise ConfigError(f"Invalid YAML in {config_path}: {exc}") from exc

    if raw is None:
        return SymprodConfig()

    if not isinstance(raw, dict):
        raise ConfigError(f"Config file must be a YAML mapping, got {type(raw).__name__}")

    interpolated = _interpolate_recursive(raw)

    try:
        return SymprodConfig.model_validate(interpolated)
    except Exception as exc:
        raise ConfigError(f"Invalid configuration: {exc}") from exc
