"""Ambient infrastructure: configuration, exceptions and documents."""

from symprod.core.config import SymprodConfig, load_config
from symprod.core.exceptions import (
    ConfigError,
    InvariantViolationError,
    ResourceBoundError,
    SymprodError,
    ValidationError,
)

__all__ = [
    "ConfigError",
    "InvariantViolationError",
    "ResourceBoundError",
    "SymprodConfig",
    "SymprodError",
    "ValidationError",
    "load_config",
]
