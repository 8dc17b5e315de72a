"""Command-line interface built with Click."""

from symprod.cli.main import main

__all__ = ["main"]
