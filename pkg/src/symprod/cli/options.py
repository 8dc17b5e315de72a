"""Options shared by every computing sub-command, and document output."""

from __future__ import annotations

import functools
import logging
from collections.abc import Callable
from dataclasses import dataclass
from pathlib import Path
from typing import Any, TypeVar

import click
from pydantic import BaseModel

from symprod.core.config import SymprodConfig, load_config
from symprod.groups.parser import group_from_spec
from symprod.groups.permgroup import PermGroup
from symprod.reporting.csv_reporter import CSVReporter
from symprod.reporting.json_reporter import JSONReporter
from symprod.reporting.terminal import TerminalReporter

logger = logging.getLogger(__name__)

F = TypeVar("F", bound=Callable[..., Any])


@dataclass(frozen=True)
class CommandOptions:
    """Parsed values of the shared options.

    Attributes:
        as_json: ``--json`` was given.
        as_csv: ``--csv`` was given.
        seed: ``--seed`` override, if any.
        bound: ``--bound`` override, if any.
        config_path: ``--config`` path, if any.
        output: ``--output`` path, if any.
    """

    as_json: bool = False
    as_csv: bool = False
    seed: int | None = None
    bound: int | None = None
    config_path: str | None = None
    output: str | None = None

    def load(self) -> SymprodConfig:
        """Load the configuration and apply ``--bound`` and ``--seed``."""
        return load_config(self.config_path).with_overrides(bound=self.bound, seed=self.seed)

    def output_format(self, config: SymprodConfig) -> str:
        """Return ``json``, ``csv`` or ``text``."""
        if self.as_json:
            return "json"
        if self.as_csv:
            return "csv"
        return config.reporting.default_format


_SHARED_OPTIONS = (
    click.option("--json", "as_json", is_flag=True, help="Emit the JSON document."),
    click.option("--csv", "as_csv", is_flag=True, help="Emit a CSV table."),
    click.option("--seed", type=int, default=None, help="Seed for randomized property sampling."),
    click.option(
        "--bound",
        type=click.IntRange(min=1),
        default=None,
        help="Group-order resource bound.",
    ),
    click.option(
        "--config",
        "-c",
        "config_path",
        default=None,
        help="Path to symprod.yaml config file.",
    ),
    click.option(
        "--output",
        "-o",
        default=None,
        help="Also write the document to this file (relative paths go under the configured output_dir).",
    ),
)


def shared_options(func: F) -> F:
    """Add the shared options to a command and pass them as ``opts``."""

    @functools.wraps(func)
    def wrapper(
        *args: Any,
        as_json: bool,
        as_csv: bool,
        seed: int | None,
        bound: int | None,
        config_path: str | None,
        output: str | None,
        **kwargs: Any,
    ) -> Any:
        if as_json and as_csv:
            raise click.UsageError("--json and --csv are mutually exclusive")
        opts = CommandOptions(
            as_json=as_json,
            as_csv=as_csv,
            seed=seed,
            bound=bound,
            config_path=config_path,
            output=output,
        )
        return func(*args, opts=opts, **kwargs)

    decorated: Callable[..., Any] = wrapper
    for option in reversed(_SHARED_OPTIONS):
        decorated = option(decorated)
    return decorated  # type: ignore[return-value]


def parse_group(spec: str, config: SymprodConfig) -> PermGroup:
    """Parse a group spec under the configured order bound."""
    return group_from_spec(spec, config.limits.group_order_bound)


def emit(document: BaseModel, opts: CommandOptions, config: SymprodConfig) -> None:
    """Print ``document`` in the selected format and honour ``--output``.

    Files are written as CSV when ``--csv`` is selected and as JSON otherwise.
    """
    fmt = opts.output_format(config)
    if fmt == "json":
        click.echo(JSONReporter().render(document))
    elif fmt == "csv":
        click.echo(CSVReporter().render(document), nl=False)
    else:
        TerminalReporter().report(document)

    if opts.output:
        path = Path(opts.output)
        if not path.is_absolute():
            path = Path(config.reporting.output_dir) / path
        if fmt == "csv":
            CSVReporter().write(document, path)
        else:
            JSONReporter().write(document, path)
        logger.debug("Wrote %s output to %s", fmt, path)
