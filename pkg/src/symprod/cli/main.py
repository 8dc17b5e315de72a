"""CLI entry point and command group for symprod.

Registers all sub-commands, maps library errors onto exit codes and
provides the ``symprod`` command.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Any

import click
from rich.console import Console
from rich.logging import RichHandler

from symprod.cli.commands.category import cat_basis_cmd, compose_check_cmd
from symprod.cli.commands.filtration import filtration_cmd, member_cmd, saturation_cmd, sp_cmd
from symprod.cli.commands.groups import burnside_cmd, doublecoset_check_cmd, subgroups_cmd
from symprod.cli.commands.reproduce import examples_cmd, reproduce_cmd
from symprod.core.exceptions import (
    ConfigError,
    InvariantViolationError,
    ResourceBoundError,
    ValidationError,
)

EXIT_INVARIANT = 1
EXIT_VALIDATION = 2
EXIT_RESOURCE = 3


class SymprodGroup(click.Group):
    """Command group that turns library errors into one-line diagnostics."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except (ValidationError, ConfigError) as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(EXIT_VALIDATION)
        except ResourceBoundError as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(EXIT_RESOURCE)
        except InvariantViolationError as exc:
            click.echo(f"internal error: {exc}", err=True)
            ctx.exit(EXIT_INVARIANT)


@click.group(cls=SymprodGroup)
@click.version_option(package_name="symprod")
@click.option("--verbose", "-v", is_flag=True, help="Log progress at DEBUG level to stderr.")
def cli(verbose: bool) -> None:
    """symprod: Burnside rings and the symmetric-product filtration."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


_CONFIG_TEMPLATE = """\
# symprod configuration

limits:
  group_order_bound: 2000     # largest group whose subgroup lattice is enumerated
  hom_order_bound: 120        # largest group order in homomorphism searches
  biset_size_bound: 100000    # largest balanced product in a composition

runner:
  parallel: false             # compute filtration stages / suites concurrently
  max_workers: 4

sampling:
  seed: 0                     # seed for compose-check sampling
  samples: 100

reporting:
  default_format: text        # text | json | csv
  output_dir: symprod-report  # relative --output paths are written here
"""


@cli.command("init")
@click.option(
    "--output",
    "-o",
    default="symprod.yaml",
    help="Output file path for the config.",
)
def init_cmd(output: str) -> None:
    """Initialize a new symprod configuration file."""
    path = Path(output)
    if path.exists():
        click.echo(f"Config file already exists: {path}")
        return
    path.write_text(_CONFIG_TEMPLATE, encoding="utf-8")
    click.echo(f"Created config file: {path}")


cli.add_command(subgroups_cmd)
cli.add_command(burnside_cmd)
cli.add_command(doublecoset_check_cmd)
cli.add_command(filtration_cmd)
cli.add_command(sp_cmd)
cli.add_command(member_cmd)
cli.add_command(saturation_cmd)
cli.add_command(cat_basis_cmd)
cli.add_command(compose_check_cmd)
cli.add_command(reproduce_cmd)
cli.add_command(examples_cmd)


def main() -> None:
    """Entry point for the CLI."""
    cli()
