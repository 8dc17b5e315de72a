"""CLI command for reproducing the worked examples."""

from __future__ import annotations

import click

from symprod.cli.options import CommandOptions, emit, shared_options
from symprod.reproduce import get_registered_suites, reproduce


@click.command("reproduce")
@click.argument("example_ids", nargs=-1, required=True)
@click.option(
    "--parallel/--sequential",
    default=None,
    help="Run suites concurrently or one after another.",
)
@shared_options
def reproduce_cmd(example_ids: tuple[str, ...], parallel: bool | None, opts: CommandOptions) -> None:
    """Run the example suites EXAMPLE_IDS (or 'all') against their expected tables.

    Exits with status 1 if any line item fails and 3 if a group exceeds the bound.
    """
    config = opts.load()
    if parallel is not None:
        runner = config.runner.model_copy(update={"parallel": parallel})
        config = config.model_copy(update={"runner": runner})
    report = reproduce(list(example_ids), config)
    emit(report, opts, config)
    if not report.all_passed:
        raise SystemExit(1)


@click.command("examples")
def examples_cmd() -> None:
    """List the available example ids."""
    registered = get_registered_suites()
    click.echo(f"Available examples ({len(registered)}):")
    for name in sorted(registered):
        click.echo(f"  - {name}: {registered[name]().description}")
