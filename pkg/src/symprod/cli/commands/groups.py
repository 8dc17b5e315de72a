"""CLI commands for subgroup lattices and Burnside rings."""

from __future__ import annotations

import click

from symprod.burnside.checks import double_coset_check, mark_table_document
from symprod.cli.options import CommandOptions, emit, parse_group, shared_options
from symprod.groups.lattice import subgroups_document


@click.command("subgroups")
@click.argument("spec")
@shared_options
def subgroups_cmd(spec: str, opts: CommandOptions) -> None:
    """List the conjugacy classes of subgroups of SPEC."""
    config = opts.load()
    group = parse_group(spec, config)
    emit(subgroups_document(group, config.limits.group_order_bound), opts, config)


@click.command("burnside")
@click.argument("spec")
@shared_options
def burnside_cmd(spec: str, opts: CommandOptions) -> None:
    """Show the basis and table of marks of the Burnside ring A(SPEC)."""
    config = opts.load()
    group = parse_group(spec, config)
    emit(mark_table_document(group, config.limits.group_order_bound), opts, config)


@click.command("doublecoset-check")
@click.argument("spec")
@shared_options
def doublecoset_check_cmd(spec: str, opts: CommandOptions) -> None:
    """Check the double coset formula on every pair of subgroup classes.

    Exits with status 1 if any pair fails.
    """
    config = opts.load()
    group = parse_group(spec, config)
    document = double_coset_check(group, config.limits.group_order_bound)
    emit(document, opts, config)
    if not document.passed:
        raise SystemExit(1)
