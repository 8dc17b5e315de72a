"""CLI commands for the finite global Burnside category."""

from __future__ import annotations

import click

from symprod.bisets.checks import compose_check
from symprod.bisets.pairs import category_basis_document
from symprod.cli.options import CommandOptions, emit, parse_group, shared_options


@click.command("cat-basis")
@click.argument("spec_g")
@click.argument("spec_k")
@shared_options
def cat_basis_cmd(spec_g: str, spec_k: str, opts: CommandOptions) -> None:
    """List the canonical basis pairs (L, alpha) of A(SPEC_G, SPEC_K)."""
    config = opts.load()
    source = parse_group(spec_g, config)
    target = parse_group(spec_k, config)
    document = category_basis_document(
        source,
        target,
        order_bound=config.limits.group_order_bound,
        hom_bound=config.limits.hom_order_bound,
    )
    emit(document, opts, config)


@click.command("compose-check")
@click.argument("spec_g")
@click.argument("spec_k")
@click.argument("spec_l")
@shared_options
def compose_check_cmd(spec_g: str, spec_k: str, spec_l: str, opts: CommandOptions) -> None:
    """Check the category laws for A(SPEC_G, SPEC_K) followed by A(SPEC_K, SPEC_L).

    Exits with status 1 if any law fails.
    """
    config = opts.load()
    groups = [parse_group(spec, config) for spec in (spec_g, spec_k, spec_l)]
    document = compose_check(*groups, config=config)
    emit(document, opts, config)
    if not document.passed:
        raise SystemExit(1)
