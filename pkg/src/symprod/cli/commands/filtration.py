"""CLI commands for the filtration I_n(G) and the quotients A(G)/I_n(G)."""

from __future__ import annotations

import click

from symprod.cli.options import CommandOptions, emit, parse_group, shared_options
from symprod.core.config import SymprodConfig
from symprod.core.exceptions import SelectorError
from symprod.core.models import MembershipDocument
from symprod.filtration.ideals import Stage, ideal_lattice, sp_invariants
from symprod.filtration.table import build_table
from symprod.groups.lattice import subgroup_lattice
from symprod.groups.selectors import parse_vector
from symprod.lattice.basis import contains, coordinates, saturation_contains


def _stage(text: str) -> Stage:
    if text in ("inf", "infinity"):
        return "infinity"
    try:
        n = int(text)
    except ValueError:
        raise SelectorError(f"stage must be a positive integer or 'inf', got '{text}'") from None
    if n < 1:
        raise SelectorError(f"stage must be positive, got {n}")
    return n


@click.command("filtration")
@click.argument("spec")
@click.option(
    "--max-n",
    type=click.IntRange(min=1),
    default=None,
    help="Last stage to compute (default: the group order).",
)
@click.option(
    "--parallel/--sequential",
    default=None,
    help="Compute stages concurrently or one after another.",
)
@shared_options
def filtration_cmd(spec: str, max_n: int | None, parallel: bool | None, opts: CommandOptions) -> None:
    """Tabulate I_n(SPEC) and A/I_n for n = 1..max-n."""
    config = opts.load()
    if parallel is not None:
        runner = config.runner.model_copy(update={"parallel": parallel})
        config = config.model_copy(update={"runner": runner})
    group = parse_group(spec, config)
    emit(build_table(group, max_n, config).to_document(), opts, config)


@click.command("sp")
@click.argument("spec")
@click.argument("n")
@shared_options
def sp_cmd(spec: str, n: str, opts: CommandOptions) -> None:
    """Print the invariants of A(SPEC)/I_N(SPEC); N may be 'inf'."""
    config = opts.load()
    stage = _stage(n)
    group = parse_group(spec, config)
    subgroup_lattice(group, config.limits.group_order_bound)
    emit(sp_invariants(group, stage), opts, config)


def _membership(spec: str, n: int, elem: str, opts: CommandOptions, *, saturated: bool) -> None:
    config: SymprodConfig = opts.load()
    group = parse_group(spec, config)
    rank = len(subgroup_lattice(group, config.limits.group_order_bound))
    vector = parse_vector(elem, rank)
    lattice = ideal_lattice(group, n)
    member = saturation_contains(lattice, vector) if saturated else contains(lattice, vector)
    document = MembershipDocument(
        group=group.label,
        n=n,
        element=vector,
        member=member,
        coordinates=coordinates(lattice, vector) if member and not saturated else None,
    )
    emit(document, opts, config)


@click.command("member")
@click.argument("spec")
@click.argument("n", type=click.IntRange(min=1))
@click.option("--elem", required=True, help="Element of A(G) as a JSON list in basis order.")
@shared_options
def member_cmd(spec: str, n: int, elem: str, opts: CommandOptions) -> None:
    """Test whether ELEM lies in I_N(SPEC)."""
    _membership(spec, n, elem, opts, saturated=False)


@click.command("saturation")
@click.argument("spec")
@click.argument("n", type=click.IntRange(min=1))
@click.option("--elem", required=True, help="Element of A(G) as a JSON list in basis order.")
@shared_options
def saturation_cmd(spec: str, n: int, elem: str, opts: CommandOptions) -> None:
    """Test whether some non-zero multiple of ELEM lies in I_N(SPEC)."""
    _membership(spec, n, elem, opts, saturated=True)
