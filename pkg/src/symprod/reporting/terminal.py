"""Terminal reporter using Rich for formatted output.

Produces tables of subgroup classes, marks, filtration stages and
category bases, and status panels for checks and reproduction runs.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from typing import Any

from pydantic import BaseModel
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

from symprod.core.models import (
    BurnsideElementDocument,
    CategoryBasisDocument,
    CatMorphismDocument,
    CatTermDocument,
    CheckStatus,
    ComposeCheckDocument,
    DoubleCosetCheckDocument,
    FiltrationTableDocument,
    MarkTableDocument,
    MembershipDocument,
    ReproduceReport,
    SubgroupClassDocument,
    SubgroupsDocument,
)
from symprod.lattice.basis import AbelianInvariants

logger = logging.getLogger(__name__)

_STATUS_COLORS: dict[CheckStatus, str] = {
    CheckStatus.PASSED: "green",
    CheckStatus.FAILED: "red",
    CheckStatus.ERROR: "red bold",
}


def _describe(rank: int, torsion: tuple[int, ...]) -> str:
    return AbelianInvariants(rank=rank, torsion=torsion).describe()


class TerminalReporter:
    """Reporter that prints documents to the terminal.

    Attributes:
        console: Rich Console instance for output.
    """

    def __init__(self, console: Console | None = None) -> None:
        """Initialize the terminal reporter.

        Args:
            console: Rich Console to use. Creates a new one if None.
        """
        self._console = console or Console()
        self._renderers: dict[type[BaseModel], Callable[[Any], None]] = {
            SubgroupsDocument: self._print_subgroups,
            MarkTableDocument: self._print_marks,
            BurnsideElementDocument: self._print_element,
            DoubleCosetCheckDocument: self._print_double_cosets,
            FiltrationTableDocument: self._print_filtration,
            AbelianInvariants: self._print_invariants,
            MembershipDocument: self._print_membership,
            CategoryBasisDocument: self._print_basis,
            CatMorphismDocument: self._print_morphism,
            ComposeCheckDocument: self._print_compose,
            ReproduceReport: self._print_reproduce,
        }

    @property
    def name(self) -> str:
        """Return the reporter name."""
        return "terminal"

    def report(self, document: BaseModel) -> None:
        """Print ``document`` in its tabular form.

        Raises:
            TypeError: If the document type has no terminal layout.
        """
        renderer = self._renderers.get(type(document))
        if renderer is None:
            raise TypeError(f"no terminal layout for {type(document).__name__}")
        renderer(document)

    # ── Groups and Burnside rings ──

    def _class_table(self, classes: tuple[SubgroupClassDocument, ...]) -> Table:
        table = Table(show_header=True, header_style="bold")
        table.add_column("#", justify="right")
        table.add_column("Order", justify="right")
        table.add_column("Index", justify="right")
        table.add_column("Conjugates", justify="right")
        table.add_column("|N(H)|", justify="right")
        table.add_column("|W(H)|", justify="right")
        table.add_column("Generators", style="cyan")
        for c in classes:
            table.add_row(
                str(c.position),
                str(c.order),
                str(c.index),
                str(c.class_size),
                str(c.normalizer_order),
                str(c.weyl_order),
                ", ".join(c.generators) or "()",
            )
        return table

    def _print_subgroups(self, doc: SubgroupsDocument) -> None:
        self._console.print(
            f"[bold]{doc.group}[/bold]: order {doc.order}, "
            f"{doc.subgroup_count} subgroups in {len(doc.classes)} classes"
        )
        self._console.print(self._class_table(doc.classes))

    def _print_marks(self, doc: MarkTableDocument) -> None:
        self._console.print(f"[bold]Table of marks of {doc.group}[/bold] (row L, column G/H)")
        table = Table(show_header=True, header_style="bold")
        table.add_column("L \\ H", style="cyan")
        for c in doc.classes:
            table.add_column(f"{c.position}", justify="right")
        for c, row in zip(doc.classes, doc.marks, strict=True):
            table.add_row(f"{c.position} (|L|={c.order})", *(str(m) if m else "." for m in row))
        self._console.print(table)

    def _print_element(self, doc: BurnsideElementDocument) -> None:
        terms = [f"{c}*[G/H{i}]" for i, c in enumerate(doc.coeffs) if c]
        self._console.print(escape(f"{doc.group}: {' + '.join(terms) or '0'}"))

    def _print_double_cosets(self, doc: DoubleCosetCheckDocument) -> None:
        color = "green" if doc.passed else "red"
        self._console.print(
            Panel(
                f"{doc.pairs_checked} pairs (K, H) checked, {len(doc.failures)} failures",
                title=f"Double coset formula over {doc.group}",
                border_style=color,
            )
        )
        for failure in doc.failures:
            self._console.print(f"[red]{escape(failure)}[/red]")

    # ── Filtration ──

    def _print_filtration(self, doc: FiltrationTableDocument) -> None:
        self._console.print(f"[bold]{doc.group}[/bold]: {len(doc.classes)} subgroup classes")
        table = Table(show_header=True, header_style="bold")
        table.add_column("n", justify="right")
        table.add_column("rank I_n", justify="right")
        table.add_column("A/I_n", style="cyan")
        for stage in doc.stages:
            table.add_row(
                str(stage.n),
                str(stage.ideal_rank),
                _describe(stage.quotient.rank, stage.quotient.torsion),
            )
        self._console.print(table)
        self._console.print(f"Stabilization index: {doc.stabilization}")

    def _print_invariants(self, doc: AbelianInvariants) -> None:
        self._console.print(doc.describe())

    def _print_membership(self, doc: MembershipDocument) -> None:
        verdict = "[green]member[/green]" if doc.member else "[red]not a member[/red]"
        self._console.print(f"{list(doc.element)} in stage {doc.n} of {doc.group}: {verdict}")
        if doc.coordinates is not None:
            self._console.print(f"coordinates over the HNF basis: {list(doc.coordinates)}")

    # ── Category ──

    def _term_table(self, terms: tuple[CatTermDocument, ...], *, with_coeff: bool) -> Table:
        table = Table(show_header=True, header_style="bold")
        table.add_column("|L|", justify="right")
        table.add_column("L generators", style="cyan")
        table.add_column("alpha images")
        if with_coeff:
            table.add_column("coeff", justify="right")
        for t in terms:
            row = [str(t.L_order), ", ".join(t.L_gens) or "()", ", ".join(t.alpha_images) or "()"]
            if with_coeff:
                row.append(str(t.coeff))
            table.add_row(*row)
        return table

    def _print_basis(self, doc: CategoryBasisDocument) -> None:
        self._console.print(f"[bold]A({doc.source}, {doc.target})[/bold]: rank {len(doc.pairs)}")
        self._console.print(self._term_table(doc.pairs, with_coeff=False))

    def _print_morphism(self, doc: CatMorphismDocument) -> None:
        self._console.print(f"[bold]{doc.source} -> {doc.target}[/bold]")
        if not doc.terms:
            self._console.print("0")
            return
        self._console.print(self._term_table(doc.terms, with_coeff=True))

    def _print_compose(self, doc: ComposeCheckDocument) -> None:
        color = "green" if doc.passed else "red"
        self._console.print(
            Panel(
                f"{doc.compositions_checked} compositions checked (seed {doc.seed}), "
                f"{len(doc.failures)} failures",
                title=f"{doc.source} -> {doc.middle} -> {doc.target}",
                border_style=color,
            )
        )
        for failure in doc.failures:
            self._console.print(f"[red]{escape(failure)}[/red]")

    # ── Reproduction ──

    def _print_reproduce(self, doc: ReproduceReport) -> None:
        status_color = "green" if doc.all_passed else "red"
        self._console.print(
            Panel(
                f"[bold]{', '.join(doc.examples)}[/bold]: {'PASS' if doc.all_passed else 'FAIL'}",
                title="symprod reproduction report",
                border_style=status_color,
            )
        )
        if not doc.results:
            self._console.print("[dim]No line items.[/dim]")
            return

        table = Table(show_header=True, header_style="bold")
        table.add_column("Example", style="cyan")
        table.add_column("Item", min_width=20)
        table.add_column("Status", justify="center")
        table.add_column("Expected")
        table.add_column("Actual")
        for result in doc.results:
            color = _STATUS_COLORS.get(result.status, "white")
            table.add_row(
                result.suite,
                escape(result.name),
                f"[{color}]{result.status.value.upper()}[/{color}]",
                escape(result.expected),
                escape(result.actual),
            )
        self._console.print(table)

        self._console.print()
        self._console.print(
            " | ".join(
                [
                    f"Total: {len(doc.results)}",
                    f"[green]Passed: {doc.passed}[/green]",
                    f"[red]Failed: {doc.failed}[/red]",
                ]
            )
        )
