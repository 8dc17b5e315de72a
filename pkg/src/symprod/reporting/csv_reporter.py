"""CSV reporter for computed documents.

Each document type maps to one header row and a list of data rows.
List-valued fields are joined with ``;`` inside a single cell.
"""

from __future__ import annotations

import csv
import io
import logging
from collections.abc import Callable, Iterable, Sequence
from pathlib import Path
from typing import Any

from pydantic import BaseModel

from symprod.core.models import (
    BurnsideElementDocument,
    CategoryBasisDocument,
    CatMorphismDocument,
    CatTermDocument,
    ComposeCheckDocument,
    DoubleCosetCheckDocument,
    FiltrationTableDocument,
    MarkTableDocument,
    MembershipDocument,
    ReproduceReport,
    SubgroupsDocument,
)
from symprod.lattice.basis import AbelianInvariants

logger = logging.getLogger(__name__)

Rows = tuple[list[str], list[list[Any]]]


def _join(values: Iterable[object]) -> str:
    return ";".join(str(v) for v in values)


def _subgroups(doc: SubgroupsDocument) -> Rows:
    headers = ["position", "order", "index", "class_size", "normalizer_order", "weyl_order", "generators"]
    rows = [
        [c.position, c.order, c.index, c.class_size, c.normalizer_order, c.weyl_order, _join(c.generators)]
        for c in doc.classes
    ]
    return headers, rows


def _marks(doc: MarkTableDocument) -> Rows:
    headers = ["class", *(f"class{c.position}" for c in doc.classes)]
    return headers, [[f"class{i}", *row] for i, row in enumerate(doc.marks)]


def _element(doc: BurnsideElementDocument) -> Rows:
    return ["class", "coeff"], [[f"class{i}", c] for i, c in enumerate(doc.coeffs)]


def _double_cosets(doc: DoubleCosetCheckDocument) -> Rows:
    headers = ["group", "pairs_checked", "failure"]
    return headers, [[doc.group, doc.pairs_checked, f] for f in doc.failures or ("",)]


def _filtration(doc: FiltrationTableDocument) -> Rows:
    headers = ["n", "ideal_rank", "rank", "torsion"]
    rows = [[s.n, s.ideal_rank, s.quotient.rank, _join(s.quotient.torsion)] for s in doc.stages]
    return headers, rows


def _invariants(doc: AbelianInvariants) -> Rows:
    return ["rank", "torsion"], [[doc.rank, _join(doc.torsion)]]


def _membership(doc: MembershipDocument) -> Rows:
    headers = ["group", "n", "element", "member", "coordinates"]
    coords = "" if doc.coordinates is None else _join(doc.coordinates)
    return headers, [[doc.group, doc.n, _join(doc.element), str(doc.member).lower(), coords]]


def _term_rows(terms: Sequence[CatTermDocument]) -> list[list[Any]]:
    return [[t.L_order, _join(t.L_gens), _join(t.alpha_images), t.coeff] for t in terms]


def _basis(doc: CategoryBasisDocument) -> Rows:
    return ["L_order", "L_gens", "alpha_images", "coeff"], _term_rows(doc.pairs)


def _morphism(doc: CatMorphismDocument) -> Rows:
    return ["L_order", "L_gens", "alpha_images", "coeff"], _term_rows(doc.terms)


def _compose(doc: ComposeCheckDocument) -> Rows:
    headers = ["source", "middle", "target", "seed", "compositions_checked", "failure"]
    prefix = [doc.source, doc.middle, doc.target, doc.seed, doc.compositions_checked]
    return headers, [[*prefix, f] for f in doc.failures or ("",)]


def _reproduce(doc: ReproduceReport) -> Rows:
    headers = ["suite", "name", "status", "expected", "actual"]
    return headers, [[r.suite, r.name, r.status.value, r.expected, r.actual] for r in doc.results]


_TABLES: dict[type[BaseModel], Callable[[Any], Rows]] = {
    SubgroupsDocument: _subgroups,
    MarkTableDocument: _marks,
    BurnsideElementDocument: _element,
    DoubleCosetCheckDocument: _double_cosets,
    FiltrationTableDocument: _filtration,
    AbelianInvariants: _invariants,
    MembershipDocument: _membership,
    CategoryBasisDocument: _basis,
    CatMorphismDocument: _morphism,
    ComposeCheckDocument: _compose,
    ReproduceReport: _reproduce,
}


class CSVReporter:
    """Reporter that renders documents as CSV tables with one header row."""

    @property
    def name(self) -> str:
        """Return the reporter name."""
        return "csv"

    def render(self, document: BaseModel) -> str:
        """Return the CSV text of ``document``.

        Raises:
            TypeError: If the document type has no tabular layout.
        """
        table = _TABLES.get(type(document))
        if table is None:
            raise TypeError(f"no CSV layout for {type(document).__name__}")
        headers, rows = table(document)
        output = io.StringIO(newline="")
        writer = csv.writer(output, lineterminator="\n")
        writer.writerow(headers)
        writer.writerows(rows)
        return output.getvalue()

    def write(self, document: BaseModel, path: str | Path) -> Path:
        """Write ``document`` as CSV to ``path``."""
        output_path = Path(path)
        output_path.parent.mkdir(parents=True, exist_ok=True)
        output_path.write_text(self.render(document), encoding="utf-8")
        logger.info("CSV report written to %s", output_path)
        return output_path
