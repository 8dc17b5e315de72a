"""Whole-group checks and documents for Burnside rings."""

from __future__ import annotations

import logging

from symprod.burnside.operations import res_tr_formula, restrict_to, transfer
from symprod.burnside.ring import burnside_ring
from symprod.core.models import DoubleCosetCheckDocument, MarkTableDocument
from symprod.groups.lattice import DEFAULT_ORDER_BOUND, class_documents, subgroup_lattice
from symprod.groups.permgroup import PermGroup

logger = logging.getLogger(__name__)


def double_coset_check(group: PermGroup, bound: int = DEFAULT_ORDER_BOUND) -> DoubleCosetCheckDocument:
    """Compare the double coset formula with direct orbit decomposition.

    For every ordered pair (K, H) of class representatives, the element
    res^G_K(tr_H^G(1)) is computed both ways and compared exactly.

    Args:
        group: The ambient group G.
        bound: Largest permitted group order.

    Returns:
        A document listing every pair where the two sides differ.

    Raises:
        ResourceBoundError: If the group order exceeds ``bound``.
    """
    lattice = subgroup_lattice(group, bound)
    failures: list[str] = []
    checked = 0
    for i in range(len(lattice)):
        k = lattice.representative(i)
        for j in range(len(lattice)):
            h = lattice.representative(j)
            h_group = h.as_group()
            formula = res_tr_formula(group, k, h)
            direct = restrict_to(group, k, transfer(group, h, burnside_ring(h_group, h_group.order).one()))
            checked += 1
            if formula != direct:
                failures.append(f"K=class{i}, H=class{j}: formula {list(formula.coeffs)} != direct {list(direct.coeffs)}")
    if failures:
        logger.warning("Double coset formula failed on %d of %d pairs in %s", len(failures), checked, group.label)
    else:
        logger.info("Double coset formula holds on all %d pairs in %s", checked, group.label)
    return DoubleCosetCheckDocument(group=group.label, pairs_checked=checked, failures=tuple(failures))


def mark_table_document(group: PermGroup, bound: int = DEFAULT_ORDER_BOUND) -> MarkTableDocument:
    """Return the subgroup classes of ``group`` with its table of marks."""
    ring = burnside_ring(group, bound)
    return MarkTableDocument(
        group=group.label,
        classes=class_documents(ring.lattice),
        marks=ring.mark_table,
    )
