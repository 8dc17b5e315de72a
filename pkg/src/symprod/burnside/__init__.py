"""Burnside rings A(G) with transfer, restriction and marks."""

from symprod.burnside.checks import double_coset_check, mark_table_document
from symprod.burnside.operations import (
    augmentation,
    conjugate_element,
    from_marks,
    mark_table,
    marks,
    multiply,
    res_tr_formula,
    restrict,
    restrict_to,
    transfer,
)
from symprod.burnside.ring import BurnsideElement, BurnsideRing, burnside_ring

__all__ = [
    "BurnsideElement",
    "BurnsideRing",
    "augmentation",
    "burnside_ring",
    "conjugate_element",
    "double_coset_check",
    "from_marks",
    "mark_table",
    "mark_table_document",
    "marks",
    "multiply",
    "res_tr_formula",
    "restrict",
    "restrict_to",
    "transfer",
]
