"""The finite global Burnside category: pairs, bisets and composition."""

from symprod.bisets.biset import DEFAULT_BISET_BOUND, Biset, balanced_product, orbit_pairs, pair_to_biset
from symprod.bisets.checks import compose_check
from symprod.bisets.morphisms import (
    CatMorphism,
    basis_morphism,
    biset_decompose,
    compose,
    conjugation_morphism,
    double_coset_morphism,
    evaluate,
    identity_morphism,
    restriction_along,
    restriction_morphism,
    transfer_morphism,
)
from symprod.bisets.pairs import PairLA, canonical_pair, category_basis, category_basis_document, pair_from_hom

__all__ = [
    "DEFAULT_BISET_BOUND",
    "Biset",
    "CatMorphism",
    "PairLA",
    "balanced_product",
    "basis_morphism",
    "biset_decompose",
    "canonical_pair",
    "category_basis",
    "category_basis_document",
    "compose",
    "compose_check",
    "conjugation_morphism",
    "double_coset_morphism",
    "evaluate",
    "identity_morphism",
    "orbit_pairs",
    "pair_from_hom",
    "pair_to_biset",
    "restriction_along",
    "restriction_morphism",
    "transfer_morphism",
]
