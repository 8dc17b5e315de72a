"""Exact integer lattices: Hermite and Smith normal forms, membership, saturation, index."""

from symprod.lattice.basis import (
    AbelianInvariants,
    LatticeBasis,
    contains,
    coordinates,
    hnf_basis,
    is_sublattice,
    lattice_sum,
    quotient_invariants,
    saturation_contains,
    sublattice_index,
    zero_lattice,
)
from symprod.lattice.normal_forms import hermite_rows, smith_invariants

__all__ = [
    "AbelianInvariants",
    "LatticeBasis",
    "contains",
    "coordinates",
    "hermite_rows",
    "hnf_basis",
    "is_sublattice",
    "lattice_sum",
    "quotient_invariants",
    "saturation_contains",
    "smith_invariants",
    "sublattice_index",
    "zero_lattice",
]
