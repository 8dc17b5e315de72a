"""Integer sublattices in Hermite normal form and quotient invariants.

A LatticeBasis is the canonical HNF of a sublattice of ℤ^m, so two
sublattices are equal exactly when their bases are equal. All
operations are exact.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from math import prod
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from symprod.core.exceptions import DimensionError, LatticeError
from symprod.lattice.normal_forms import hermite_rows, smith_invariants

logger = logging.getLogger(__name__)


class AbelianInvariants(BaseModel):
    """Isomorphism type of a finitely generated abelian group ℤ^rank ⊕ ⊕ ℤ/dᵢ.

    Attributes:
        rank: Free rank.
        torsion: Invariant factors, each ≥ 2, with d₁ | d₂ | … | d_k.
    """

    model_config = ConfigDict(strict=True, frozen=True, extra="forbid")

    rank: int = Field(ge=0)
    torsion: tuple[int, ...] = ()

    @model_validator(mode="after")
    def _check_chain(self) -> AbelianInvariants:
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"torsion factors must be >= 2, got {d}")
        for a, b in zip(self.torsion, self.torsion[1:], strict=False):
            if b % a:
                raise ValueError(f"torsion factors must form a divisibility chain: {a} does not divide {b}")
        return self

    @property
    def torsion_order(self) -> int:
        """Return the order of the torsion subgroup."""
        return prod(self.torsion)

    def describe(self) -> str:
        """Render as e.g. ``Z^3 + Z/3``."""
        parts = [f"Z^{self.rank}"] if self.rank else []
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) or "0"


class LatticeBasis(BaseModel):
    """A sublattice of ℤ^ambient_rank, stored as its Hermite normal form.

    Attributes:
        ambient_rank: Dimension of the ambient lattice.
        rows: HNF rows: echelon, positive pivots, entries above pivots in [0, pivot).
    """

    model_config = ConfigDict(strict=True, frozen=True, extra="forbid")

    ambient_rank: int = Field(ge=0)
    rows: tuple[tuple[int, ...], ...] = ()

    @model_validator(mode="after")
    def _check_hnf(self) -> LatticeBasis:
        previous = -1
        for row in self.rows:
            if len(row) != self.ambient_rank:
                raise ValueError(f"row length {len(row)} differs from ambient rank {self.ambient_rank}")
            nonzero = [i for i, a in enumerate(row) if a]
            if not nonzero or nonzero[0] <= previous:
                raise ValueError("rows are not in echelon form")
            col = nonzero[0]
            if row[col] <= 0:
                raise ValueError("pivots must be positive")
            previous = col
        for i, row in enumerate(self.rows):
            col = self.pivots[i]
            for above in self.rows[:i]:
                if not 0 <= above[col] < row[col]:
                    raise ValueError("entries above pivots must be reduced")
        return self

    @property
    def rank(self) -> int:
        """Return the rank of the sublattice."""
        return len(self.rows)

    @property
    def pivots(self) -> tuple[int, ...]:
        """Return the pivot column of each row."""
        return tuple(next(i for i, a in enumerate(row) if a) for row in self.rows)

    @property
    def covolume(self) -> int:
        """Return the product of the pivots."""
        return prod(row[col] for row, col in zip(self.rows, self.pivots, strict=True))


def _check_length(ambient_rank: int, vector: Sequence[int]) -> None:
    if len(vector) != ambient_rank:
        raise DimensionError(ambient_rank, len(vector))


def hnf_basis(ambient_rank: int, generators: Sequence[Sequence[int]]) -> LatticeBasis:
    """Return the canonical HNF basis of the lattice spanned by ``generators``.

    Raises:
        DimensionError: If a generator has the wrong length.
    """
    for v in generators:
        _check_length(ambient_rank, v)
    return LatticeBasis(ambient_rank=ambient_rank, rows=hermite_rows(ambient_rank, generators))


def zero_lattice(ambient_rank: int) -> LatticeBasis:
    """Return the zero sublattice."""
    return LatticeBasis(ambient_rank=ambient_rank)


def coordinates(lattice: LatticeBasis, vector: Sequence[int]) -> tuple[int, ...] | None:
    """Express ``vector`` over the HNF rows by back-substitution.

    Returns:
        Integer coefficients ``c`` with ``Σ cᵢ·rowsᵢ = vector``, or None
        if the vector is not in the lattice.

    Raises:
        DimensionError: If the vector has the wrong length.
    """
    _check_length(lattice.ambient_rank, vector)
    residual = list(vector)
    coeffs: list[int] = []
    for row, col in zip(lattice.rows, lattice.pivots, strict=True):
        if any(residual[:col]):
            return None
        q, r = divmod(residual[col], row[col])
        if r:
            return None
        coeffs.append(q)
        if q:
            residual = [a - q * b for a, b in zip(residual, row, strict=True)]
    if any(residual):
        return None
    return tuple(coeffs)


def contains(lattice: LatticeBasis, vector: Sequence[int]) -> bool:
    """Return True iff ``vector`` lies in the lattice.

    Raises:
        DimensionError: If the vector has the wrong length.
    """
    return coordinates(lattice, vector) is not None


def saturation_contains(lattice: LatticeBasis, vector: Sequence[int]) -> bool:
    """Return True iff some non-zero multiple of ``vector`` lies in the lattice.

    Equivalently, the vector lies in the rational span of the lattice.

    Raises:
        DimensionError: If the vector has the wrong length.
    """
    _check_length(lattice.ambient_rank, vector)
    extended = hermite_rows(lattice.ambient_rank, [*lattice.rows, tuple(vector)])
    return len(extended) == lattice.rank


def quotient_invariants(ambient_rank: int, lattice: LatticeBasis) -> AbelianInvariants:
    """Return the invariants of ℤ^ambient_rank / lattice.

    Raises:
        DimensionError: If the lattice lives in a different ambient rank.
    """
    if lattice.ambient_rank != ambient_rank:
        raise DimensionError(ambient_rank, lattice.ambient_rank)
    factors = smith_invariants(lattice.rows)
    return AbelianInvariants(
        rank=ambient_rank - lattice.rank,
        torsion=tuple(d for d in factors if d > 1),
    )


def is_sublattice(inner: LatticeBasis, outer: LatticeBasis) -> bool:
    """Return True iff ``inner ⊆ outer``."""
    if inner.ambient_rank != outer.ambient_rank:
        raise DimensionError(outer.ambient_rank, inner.ambient_rank)
    return all(contains(outer, row) for row in inner.rows)


def lattice_sum(first: LatticeBasis, second: LatticeBasis) -> LatticeBasis:
    """Return the sum of two sublattices."""
    if first.ambient_rank != second.ambient_rank:
        raise DimensionError(first.ambient_rank, second.ambient_rank)
    return hnf_basis(first.ambient_rank, [*first.rows, *second.rows])


def sublattice_index(inner: LatticeBasis, outer: LatticeBasis) -> int | Literal["infinite"]:
    """Return ``[outer : inner]``.

    Returns:
        The finite index, or ``"infinite"`` when ``inner`` has smaller rank.

    Raises:
        LatticeError: If ``inner`` is not contained in ``outer``.
    """
    if not is_sublattice(inner, outer):
        raise LatticeError("sublattice_index requires the first lattice to lie in the second")
    if inner.rank < outer.rank:
        return "infinite"
    # equal rational spans share pivot columns
    return inner.covolume // outer.covolume

