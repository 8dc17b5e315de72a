"""Exact integer normal forms.

Row-style Hermite normal form is computed here with Python integers:
pivots move left to right, each column is cleared by repeated Euclidean
steps against the row with the smallest non-zero entry, pivots are made
positive and the entries above each pivot are reduced into [0, pivot).
Smith invariant factors come from sympy's ``invariant_factors`` over ZZ.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from math import gcd

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

logger = logging.getLogger(__name__)

IntRow = tuple[int, ...]


def hermite_rows(ambient_rank: int, generators: Sequence[Sequence[int]]) -> tuple[IntRow, ...]:
    """Return the row-style Hermite normal form basis of the span of ``generators``.

    Args:
        ambient_rank: Length of every vector.
        generators: Integer vectors (lengths are assumed checked by the caller).

    Returns:
        Linearly independent rows in echelon form with positive pivots and
        entries above each pivot reduced into ``[0, pivot)``.
    """
    pending = [list(v) for v in generators if any(v)]
    basis: list[list[int]] = []
    pivots: list[int] = []
    for col in range(ambient_rank):
        active = [row for row in pending if row[col] != 0]
        if not active:
            continue
        rest = [row for row in pending if row[col] == 0]
        while len(active) > 1:
            active.sort(key=lambda row: abs(row[col]))
            pivot = active[0]
            reduced = [pivot]
            for row in active[1:]:
                q = row[col] // pivot[col]
                new_row = [a - q * b for a, b in zip(row, pivot, strict=True)]
                if new_row[col] != 0:
                    reduced.append(new_row)
                elif any(new_row):
                    rest.append(new_row)
            active = reduced
        pivot = active[0]
        if pivot[col] < 0:
            pivot = [-a for a in pivot]
        basis.append(pivot)
        pivots.append(col)
        pending = rest

    for i, col in enumerate(pivots):
        row = basis[i]
        for j in range(i):
            q = basis[j][col] // row[col]
            if q:
                basis[j] = [a - q * b for a, b in zip(basis[j], row, strict=True)]

    logger.debug("HNF: %d generators -> %d rows", len(generators), len(basis))
    return tuple(tuple(row) for row in basis)


def _divisibility_chain(factors: Sequence[int]) -> list[int]:
    """Normalize a diagonal into d₁ | d₂ | … by pairwise gcd/lcm exchange."""
    diag = sorted(abs(f) for f in factors)
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            a, b = diag[i], diag[j]
            g = gcd(a, b)
            if g != a:
                diag[i], diag[j] = g, a * b // g
    return diag


def smith_invariants(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Return the non-zero diagonal d₁ | d₂ | … of the Smith normal form.

    Zero rows and columns contribute nothing; unit factors are kept, so
    the identity matrix of size n yields n ones.
    """
    rows = [list(row) for row in matrix]
    if not rows or not rows[0]:
        return []
    shape = (len(rows), len(rows[0]))
    dm = DomainMatrix([[ZZ(v) for v in row] for row in rows], shape, ZZ)
    factors = [int(f) for f in invariant_factors(dm)]
    return _divisibility_chain([f for f in factors if f != 0])
