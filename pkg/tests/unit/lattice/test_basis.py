"""Tests for HNF sublattices, membership and quotient invariants."""

from __future__ import annotations

import random
from math import prod

import pytest
from pydantic import ValidationError
from sympy import Matrix

from symprod.core.exceptions import DimensionError, LatticeError
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


class TestHermiteRows:
    """Tests for the canonical echelon basis."""

    def test_reduces_dependent_generators(self) -> None:
        rows = hermite_rows(3, [[2, 4, 0], [0, 0, 0], [1, 2, 3]])
        assert rows == ((1, 2, 3), (0, 0, 6))

    def test_negative_pivots_flipped(self) -> None:
        assert hermite_rows(2, [[-3, 0], [0, -2]]) == ((3, 0), (0, 2))

    def test_entries_above_pivot_reduced(self) -> None:
        assert hermite_rows(2, [[1, 5], [0, 3]]) == ((1, 2), (0, 3))

    def test_generator_order_does_not_matter(self) -> None:
        a = hermite_rows(3, [[1, 1, 0], [0, 2, 2], [3, 0, 1]])
        b = hermite_rows(3, [[3, 0, 1], [1, 1, 0], [0, 2, 2]])
        assert a == b

    def test_empty(self) -> None:
        assert hermite_rows(3, []) == ()


class TestSmithInvariants:
    """Tests for invariant factors."""

    def test_coprime_factors_merge(self) -> None:
        assert smith_invariants([[2, 0], [0, 3]]) == [1, 6]

    def test_divisibility_chain(self) -> None:
        assert smith_invariants([[4, 0], [0, 6]]) == [2, 12]

    def test_empty(self) -> None:
        assert smith_invariants([]) == []


class TestLatticeBasis:
    """Tests for the validated HNF model."""

    def test_properties(self) -> None:
        lattice = hnf_basis(3, [[2, 4, 0], [1, 2, 3]])
        assert lattice.rank == 2
        assert lattice.pivots == (0, 2)
        assert lattice.covolume == 6

    def test_rejects_non_echelon_rows(self) -> None:
        with pytest.raises(ValidationError):
            LatticeBasis(ambient_rank=2, rows=((0, 1), (1, 0)))

    def test_rejects_unreduced_rows(self) -> None:
        with pytest.raises(ValidationError):
            LatticeBasis(ambient_rank=2, rows=((1, 5), (0, 3)))

    def test_equal_spans_equal_bases(self) -> None:
        assert hnf_basis(2, [[2, 0], [0, 2]]) == hnf_basis(2, [[2, 2], [0, 2], [2, 0]])

    def test_wrong_length_generator(self) -> None:
        with pytest.raises(DimensionError):
            hnf_basis(3, [[1, 2]])


class TestMembership:
    """Tests for exact and rational membership."""

    @pytest.fixture
    def lattice(self) -> LatticeBasis:
        return hnf_basis(3, [[2, 4, 0], [1, 2, 3]])

    def test_contains(self, lattice: LatticeBasis) -> None:
        assert contains(lattice, [3, 6, 9])
        assert not contains(lattice, [1, 2, 0])

    def test_coordinates(self, lattice: LatticeBasis) -> None:
        assert coordinates(lattice, [1, 2, 9]) == (1, 1)
        assert coordinates(lattice, [0, 1, 0]) is None

    def test_saturation(self, lattice: LatticeBasis) -> None:
        assert saturation_contains(lattice, [1, 2, 0])
        assert not saturation_contains(lattice, [0, 1, 0])

    def test_zero_vector_always_member(self, lattice: LatticeBasis) -> None:
        assert contains(zero_lattice(3), [0, 0, 0])
        assert coordinates(lattice, [0, 0, 0]) == (0, 0)

    def test_dimension_mismatch(self, lattice: LatticeBasis) -> None:
        with pytest.raises(DimensionError):
            contains(lattice, [1, 2])


class TestQuotients:
    """Tests for quotient invariants and indices."""

    def test_free_quotient(self) -> None:
        inv = quotient_invariants(3, hnf_basis(3, [[1, 0, 0]]))
        assert inv == AbelianInvariants(rank=2)

    def test_torsion_quotient(self) -> None:
        inv = quotient_invariants(2, hnf_basis(2, [[2, 0], [0, 3]]))
        assert inv.rank == 0
        assert inv.torsion == (6,)
        assert inv.torsion_order == 6

    def test_describe(self) -> None:
        assert AbelianInvariants(rank=1, torsion=(3,)).describe() == "Z^1 + Z/3"
        assert AbelianInvariants(rank=0).describe() == "0"

    def test_invariants_validate_chain(self) -> None:
        with pytest.raises(ValidationError):
            AbelianInvariants(rank=0, torsion=(2, 3))
        with pytest.raises(ValidationError):
            AbelianInvariants(rank=0, torsion=(1,))

    def test_quotient_ambient_mismatch(self) -> None:
        with pytest.raises(DimensionError):
            quotient_invariants(3, zero_lattice(2))

    def test_index(self) -> None:
        outer = hnf_basis(2, [[1, 0], [0, 1]])
        inner = hnf_basis(2, [[2, 0], [0, 3]])
        assert is_sublattice(inner, outer)
        assert sublattice_index(inner, outer) == 6

    def test_infinite_index(self) -> None:
        outer = hnf_basis(2, [[1, 0], [0, 1]])
        inner = hnf_basis(2, [[1, 0]])
        assert sublattice_index(inner, outer) == "infinite"

    def test_index_requires_containment(self) -> None:
        with pytest.raises(LatticeError):
            sublattice_index(hnf_basis(2, [[1, 0]]), hnf_basis(2, [[2, 0]]))

    def test_sum(self) -> None:
        total = lattice_sum(hnf_basis(2, [[2, 0]]), hnf_basis(2, [[3, 0], [0, 1]]))
        assert total == hnf_basis(2, [[1, 0], [0, 1]])


def _random_matrix(rng: random.Random, rows: int, cols: int, spread: int = 6) -> list[list[int]]:
    return [[rng.randint(-spread, spread) for _ in range(cols)] for _ in range(rows)]


class TestRandomized:
    """Seeded randomized checks of the normal forms against direct computation."""

    def test_smith_product_is_determinant(self) -> None:
        rng = random.Random(20240611)
        checked = 0
        while checked < 40:
            size = rng.randint(1, 4)
            matrix = _random_matrix(rng, size, size)
            det = int(Matrix(matrix).det())
            if det == 0:
                continue
            assert prod(smith_invariants(matrix)) == abs(det)
            checked += 1

    def test_hermite_rows_idempotent(self) -> None:
        rng = random.Random(7)
        for _ in range(40):
            gens = _random_matrix(rng, rng.randint(1, 5), 4)
            rows = hermite_rows(4, gens)
            assert hermite_rows(4, rows) == rows

    def test_hermite_rows_ignore_redundant_combinations(self) -> None:
        rng = random.Random(11)
        for _ in range(40):
            gens = _random_matrix(rng, 3, 4)
            coeffs = [rng.randint(-3, 3) for _ in gens]
            extra = [sum(c * row[i] for c, row in zip(coeffs, gens, strict=True)) for i in range(4)]
            assert hermite_rows(4, [*gens, extra]) == hermite_rows(4, gens)

    def test_contains_matches_exhaustive_search(self) -> None:
        rng = random.Random(3)
        span = range(-45, 46)
        for _ in range(8):
            p, q = rng.choice([-4, -3, -2, -1, 1, 2, 3, 4]), rng.choice([-4, -3, -2, -1, 1, 2, 3, 4])
            g1 = (p, rng.randint(-4, 4), rng.randint(-4, 4))
            g2 = (0, q, rng.randint(-4, 4))
            lattice = hnf_basis(3, [g1, g2])
            members = {tuple(a * u + b * v for u, v in zip(g1, g2, strict=True)) for a in span for b in span}
            for _ in range(25):
                a, b = rng.randint(-3, 3), rng.randint(-3, 3)
                vector = [a * u + b * v for u, v in zip(g1, g2, strict=True)]
                vector[rng.randrange(3)] += rng.choice([-1, 0, 1])
                assert contains(lattice, vector) == (tuple(vector) in members)
