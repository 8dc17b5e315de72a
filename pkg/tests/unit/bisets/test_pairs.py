"""Tests for canonical basis pairs of A(G, K)."""

from __future__ import annotations

import pytest

from symprod.bisets.pairs import canonical_pair, category_basis, category_basis_document, pair_from_hom
from symprod.core.exceptions import ResourceBoundError
from symprod.groups import perm
from symprod.groups.homs import GroupHom
from symprod.groups.parser import parse_perm
from symprod.groups.permgroup import PermGroup
from tests.fixtures.groups import make_alternating, make_subgroup, make_symmetric


class TestCategoryBasis:
    """Tests for the rank and order of the canonical basis."""

    def test_from_trivial_group(self, sym4: PermGroup) -> None:
        basis = category_basis(make_symmetric(1), sym4)
        assert len(basis) == 11
        assert [p.position for p in basis] == list(range(11))

    @pytest.mark.parametrize(
        ("target", "rank"),
        [
            (make_symmetric(3), 4),
            (make_symmetric(4), 11),
            pytest.param(make_alternating(5), 9, marks=pytest.mark.slow),
        ],
        ids=["S3", "S4", "A5"],
    )
    def test_trivial_source_rank_is_class_count(self, target: PermGroup, rank: int) -> None:
        assert len(category_basis(make_symmetric(1), target)) == rank

    def test_into_trivial_group(self, sym3: PermGroup) -> None:
        assert len(category_basis(sym3, make_symmetric(1))) == 1

    def test_sym2_endomorphisms(self, sym2: PermGroup) -> None:
        basis = category_basis(sym2, sym2)
        assert len(basis) == 3
        assert basis == sorted(basis)

    def test_hom_bound(self, sym4: PermGroup) -> None:
        with pytest.raises(ResourceBoundError):
            category_basis(sym4, sym4, hom_bound=10)

    def test_document(self, sym2: PermGroup) -> None:
        doc = category_basis_document(sym2, sym2)
        assert doc.source == "Sym(2)"
        assert len(doc.pairs) == 3
        assert doc.pairs[0].L_order == 1
        assert doc.pairs[0].alpha_images == ()


class TestCanonicalPair:
    """Tests for choosing one pair per equivalence class."""

    def test_conjugate_subgroups_give_same_pair(self, sym3: PermGroup) -> None:
        a = make_subgroup(sym3, "(1 2)")
        b = make_subgroup(sym3, "(1 3)")
        pa = canonical_pair(sym3, sym3, a, {x: x for x in a.elements})
        pb = canonical_pair(sym3, sym3, b, {x: x for x in b.elements})
        assert pa == pb

    def test_conjugated_homomorphisms_give_same_pair(self, sym3: PermGroup) -> None:
        g = parse_perm("(1 2 3)", 3)
        identity = GroupHom.identity(sym3)
        twisted = GroupHom(sym3, sym3, [perm.conjugate(g, s) for s in sym3.generators])
        assert pair_from_hom(sym3, identity) == pair_from_hom(sym3, twisted)

    def test_trivial_and_identity_differ(self, sym2: PermGroup) -> None:
        identity = pair_from_hom(sym2, GroupHom.identity(sym2))
        trivial = pair_from_hom(sym2, GroupHom(sym2, sym2, [sym2.identity]))
        assert identity != trivial
        assert identity.position == trivial.position == 1

    def test_term_document(self, sym2: PermGroup) -> None:
        doc = pair_from_hom(sym2, GroupHom.identity(sym2)).to_document(coeff=-2)
        assert doc.L_order == 2
        assert doc.L_gens == ("(1 2)",)
        assert doc.alpha_images == ("(1 2)",)
        assert doc.coeff == -2
