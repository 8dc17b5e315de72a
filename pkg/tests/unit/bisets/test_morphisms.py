"""Tests for bisets, composition and evaluation in the Burnside category."""

from __future__ import annotations

import random

import pytest

from symprod.bisets.biset import balanced_product, orbit_pairs, pair_to_biset
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
from symprod.bisets.pairs import PairLA, category_basis
from symprod.burnside.operations import restrict, restrict_to, transfer
from symprod.burnside.ring import burnside_ring
from symprod.core.exceptions import GroupMismatchError, ResourceBoundError
from symprod.groups.homs import sign_hom
from symprod.groups.lattice import subgroup_lattice
from symprod.groups.parser import parse_perm
from symprod.groups.permgroup import PermGroup
from tests.fixtures.groups import make_config, make_cyclic, make_subgroup, make_symmetric


class TestBisets:
    """Tests for biset construction and orbit decomposition."""

    def test_pair_biset_is_valid(self, sym3: PermGroup) -> None:
        for pair in category_basis(sym3, sym3):
            biset = pair_to_biset(pair)
            biset.validate()
            assert orbit_pairs(biset) == {pair: 1}

    def test_biset_size(self, sym3: PermGroup) -> None:
        pair = category_basis(sym3, sym3)[0]
        assert pair_to_biset(pair).size == 36

    def test_disjoint_union(self, sym2: PermGroup) -> None:
        a, b = category_basis(sym2, sym2)[:2]
        union = pair_to_biset(a) + pair_to_biset(b)
        assert orbit_pairs(union) == {a: 1, b: 1}
        assert biset_decompose(sym2, sym2, union) == basis_morphism(a) + basis_morphism(b)

    def test_size_bound(self, sym3: PermGroup) -> None:
        with pytest.raises(ResourceBoundError):
            pair_to_biset(category_basis(sym3, sym3)[0], bound=10)

    def test_balanced_product_middle_group(self, sym2: PermGroup, sym3: PermGroup) -> None:
        outer = pair_to_biset(category_basis(sym2, sym2)[0])
        inner = pair_to_biset(category_basis(sym3, sym3)[0])
        with pytest.raises(GroupMismatchError):
            balanced_product(outer, inner)


class TestMorphismArithmetic:
    """Tests for the abelian group A(G, K)."""

    def test_zero_terms_dropped(self, sym2: PermGroup) -> None:
        f = basis_morphism(category_basis(sym2, sym2)[0])
        assert (f - f).is_zero()
        assert (2 * f).terms == {category_basis(sym2, sym2)[0]: 2}

    def test_parallel_required(self, sym2: PermGroup, sym3: PermGroup) -> None:
        with pytest.raises(GroupMismatchError):
            _ = identity_morphism(sym2) + identity_morphism(sym3)

    def test_document(self, sym2: PermGroup) -> None:
        doc = (3 * identity_morphism(sym2)).to_document()
        assert doc.source == doc.target == "Sym(2)"
        assert [t.coeff for t in doc.terms] == [3]


class TestComposition:
    """Tests for composition by balanced product."""

    def test_identity_is_unit(self, sym3: PermGroup) -> None:
        c2 = make_subgroup(sym3, "(1 2)")
        tr = transfer_morphism(sym3, c2)
        assert compose(identity_morphism(sym3), tr) == tr
        assert compose(tr, identity_morphism(c2.as_group())) == tr

    def test_double_coset_formula(self, sym3: PermGroup) -> None:
        k = make_subgroup(sym3, "(1 2)")
        h = make_subgroup(sym3, "(1 2 3)")
        composed = compose(restriction_morphism(sym3, k), transfer_morphism(sym3, h))
        assert composed == double_coset_morphism(sym3, k, h)

    def test_double_coset_formula_same_subgroup(self, sym3: PermGroup) -> None:
        c2 = make_subgroup(sym3, "(1 2)")
        composed = compose(restriction_morphism(sym3, c2), transfer_morphism(sym3, c2))
        assert composed == double_coset_morphism(sym3, c2, c2)
        assert sum(composed.terms.values()) == 2

    def test_restriction_then_transfer_is_multiplication(self, sym3: PermGroup) -> None:
        c3 = make_subgroup(sym3, "(1 2 3)")
        composed = compose(transfer_morphism(sym3, c3), restriction_morphism(sym3, c3))
        ring = burnside_ring(sym3)
        for i in range(ring.rank):
            x = ring.basis(i)
            assert evaluate(composed, x) == transfer(sym3, c3, restrict_to(sym3, c3, x))

    def test_source_target_mismatch(self, sym2: PermGroup, sym3: PermGroup) -> None:
        with pytest.raises(GroupMismatchError):
            compose(identity_morphism(sym2), identity_morphism(sym3))


class TestEvaluation:
    """Tests for the action of A(G, K) on Burnside rings."""

    def test_transfer(self, sym3: PermGroup) -> None:
        c2 = make_subgroup(sym3, "(1 2)")
        one = burnside_ring(c2.as_group()).one()
        assert evaluate(transfer_morphism(sym3, c2), one) == transfer(sym3, c2, one)

    def test_restriction(self, sym4: PermGroup) -> None:
        sub = make_subgroup(sym4, "(1 2 3 4)", "(1 3)")
        ring = burnside_ring(sym4)
        for i in range(ring.rank):
            x = ring.basis(i)
            assert evaluate(restriction_morphism(sym4, sub), x) == restrict_to(sym4, sub, x)

    def test_restriction_along_sign(self, sym2: PermGroup, sym3: PermGroup) -> None:
        sign = sign_hom(sym3)
        x = burnside_ring(sym2).basis(0)
        assert evaluate(restriction_along(sym3, sign), x) == restrict(sign, x)

    def test_conjugation_acts_trivially_on_units(self, sym3: PermGroup) -> None:
        c2 = make_subgroup(sym3, "(1 2)")
        g = parse_perm("(1 3)", 3)
        morphism = conjugation_morphism(c2, g)
        target = c2.conjugate(g).as_group()
        assert evaluate(morphism, burnside_ring(c2.as_group()).one()) == burnside_ring(target).one()

    def test_wrong_source(self, sym2: PermGroup, sym3: PermGroup) -> None:
        with pytest.raises(GroupMismatchError):
            evaluate(identity_morphism(sym3), burnside_ring(sym2).one())

    def test_zero_morphism(self, sym2: PermGroup) -> None:
        zero = CatMorphism(sym2, sym2)
        assert evaluate(zero, burnside_ring(sym2).one()).is_zero()


class TestComposeCheck:
    """Tests for the sampled category-law check."""

    def test_sym2_cube(self, sym2: PermGroup) -> None:
        doc = compose_check(sym2, sym2, sym2)
        assert doc.passed
        assert doc.compositions_checked == 9
        assert doc.seed == 0

    def test_sampling(self, sym2: PermGroup, sym3: PermGroup) -> None:
        doc = compose_check(sym3, sym2, sym2, make_config(seed=7, samples=2))
        assert doc.passed
        assert doc.compositions_checked == 2
        assert doc.seed == 7


def _basis_morphisms(source: PermGroup, target: PermGroup) -> list[CatMorphism]:
    return [basis_morphism(p) for p in category_basis(source, target)]


class TestCategoryLaws:
    """Exhaustive and seeded checks of the category structure."""

    @pytest.mark.parametrize("group", [make_symmetric(3), make_symmetric(4)], ids=["S3", "S4"])
    def test_double_coset_formula_all_pairs(self, group: PermGroup) -> None:
        reps = [c.representative for c in subgroup_lattice(group).classes]
        for k in reps:
            for h in reps:
                composed = compose(restriction_morphism(group, k), transfer_morphism(group, h))
                assert composed == double_coset_morphism(group, k, h)

    @pytest.mark.parametrize(
        ("source", "target"),
        [(make_symmetric(2), make_symmetric(2)), (make_symmetric(2), make_symmetric(3))],
        ids=["S2-S2", "S2-S3"],
    )
    def test_identity_is_unit_on_every_basis_pair(self, source: PermGroup, target: PermGroup) -> None:
        for f in _basis_morphisms(source, target):
            assert compose(identity_morphism(target), f) == f
            assert compose(f, identity_morphism(source)) == f

    @pytest.mark.parametrize(
        "chain",
        [
            (make_symmetric(2), make_symmetric(2), make_symmetric(2), make_symmetric(2)),
            (make_symmetric(2), make_symmetric(2), make_symmetric(2), make_symmetric(3)),
            (make_symmetric(2), make_symmetric(3), make_symmetric(2), make_symmetric(2)),
        ],
        ids=["S2-S2-S2-S2", "S2-S2-S2-S3", "S2-S3-S2-S2"],
    )
    def test_associative_on_every_basis_triple(self, chain: tuple[PermGroup, ...]) -> None:
        first, second, third, fourth = chain
        for h in _basis_morphisms(first, second):
            for g in _basis_morphisms(second, third):
                for f in _basis_morphisms(third, fourth):
                    assert compose(f, compose(g, h)) == compose(compose(f, g), h)

    def test_evaluation_is_functorial(self) -> None:
        rng = random.Random(2024)
        groups = [make_symmetric(1), make_symmetric(2), make_symmetric(3), make_cyclic(3)]
        bases: dict[tuple[int, int], list[PairLA]] = {}

        def random_morphism(i: int, j: int) -> CatMorphism:
            if (i, j) not in bases:
                bases[i, j] = category_basis(groups[i], groups[j])
            pairs = rng.sample(bases[i, j], min(2, len(bases[i, j])))
            return CatMorphism(groups[i], groups[j], {p: rng.randint(-3, 3) for p in pairs})

        for _ in range(100):
            i, j, k = (rng.randrange(len(groups)) for _ in range(3))
            f, g = random_morphism(i, j), random_morphism(j, k)
            ring = burnside_ring(groups[i])
            x = ring.element([rng.randint(-3, 3) for _ in range(ring.rank)])
            assert evaluate(compose(g, f), x) == evaluate(g, evaluate(f, x))
