"""Tests for homomorphisms between permutation groups."""

from __future__ import annotations

import itertools

import pytest

from symprod.core.exceptions import HomomorphismError, ResourceBoundError, SubgroupError
from symprod.groups import perm
from symprod.groups.homs import (
    GroupHom,
    coset_action_hom,
    enumerate_homs,
    left_cosets,
    sign_hom,
)
from symprod.groups.parser import parse_perm
from symprod.groups.perm import Perm
from symprod.groups.permgroup import PermGroup
from tests.fixtures.groups import make_cyclic, make_subgroup, make_symmetric


def _orbit(target: PermGroup, images: tuple[Perm, ...]) -> set[tuple[Perm, ...]]:
    return {tuple(perm.conjugate(g, x) for x in images) for g in target.elements}


class TestGroupHom:
    """Tests for building and verifying homomorphisms."""

    def test_identity(self, sym3: PermGroup) -> None:
        hom = GroupHom.identity(sym3)
        assert hom.verify_exhaustive()
        assert hom.is_surjective()
        assert hom.kernel().order == 1

    def test_inconsistent_images(self, sym3: PermGroup) -> None:
        c3 = make_cyclic(3)
        with pytest.raises(HomomorphismError, match="do not extend"):
            GroupHom(c3, sym3, [parse_perm("(1 2)", 3)])

    def test_wrong_number_of_images(self, sym3: PermGroup) -> None:
        with pytest.raises(HomomorphismError, match="expected 2"):
            GroupHom(sym3, sym3, [sym3.identity])

    def test_image_outside_target(self, sym3: PermGroup) -> None:
        c3 = make_cyclic(3)
        with pytest.raises(HomomorphismError, match="not in"):
            GroupHom(c3, sym3, [(1, 2, 3, 0)])

    def test_inclusion(self, sym4: PermGroup) -> None:
        sub = make_subgroup(sym4, "(1 2 3 4)")
        hom = GroupHom.inclusion(sub, sym4)
        assert hom.source.order == 4
        assert hom.image() == sub.within(sym4)
        assert not hom.is_surjective()

    def test_inclusion_rejects_foreign_subgroup(self, sym3: PermGroup, sym4: PermGroup) -> None:
        with pytest.raises(SubgroupError):
            GroupHom.inclusion(make_subgroup(sym4, "(1 4)"), sym3)

    def test_conjugation_is_automorphism(self, sym3: PermGroup) -> None:
        hom = GroupHom.conjugation(sym3, parse_perm("(1 2)", 3))
        assert hom.verify_exhaustive()
        assert hom.is_surjective()

    def test_compose_and_restrict(self, sym3: PermGroup) -> None:
        sign = sign_hom(sym3)
        c3 = make_subgroup(sym3, "(1 2 3)")
        restricted = sign.restrict_to(c3)
        assert restricted.kernel().order == 3
        composed = sign.compose(GroupHom.identity(sym3))
        assert composed == sign

    def test_compose_mismatch(self, sym3: PermGroup, sym4: PermGroup) -> None:
        with pytest.raises(HomomorphismError, match="cannot compose"):
            GroupHom.identity(sym3).compose(GroupHom.identity(sym4))

    def test_preimage(self, sym3: PermGroup) -> None:
        sign = sign_hom(sym3)
        assert sign.kernel() == make_subgroup(sym3, "(1 2 3)")
        assert sign.preimage(sign.target.element_set).order == 6


class TestSignHom:
    """Tests for the parity homomorphism."""

    def test_sign_of_sym4(self, sym4: PermGroup) -> None:
        sign = sign_hom(sym4)
        assert sign.kernel().order == 12
        assert sign.target == make_symmetric(2)

    def test_even_group_maps_trivially(self, alt4: PermGroup) -> None:
        assert sign_hom(alt4).kernel().order == 12


class TestEnumerateHoms:
    """Tests for homomorphism search up to conjugation."""

    @pytest.mark.parametrize(
        ("source", "target", "count"),
        [
            (make_cyclic(2), make_symmetric(3), 2),
            (make_cyclic(3), make_symmetric(3), 2),
            (make_symmetric(3), make_symmetric(2), 2),
            (make_symmetric(3), make_symmetric(3), 3),
            (make_symmetric(1), make_symmetric(4), 1),
        ],
    )
    def test_counts(self, source: PermGroup, target: PermGroup, count: int) -> None:
        homs = enumerate_homs(source, target)
        assert len(homs) == count
        assert all(h.verify_exhaustive() for h in homs)

    def test_sorted_by_images(self, sym3: PermGroup) -> None:
        homs = enumerate_homs(sym3, sym3)
        images = [h.images for h in homs]
        assert images == sorted(images)
        assert images[0] == (sym3.identity, sym3.identity)

    def test_bound(self, sym4: PermGroup) -> None:
        with pytest.raises(ResourceBoundError):
            enumerate_homs(sym4, sym4, bound=10)

    @pytest.mark.parametrize(
        ("source", "target"),
        [
            (make_symmetric(3), make_symmetric(3)),
            (make_symmetric(3), make_symmetric(4)),
            (make_symmetric(4), make_symmetric(4)),
        ],
        ids=["S3-S3", "S3-S4", "S4-S4"],
    )
    def test_every_hom_listed_once_up_to_conjugation(self, source: PermGroup, target: PermGroup) -> None:
        listed = {h.images for h in enumerate_homs(source, target)}
        for images in listed:
            assert images == min(_orbit(target, images))
        for images in itertools.product(target.elements, repeat=len(source.generators)):
            try:
                GroupHom(source, target, images)
            except HomomorphismError:
                continue
            assert len(_orbit(target, images) & listed) == 1


class TestCosetAction:
    """Tests for the action on left cosets."""

    def test_left_cosets(self, sym3: PermGroup) -> None:
        cosets = left_cosets(sym3, make_subgroup(sym3, "(1 2)"))
        assert len(cosets) == 3
        assert sym3.identity in cosets[0]

    def test_action_on_point_stabilizer_cosets(self, sym4: PermGroup) -> None:
        stabilizer = make_subgroup(sym4, "(1 2 3)", "(1 2)")
        beta = coset_action_hom(sym4, stabilizer)
        assert beta.target == make_symmetric(4)
        assert beta.kernel().order == 1
        assert beta.is_surjective()

    def test_action_kernel_is_core(self, sym3: PermGroup) -> None:
        beta = coset_action_hom(sym3, make_subgroup(sym3, "(1 2 3)"))
        assert beta.target == make_symmetric(2)
        assert beta.kernel().order == 3

    def test_factorial_bound(self, sym4: PermGroup) -> None:
        with pytest.raises(ResourceBoundError):
            coset_action_hom(sym4, sym4.trivial(), bound=1000)
