"""Homomorphisms between permutation groups.

A GroupHom is given by images of the source generators and extended to
the whole source by breadth-first search over words. Construction
checks φ(s·x) = φ(s)·φ(x) for every generator s and every element x;
together with φ(e) = e this forces φ(x·y) = φ(x)·φ(y) for all pairs,
so every GroupHom in existence is a verified homomorphism.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Mapping, Sequence
from math import factorial

from symprod.core.exceptions import HomomorphismError, ResourceBoundError, SubgroupError
from symprod.groups import perm
from symprod.groups.parser import symmetric_group
from symprod.groups.perm import Perm
from symprod.groups.permgroup import PermGroup, Subgroup

logger = logging.getLogger(__name__)

DEFAULT_HOM_BOUND = 120


def _extend(
    source: PermGroup,
    target: PermGroup,
    images: Sequence[Perm],
) -> dict[Perm, Perm] | None:
    """Extend generator images to a full map, or return None if inconsistent."""
    full: dict[Perm, Perm] = {source.identity: target.identity}
    frontier = [source.identity]
    pairs = list(zip(source.generators, images, strict=True))
    while frontier:
        next_frontier: list[Perm] = []
        for x in frontier:
            fx = full[x]
            for s, image in pairs:
                y = perm.compose(s, x)
                fy = perm.compose(image, fx)
                known = full.get(y)
                if known is None:
                    full[y] = fy
                    next_frontier.append(y)
                elif known != fy:
                    return None
        frontier = next_frontier
    return full


class GroupHom:
    """A verified homomorphism between permutation groups.

    Attributes:
        source: The domain group.
        target: The codomain group.
        images: Images of ``source.generators``, in order.
    """

    __slots__ = ("_full", "_images", "_source", "_target")

    def __init__(self, source: PermGroup, target: PermGroup, images: Sequence[Perm]) -> None:
        """Build and verify a homomorphism from generator images.

        Raises:
            HomomorphismError: If the images do not define a homomorphism.
        """
        if len(images) != len(source.generators):
            raise HomomorphismError(
                f"expected {len(source.generators)} generator images, got {len(images)}"
            )
        imgs = tuple(tuple(x) for x in images)
        for image in imgs:
            if image not in target:
                raise HomomorphismError(f"{perm.format_cycles(image)} is not in {target.label}")
        full = _extend(source, target, imgs)
        if full is None or len(full) != source.order:
            raise HomomorphismError(
                f"generator images do not extend to a homomorphism {source.label} -> {target.label}"
            )
        self._source = source
        self._target = target
        self._images = imgs
        self._full = full

    @classmethod
    def from_map(cls, source: PermGroup, target: PermGroup, mapping: Mapping[Perm, Perm]) -> GroupHom:
        """Build a homomorphism from a map defined at least on the source generators."""
        return cls(source, target, [mapping[s] for s in source.generators])

    @classmethod
    def identity(cls, group: PermGroup) -> GroupHom:
        """Return the identity homomorphism."""
        return cls(group, group, group.generators)

    @classmethod
    def inclusion(cls, sub: Subgroup | PermGroup, group: PermGroup) -> GroupHom:
        """Return the inclusion of a subgroup into ``group``.

        Raises:
            SubgroupError: If the subgroup does not lie in ``group``.
        """
        source = sub.as_group() if isinstance(sub, Subgroup) else sub
        if not source.element_set <= group.element_set:
            raise SubgroupError(f"{source.label} is not a subgroup of {group.label}")
        return cls(source, group, source.generators)

    @classmethod
    def conjugation(cls, group: PermGroup, g: Perm) -> GroupHom:
        """Return the inner automorphism ``c_g(h) = g⁻¹ h g``."""
        g_inv = perm.inverse(g)
        return cls(group, group, [perm.conjugate(g_inv, s) for s in group.generators])

    @property
    def source(self) -> PermGroup:
        """Return the domain group."""
        return self._source

    @property
    def target(self) -> PermGroup:
        """Return the codomain group."""
        return self._target

    @property
    def images(self) -> tuple[Perm, ...]:
        """Return the images of the source generators."""
        return self._images

    @property
    def full_map(self) -> Mapping[Perm, Perm]:
        """Return the map on all source elements."""
        return self._full

    def __call__(self, x: Perm) -> Perm:
        return self._full[x]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupHom):
            return NotImplemented
        return (
            self._source == other._source
            and self._target == other._target
            and all(self._full[s] == other._full[s] for s in self._source.generators)
        )

    def __hash__(self) -> int:
        return hash((self._source, self._target, frozenset(self._full.items())))

    def __repr__(self) -> str:
        rendered = ", ".join(
            f"{perm.format_cycles(s)}->{perm.format_cycles(t)}"
            for s, t in zip(self._source.generators, self._images, strict=True)
        )
        return f"GroupHom({self._source.label} -> {self._target.label}: {rendered})"

    def compose(self, inner: GroupHom) -> GroupHom:
        """Return ``self ∘ inner``.

        Raises:
            HomomorphismError: If ``inner.target`` differs from ``self.source``.
        """
        if inner.target != self._source:
            raise HomomorphismError("cannot compose: codomain and domain differ")
        return GroupHom(inner.source, self._target, [self._full[x] for x in inner.images])

    def restrict_to(self, sub: Subgroup | PermGroup) -> GroupHom:
        """Restrict the homomorphism to a subgroup of its source."""
        source = sub.as_group() if isinstance(sub, Subgroup) else sub
        if not source.element_set <= self._source.element_set:
            raise SubgroupError(f"{source.label} is not a subgroup of {self._source.label}")
        return GroupHom(source, self._target, [self._full[s] for s in source.generators])

    def preimage(self, elements: frozenset[Perm]) -> Subgroup:
        """Return ``φ⁻¹`` of a subgroup of the target, as a subgroup of the source."""
        members = frozenset(x for x, y in self._full.items() if y in elements)
        return Subgroup.from_elements(self._source, members)

    def kernel(self) -> Subgroup:
        """Return the kernel."""
        return self.preimage(frozenset({self._target.identity}))

    def image(self) -> Subgroup:
        """Return the image as a subgroup of the target."""
        return self._target.subgroup(self._images)

    def is_surjective(self) -> bool:
        """Return True if the image is the whole target."""
        return len(set(self._full.values())) == self._target.order

    def verify_exhaustive(self) -> bool:
        """Check ``φ(xy) = φ(x)φ(y)`` on every pair of source elements."""
        return all(
            self._full[perm.compose(x, y)] == perm.compose(self._full[x], self._full[y])
            for x in self._source.elements
            for y in self._source.elements
        )


def _conjugate_images(group: PermGroup, images: tuple[Perm, ...]) -> set[tuple[Perm, ...]]:
    return {tuple(perm.conjugate(g, x) for x in images) for g in group.elements}


def enumerate_homs(
    source: PermGroup,
    target: PermGroup,
    bound: int = DEFAULT_HOM_BOUND,
) -> list[GroupHom]:
    """Enumerate homomorphisms ``source -> target`` up to conjugation in the target.

    Brute force over generator images whose orders divide the orders of
    the corresponding generators. Each returned homomorphism carries the
    lexicographically least image tuple within its conjugacy class, and
    the list is sorted by that tuple.

    Raises:
        ResourceBoundError: If either group order exceeds ``bound``.
    """
    for group in (source, target):
        if group.order > bound:
            raise ResourceBoundError("homomorphism search group order", group.order, bound)

    candidates = [
        [t for t in target.elements if perm.order(s) % perm.order(t) == 0]
        for s in source.generators
    ]
    seen: set[tuple[Perm, ...]] = set()
    representatives: list[tuple[Perm, ...]] = []
    for images in itertools.product(*candidates):
        if images in seen:
            continue
        if _extend(source, target, images) is None:
            continue
        orbit = _conjugate_images(target, images)
        seen |= orbit
        representatives.append(min(orbit))
    representatives.sort()
    logger.debug(
        "%d conjugacy classes of homomorphisms %s -> %s",
        len(representatives),
        source.label,
        target.label,
    )
    return [GroupHom(source, target, images) for images in representatives]


def sign_hom(group: PermGroup) -> GroupHom:
    """Return the parity homomorphism onto ``Sym(2)``."""
    target = PermGroup(2, [(1, 0)], label="Sym(2)")
    odd, even = (1, 0), (0, 1)
    return GroupHom(group, target, [odd if perm.sign(s) < 0 else even for s in group.generators])


def left_cosets(group: PermGroup, sub: Subgroup) -> list[frozenset[Perm]]:
    """Return the left cosets gH, ordered by their least element."""
    assigned: set[Perm] = set()
    cosets: list[frozenset[Perm]] = []
    for g in group.elements:
        if g in assigned:
            continue
        coset = frozenset(perm.compose(g, h) for h in sub.elements)
        assigned |= coset
        cosets.append(coset)
    return cosets


def coset_action_hom(group: PermGroup, sub: Subgroup, bound: int = 2000) -> GroupHom:
    """Return β: H -> Sym([H:K]) from left translation on the cosets H/K.

    Cosets are numbered by their least element, so ``H/K`` is isomorphic
    to ``β*{1..m}`` as an H-set with the coset ``K`` at point 1.

    Raises:
        SubgroupError: If ``sub`` is not a subgroup of ``group``.
        ResourceBoundError: If ``m!`` exceeds ``bound``.
    """
    if not sub.elements <= group.element_set:
        raise SubgroupError(f"{sub!r} is not a subgroup of {group.label}")
    cosets = left_cosets(group, sub)
    m = len(cosets)
    if factorial(m) > bound:
        raise ResourceBoundError("symmetric group order", factorial(m), bound)
    lookup = {g: i for i, coset in enumerate(cosets) for g in coset}
    representatives = [min(coset) for coset in cosets]
    target = symmetric_group(m)
    images = [
        tuple(lookup[perm.compose(s, rep)] for rep in representatives) for s in group.generators
    ]
    return GroupHom(group, target, images)
