"""Subgroup lattice up to conjugacy, conjugacy tests and double cosets.

Subgroups are enumerated by breadth-first generator extension: seed with
every cyclic subgroup, then repeatedly form ⟨H, g⟩ for class
representatives H and elements g ∉ H, deduplicating by the canonical
key (sorted element tuple) of every conjugate. Each class is represented
by its lexicographically least member, and classes are ordered by
(order, key). That order is the basis order of the Burnside ring.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from symprod.core.exceptions import ResourceBoundError, SubgroupError
from symprod.core.models import SubgroupClassDocument, SubgroupsDocument
from symprod.groups import perm
from symprod.groups.perm import Perm
from symprod.groups.permgroup import PermGroup, Subgroup, closure, reduce_generators

logger = logging.getLogger(__name__)

DEFAULT_ORDER_BOUND = 2000


@dataclass(frozen=True)
class SubgroupClass:
    """A conjugacy class of subgroups with normalizer data.

    Attributes:
        position: Index in the deterministic class list.
        representative: Canonical (lexicographically least) member.
        class_size: Number of conjugates.
        normalizer_order: Order of the normalizer of the representative.
        weyl_order: Order of the Weyl group N(H)/H.
        index_in_parent: Index of the representative in the group.
    """

    position: int
    representative: Subgroup
    class_size: int
    normalizer_order: int
    weyl_order: int
    index_in_parent: int

    @property
    def order(self) -> int:
        """Return the order of the subgroups in this class."""
        return self.representative.order


def _conjugacy_orbit(group: PermGroup, sub: Subgroup) -> dict[tuple[Perm, ...], Perm]:
    """Map the key of every conjugate of ``sub`` to an element conjugating ``sub`` onto it."""
    orbit: dict[tuple[Perm, ...], Perm] = {sub.key: group.identity}
    frontier: list[tuple[frozenset[Perm], Perm]] = [(sub.elements, group.identity)]
    while frontier:
        next_frontier: list[tuple[frozenset[Perm], Perm]] = []
        for elements, conjugator in frontier:
            for s in group.generators:
                s_inv = perm.inverse(s)
                image = frozenset(perm.compose(perm.compose(s, x), s_inv) for x in elements)
                key = tuple(sorted(image))
                if key not in orbit:
                    orbit[key] = perm.compose(s, conjugator)
                    next_frontier.append((image, orbit[key]))
        frontier = next_frontier
    return orbit


class SubgroupLattice:
    """All conjugacy classes of subgroups of a finite group.

    Attributes:
        group: The ambient group.
        classes: Classes ordered by (order, canonical key).
    """

    def __init__(self, group: PermGroup) -> None:
        """Enumerate the classes of subgroups of ``group``.

        Args:
            group: The ambient group.
        """
        self._group = group
        found: list[tuple[Subgroup, int]] = []
        member_index: dict[tuple[Perm, ...], int] = {}
        queue: deque[Subgroup] = deque()

        def register(sub: Subgroup) -> None:
            if sub.key in member_index:
                return
            orbit = _conjugacy_orbit(group, sub)
            canonical_key = min(orbit)
            canonical = sub.conjugate(orbit[canonical_key])
            canonical = Subgroup(
                group,
                canonical.elements,
                reduce_generators(group.degree, canonical.generators),
            )
            position = len(found)
            found.append((canonical, len(orbit)))
            for key in orbit:
                member_index[key] = position
            queue.append(canonical)

        for g in group.elements:
            register(Subgroup(group, closure(group.degree, [g]), [g] if g != group.identity else []))

        while queue:
            sub = queue.popleft()
            # ⟨H, g⟩ depends only on the coset gH
            seen: set[Perm] = set(sub.elements)
            for g in group.elements:
                if g in seen:
                    continue
                seen.update(perm.compose(g, h) for h in sub.elements)
                gens = (*sub.generators, g)
                register(Subgroup(group, closure(group.degree, gens), gens))

        ordering = sorted(range(len(found)), key=lambda i: (found[i][0].order, found[i][0].key))
        remap = {old: new for new, old in enumerate(ordering)}
        classes: list[SubgroupClass] = []
        for new, old in enumerate(ordering):
            rep, size = found[old]
            normalizer_order = group.order // size
            classes.append(
                SubgroupClass(
                    position=new,
                    representative=rep,
                    class_size=size,
                    normalizer_order=normalizer_order,
                    weyl_order=normalizer_order // rep.order,
                    index_in_parent=group.order // rep.order,
                )
            )
        self._classes = tuple(classes)
        self._member_index = {key: remap[pos] for key, pos in member_index.items()}
        logger.info(
            "%s: %d subgroups in %d conjugacy classes",
            group.label,
            len(self._member_index),
            len(self._classes),
        )

    @property
    def group(self) -> PermGroup:
        """Return the ambient group."""
        return self._group

    @property
    def classes(self) -> tuple[SubgroupClass, ...]:
        """Return the ordered class list."""
        return self._classes

    @property
    def subgroup_count(self) -> int:
        """Return the total number of subgroups."""
        return len(self._member_index)

    def __len__(self) -> int:
        return len(self._classes)

    def class_of(self, sub: Subgroup) -> int:
        """Return the position of the class containing ``sub``.

        Raises:
            SubgroupError: If ``sub`` is not a subgroup of the group.
        """
        position = self._member_index.get(sub.key)
        if position is None:
            raise SubgroupError(f"{sub!r} is not a subgroup of {self._group.label}")
        return position

    def representative(self, position: int) -> Subgroup:
        """Return the representative of the class at ``position``."""
        return self._classes[position].representative

    def trivial_position(self) -> int:
        """Return the position of the trivial subgroup (always 0)."""
        return 0

    def whole_position(self) -> int:
        """Return the position of the whole group (always last)."""
        return len(self._classes) - 1


@lru_cache(maxsize=256)
def _cached_lattice(group: PermGroup) -> SubgroupLattice:
    return SubgroupLattice(group)


def subgroup_lattice(group: PermGroup, bound: int = DEFAULT_ORDER_BOUND) -> SubgroupLattice:
    """Return the (memoized) subgroup lattice of ``group``.

    Raises:
        ResourceBoundError: If the group order exceeds ``bound``.
    """
    if group.order > bound:
        raise ResourceBoundError("group order", group.order, bound)
    return _cached_lattice(group)


def subgroup_classes(group: PermGroup, bound: int = DEFAULT_ORDER_BOUND) -> list[SubgroupClass]:
    """Return the conjugacy classes of subgroups in basis order.

    Args:
        group: The ambient group.
        bound: Largest permitted group order.

    Returns:
        Classes ordered by (subgroup order, canonical key).

    Raises:
        ResourceBoundError: If the group order exceeds ``bound``.
    """
    return list(subgroup_lattice(group, bound).classes)


def _require_subgroup(group: PermGroup, sub: Subgroup) -> None:
    if not sub.elements <= group.element_set:
        raise SubgroupError(f"{sub!r} is not a subgroup of {group.label}")


def conjugator(group: PermGroup, h: Subgroup, k: Subgroup) -> Perm | None:
    """Return the least ``g`` with ``g H g⁻¹ = K``, or None.

    Raises:
        SubgroupError: If H or K is not a subgroup of the group.
    """
    _require_subgroup(group, h)
    _require_subgroup(group, k)
    if h.order != k.order:
        return None
    for g in group.elements:
        if all(perm.conjugate(g, x) in k for x in h.generators):
            return g
    return None


def is_conjugate(group: PermGroup, h: Subgroup, k: Subgroup) -> bool:
    """Return True iff some ``g`` in the group satisfies ``g H g⁻¹ = K``.

    Raises:
        SubgroupError: If H or K is not a subgroup of the group.
    """
    return conjugator(group, h, k) is not None


def normalizer(group: PermGroup, sub: Subgroup) -> Subgroup:
    """Return the normalizer of ``sub`` in ``group``."""
    _require_subgroup(group, sub)
    members = [g for g in group.elements if all(perm.conjugate(g, x) in sub for x in sub.generators)]
    return Subgroup(group, frozenset(members), reduce_generators(group.degree, members))


def double_cosets(group: PermGroup, k: Subgroup, h: Subgroup) -> list[tuple[Perm, int]]:
    """Partition the group into K-H double cosets.

    Args:
        group: The ambient group G.
        k: Left subgroup K.
        h: Right subgroup H.

    Returns:
        Pairs (representative, size) where each representative is the
        lexicographically least element of its double coset KgH.

    Raises:
        SubgroupError: If K or H is not a subgroup of G.
    """
    _require_subgroup(group, k)
    _require_subgroup(group, h)
    assigned: set[Perm] = set()
    result: list[tuple[Perm, int]] = []
    for g in group.elements:
        if g in assigned:
            continue
        coset = {perm.compose(perm.compose(x, g), y) for x in k.elements for y in h.elements}
        assigned |= coset
        result.append((g, len(coset)))
    return result


def min_proper_index(group: PermGroup, bound: int = DEFAULT_ORDER_BOUND) -> int | None:
    """Return the least index of a proper subgroup, or None for the trivial group."""
    classes = subgroup_classes(group, bound)
    indices = [c.index_in_parent for c in classes if c.index_in_parent > 1]
    return min(indices, default=None)


def subgroups_document(group: PermGroup, bound: int = DEFAULT_ORDER_BOUND) -> SubgroupsDocument:
    """Return the JSON document listing every subgroup class of ``group``."""
    lattice = subgroup_lattice(group, bound)
    return SubgroupsDocument(
        group=group.label,
        order=group.order,
        subgroup_count=lattice.subgroup_count,
        classes=class_documents(lattice),
    )


def class_documents(lattice: SubgroupLattice) -> tuple[SubgroupClassDocument, ...]:
    """Return one descriptor per class, in basis order."""
    return tuple(
        SubgroupClassDocument(
            position=c.position,
            order=c.order,
            index=c.index_in_parent,
            class_size=c.class_size,
            normalizer_order=c.normalizer_order,
            weyl_order=c.weyl_order,
            generators=tuple(perm.format_cycles(g) for g in c.representative.generators),
        )
        for c in lattice.classes
    )
