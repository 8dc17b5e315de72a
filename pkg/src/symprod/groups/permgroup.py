"""Finite permutation groups and their subgroups.

Closure and membership run on sympy's ``PermutationGroup``. Groups are
immutable after construction: the full element set is enumerated when
the group is built, and every derived value (hash, sorted elements,
subgroup-as-group) is memoized idempotently.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Sequence

from sympy.combinatorics import PermutationGroup

from symprod.core.exceptions import (
    InvariantViolationError,
    PermutationError,
    ResourceBoundError,
    SubgroupError,
)
from symprod.groups import perm
from symprod.groups.perm import Perm

logger = logging.getLogger(__name__)


def sympy_group(degree: int, generators: Iterable[Perm]) -> PermutationGroup:
    """Return the sympy group generated by image tuples of the given degree."""
    gens = [perm.as_permutation(g) for g in generators]
    return PermutationGroup(gens or [perm.as_permutation(perm.identity(degree))])


def closure(
    degree: int,
    generators: Sequence[Perm],
    limit: int | None = None,
) -> frozenset[Perm]:
    """Return the group generated by ``generators``.

    The order is read off a base and strong generating set before any
    element is enumerated.

    Args:
        degree: Degree of the permutations.
        generators: Generating permutations.
        limit: Largest permitted group order, or None for no limit.

    Returns:
        The element set of the generated group.

    Raises:
        ResourceBoundError: If the generated group has more than ``limit`` elements.
    """
    identity = perm.identity(degree)
    gens = [g for g in generators if g != identity]
    if not gens:
        return frozenset({identity})
    group = sympy_group(degree, gens)
    order = int(group.order())
    if limit is not None and order > limit:
        raise ResourceBoundError("group order", order, limit)
    return frozenset(tuple(images) for images in group.generate(af=True))


def _check_divides(order: int, parent_order: int, what: str) -> None:
    if order == 0 or parent_order % order:
        raise InvariantViolationError(f"{what} of order {order} does not divide {parent_order}")


def _spec_for(degree: int, generators: Sequence[Perm]) -> str:
    """Render a ``Perm(...)`` spec string that rebuilds the given group."""
    rendered = [perm.format_cycles(g) for g in generators if g != perm.identity(degree)]
    return f"Perm({degree}; {', '.join(rendered or ['(1)'])})"


class PermGroup:
    """A finite permutation group with its full element set.

    Attributes:
        degree: Number of points acted on.
        generators: The generating permutations.
        elements: All elements, sorted lexicographically by image array.
        order: Number of elements.
        label: The spec string the group was built from.
    """

    __slots__ = ("_degree", "_element_set", "_elements", "_generators", "_hash", "_label")

    def __init__(
        self,
        degree: int,
        generators: Sequence[Sequence[int]],
        *,
        label: str | None = None,
        elements: frozenset[Perm] | None = None,
        bound: int | None = None,
    ) -> None:
        """Build the group generated by ``generators``.

        Args:
            degree: Number of points (positive).
            generators: 0-based image arrays.
            label: Spec string; generated from the generators if omitted.
            elements: Precomputed element set (trusted, e.g. from a subgroup).
            bound: Largest permitted order while closing the generators.

        Raises:
            PermutationError: If a generator is not a permutation of the points.
            ResourceBoundError: If the generated group exceeds ``bound``.
            InvariantViolationError: If a generator's order does not divide the group order.
        """
        if degree < 1:
            raise PermutationError(f"degree must be positive, got {degree}")
        gens: list[Perm] = []
        for g in generators:
            if not perm.is_permutation(g, degree):
                raise PermutationError(f"{list(g)} is not a permutation of {degree} points")
            gens.append(tuple(g))
        self._degree = degree
        self._generators = tuple(gens)
        self._element_set = elements if elements is not None else closure(degree, gens, limit=bound)
        self._elements = tuple(sorted(self._element_set))
        self._label = label or _spec_for(degree, gens)
        self._hash = hash((degree, self._element_set))
        for g in gens:
            _check_divides(perm.order(g), len(self._elements), f"generator {perm.format_cycles(g)}")
        logger.debug("Built group %s of order %d", self._label, len(self._elements))

    @property
    def degree(self) -> int:
        """Return the number of points."""
        return self._degree

    @property
    def generators(self) -> tuple[Perm, ...]:
        """Return the generating permutations."""
        return self._generators

    @property
    def elements(self) -> tuple[Perm, ...]:
        """Return all elements in lexicographic order."""
        return self._elements

    @property
    def element_set(self) -> frozenset[Perm]:
        """Return the element set."""
        return self._element_set

    @property
    def order(self) -> int:
        """Return the group order."""
        return len(self._elements)

    @property
    def identity(self) -> Perm:
        """Return the identity element."""
        return perm.identity(self._degree)

    @property
    def label(self) -> str:
        """Return the spec string describing this group."""
        return self._label

    def __contains__(self, item: object) -> bool:
        return item in self._element_set

    def __iter__(self) -> Iterator[Perm]:
        return iter(self._elements)

    def __len__(self) -> int:
        return len(self._elements)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self._degree == other._degree and self._element_set == other._element_set

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"PermGroup({self._label}, order={self.order})"

    def subgroup(self, generators: Iterable[Perm]) -> Subgroup:
        """Return the subgroup generated by elements of this group.

        Raises:
            SubgroupError: If a generator is not an element of this group.
        """
        return Subgroup.generated_by(self, generators)

    def whole(self) -> Subgroup:
        """Return the group as a subgroup of itself."""
        return Subgroup(self, self._element_set, self._generators)

    def trivial(self) -> Subgroup:
        """Return the trivial subgroup."""
        return Subgroup(self, frozenset({self.identity}), ())


class Subgroup:
    """A subgroup of a PermGroup, stored by element set.

    Two subgroups compare equal when their element sets agree. The
    canonical key is the sorted element tuple.

    Attributes:
        parent: The ambient group.
        elements: The element set.
        generators: A small generating list.
    """

    __slots__ = ("_elements", "_generators", "_group", "_key", "_parent")

    def __init__(
        self,
        parent: PermGroup,
        elements: frozenset[Perm],
        generators: Sequence[Perm],
    ) -> None:
        self._parent = parent
        self._elements = elements
        self._generators = tuple(generators)
        self._key: tuple[Perm, ...] | None = None
        self._group: PermGroup | None = None

    @classmethod
    def generated_by(cls, parent: PermGroup, generators: Iterable[Perm]) -> Subgroup:
        """Build the subgroup of ``parent`` generated by ``generators``.

        Raises:
            SubgroupError: If a generator is not an element of ``parent``.
            InvariantViolationError: If the subgroup order does not divide the parent order.
        """
        gens = tuple(tuple(g) for g in generators)
        for g in gens:
            if g not in parent:
                raise SubgroupError(f"{perm.format_cycles(g)} is not an element of {parent.label}")
        gens = tuple(g for g in gens if g != parent.identity)
        elements = closure(parent.degree, gens)
        _check_divides(len(elements), parent.order, "subgroup")
        return cls(parent, elements, gens)

    @classmethod
    def from_elements(cls, parent: PermGroup, elements: Iterable[Perm]) -> Subgroup:
        """Validate an explicit element set and wrap it as a subgroup.

        A finite set containing the identity is a subgroup exactly when the
        group it generates has no further elements.

        Raises:
            SubgroupError: If the set is not a subgroup of ``parent``.
            InvariantViolationError: If the subgroup order does not divide the parent order.
        """
        element_set = frozenset(tuple(x) for x in elements)
        if not element_set <= parent.element_set:
            raise SubgroupError(f"elements are not contained in {parent.label}")
        if parent.identity not in element_set:
            raise SubgroupError("subset does not contain the identity")
        generators = reduce_generators(parent.degree, sorted(element_set))
        if closure(parent.degree, generators) != element_set:
            raise SubgroupError("subset is not closed under composition")
        _check_divides(len(element_set), parent.order, "subgroup")
        return cls(parent, element_set, generators)

    @property
    def parent(self) -> PermGroup:
        """Return the ambient group."""
        return self._parent

    @property
    def elements(self) -> frozenset[Perm]:
        """Return the element set."""
        return self._elements

    @property
    def generators(self) -> tuple[Perm, ...]:
        """Return the generating list."""
        return self._generators

    @property
    def order(self) -> int:
        """Return the subgroup order."""
        return len(self._elements)

    @property
    def key(self) -> tuple[Perm, ...]:
        """Return the canonical key: the sorted element tuple."""
        if self._key is None:
            self._key = tuple(sorted(self._elements))
        return self._key

    @property
    def index(self) -> int:
        """Return the index in the parent group."""
        return self._parent.order // self.order

    def as_group(self) -> PermGroup:
        """Return this subgroup as a PermGroup in its own right."""
        if self._group is None:
            if self._elements == self._parent.element_set:
                self._group = self._parent
            else:
                self._group = PermGroup(
                    self._parent.degree,
                    self._generators,
                    elements=self._elements,
                )
        return self._group

    def conjugate(self, g: Perm) -> Subgroup:
        """Return ``g H g⁻¹`` with conjugated generators."""
        elements = frozenset(perm.conjugate(g, x) for x in self._elements)
        gens = tuple(perm.conjugate(g, x) for x in self._generators)
        return Subgroup(self._parent, elements, gens)

    def is_subgroup_of(self, other: Subgroup | PermGroup) -> bool:
        """Check containment in another subgroup or group."""
        container = other.elements if isinstance(other, Subgroup) else other.element_set
        return self._elements <= container

    def within(self, parent: PermGroup) -> Subgroup:
        """Re-home this subgroup inside another ambient group containing it.

        Raises:
            SubgroupError: If the elements do not lie in ``parent``.
        """
        if not self._elements <= parent.element_set:
            raise SubgroupError(f"subgroup of order {self.order} is not contained in {parent.label}")
        return Subgroup(parent, self._elements, self._generators)

    def describe(self) -> str:
        """Return the generators in cycle notation, comma separated."""
        if not self._generators:
            return "()"
        return ", ".join(perm.format_cycles(g) for g in self._generators)

    def __contains__(self, item: object) -> bool:
        return item in self._elements

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self._elements == other._elements

    def __hash__(self) -> int:
        return hash(self._elements)

    def __repr__(self) -> str:
        return f"Subgroup(<{self.describe()}>, order={self.order})"


def reduce_generators(degree: int, generators: Sequence[Perm]) -> tuple[Perm, ...]:
    """Greedily drop generators already contained in the span of the kept ones."""
    identity = perm.identity(degree)
    kept: list[Perm] = []
    span: PermutationGroup | None = None
    for g in generators:
        if g == identity or (span is not None and span.contains(perm.as_permutation(g))):
            continue
        kept.append(g)
        span = sympy_group(degree, kept)
    return tuple(kept)
