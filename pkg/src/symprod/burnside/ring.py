"""The Burnside ring A(G) over its canonical subgroup-class basis.

The basis element at position i is the G-set G/H for the class
representative H at position i of the subgroup lattice. Coefficients
are Python integers, so no intermediate value can overflow.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from functools import cached_property, lru_cache

from symprod.core.exceptions import GroupMismatchError, ResourceBoundError
from symprod.core.models import BurnsideElementDocument
from symprod.groups import perm
from symprod.groups.lattice import DEFAULT_ORDER_BOUND, SubgroupLattice, subgroup_lattice
from symprod.groups.perm import Perm
from symprod.groups.permgroup import PermGroup, Subgroup

logger = logging.getLogger(__name__)


class BurnsideRing:
    """The Burnside ring of a finite permutation group.

    Attributes:
        group: The group G.
        lattice: The subgroup lattice fixing the basis order.
    """

    def __init__(self, group: PermGroup, bound: int = DEFAULT_ORDER_BOUND) -> None:
        self._group = group
        self._lattice = subgroup_lattice(group, bound)
        self._cosets: dict[int, tuple[dict[Perm, int], tuple[Perm, ...]]] = {}

    @property
    def group(self) -> PermGroup:
        """Return the group."""
        return self._group

    @property
    def lattice(self) -> SubgroupLattice:
        """Return the subgroup lattice."""
        return self._lattice

    @property
    def rank(self) -> int:
        """Return the number of basis elements."""
        return len(self._lattice)

    def zero(self) -> BurnsideElement:
        """Return 0."""
        return BurnsideElement(self._group, (0,) * self.rank)

    def one(self) -> BurnsideElement:
        """Return the unit [G/G]."""
        return self.basis(self._lattice.whole_position())

    def basis(self, position: int) -> BurnsideElement:
        """Return the basis element at ``position``."""
        coeffs = [0] * self.rank
        coeffs[position] = 1
        return BurnsideElement(self._group, tuple(coeffs))

    def coset_space(self, sub: Subgroup) -> BurnsideElement:
        """Return [G/H] for an arbitrary subgroup H."""
        return self.basis(self._lattice.class_of(sub))

    def element(self, coeffs: Sequence[int]) -> BurnsideElement:
        """Wrap a coefficient vector in basis order.

        Raises:
            GroupMismatchError: If the vector length differs from the rank.
        """
        if len(coeffs) != self.rank:
            raise GroupMismatchError("element", f"{self.rank} coefficients", f"{len(coeffs)}")
        return BurnsideElement(self._group, tuple(int(c) for c in coeffs))

    @cached_property
    def mark_table(self) -> tuple[tuple[int, ...], ...]:
        """Return the table of marks: entry (L, H) = |(G/H)^L|."""
        classes = self._lattice.classes
        table: list[tuple[int, ...]] = []
        for row_class in classes:
            row_rep = row_class.representative
            row: list[int] = []
            for col_class in classes:
                col_rep = col_class.representative
                if col_rep.order % row_rep.order:
                    row.append(0)
                    continue
                fixing = sum(
                    1
                    for g in self._group.elements
                    if all(perm.conjugate(g, x) in col_rep for x in row_rep.generators)
                )
                row.append(fixing // col_rep.order)
            table.append(tuple(row))
        logger.debug("Computed %dx%d table of marks for %s", len(table), len(table), self._group.label)
        return tuple(table)

    def cosets(self, position: int) -> tuple[dict[Perm, int], tuple[Perm, ...]]:
        """Return the left cosets gH of the representative at ``position``.

        Returns:
            A lookup from element to coset number and the least element of each coset.
        """
        if position in self._cosets:
            return self._cosets[position]
        rep = self._lattice.representative(position)
        lookup: dict[Perm, int] = {}
        leaders: list[Perm] = []
        for g in self._group.elements:
            if g in lookup:
                continue
            number = len(leaders)
            leaders.append(g)
            for h in rep.elements:
                lookup[perm.compose(g, h)] = number
        self._cosets[position] = (lookup, tuple(leaders))
        return self._cosets[position]


@lru_cache(maxsize=256)
def _cached_ring(group: PermGroup) -> BurnsideRing:
    return BurnsideRing(group, group.order)


def burnside_ring(group: PermGroup, bound: int = DEFAULT_ORDER_BOUND) -> BurnsideRing:
    """Return the (memoized) Burnside ring of ``group``.

    Raises:
        ResourceBoundError: If the group order exceeds ``bound``.
    """
    if group.order > bound:
        raise ResourceBoundError("group order", group.order, bound)
    return _cached_ring(group)


class BurnsideElement:
    """An element of A(G): an integer vector over the subgroup-class basis.

    Attributes:
        group: The group G.
        coeffs: Coefficients in basis order.
    """

    __slots__ = ("_coeffs", "_group")

    def __init__(self, group: PermGroup, coeffs: tuple[int, ...]) -> None:
        self._group = group
        self._coeffs = coeffs

    @property
    def group(self) -> PermGroup:
        """Return the group."""
        return self._group

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Return the coefficient vector."""
        return self._coeffs

    @property
    def ring(self) -> BurnsideRing:
        """Return the ambient Burnside ring."""
        return burnside_ring(self._group, self._group.order)

    def is_zero(self) -> bool:
        """Return True for the zero element."""
        return not any(self._coeffs)

    def terms(self) -> Iterable[tuple[int, int]]:
        """Yield (position, coefficient) for non-zero coefficients."""
        return ((i, c) for i, c in enumerate(self._coeffs) if c)

    def _check_same(self, other: BurnsideElement, operation: str) -> None:
        if other._group != self._group:
            raise GroupMismatchError(operation, self._group.label, other._group.label)

    def __add__(self, other: BurnsideElement) -> BurnsideElement:
        self._check_same(other, "add")
        return BurnsideElement(
            self._group, tuple(a + b for a, b in zip(self._coeffs, other._coeffs, strict=True))
        )

    def __sub__(self, other: BurnsideElement) -> BurnsideElement:
        self._check_same(other, "subtract")
        return BurnsideElement(
            self._group, tuple(a - b for a, b in zip(self._coeffs, other._coeffs, strict=True))
        )

    def __neg__(self) -> BurnsideElement:
        return BurnsideElement(self._group, tuple(-a for a in self._coeffs))

    def __rmul__(self, scalar: int) -> BurnsideElement:
        return BurnsideElement(self._group, tuple(scalar * a for a in self._coeffs))

    def to_document(self) -> BurnsideElementDocument:
        """Return the JSON document for this element."""
        return BurnsideElementDocument(group=self._group.label, coeffs=self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BurnsideElement):
            return NotImplemented
        return self._group == other._group and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._group, self._coeffs))

    def __repr__(self) -> str:
        return f"BurnsideElement({self._group.label}, {list(self._coeffs)})"
