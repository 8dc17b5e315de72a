"""Transfer, restriction, multiplication and marks on Burnside rings.

Restriction along a homomorphism α: K → G decomposes G/H into K-orbits
under k·gH = α(k)gH; the orbit through gH contributes K/α⁻¹(gHg⁻¹).
Transfer re-identifies each subgroup class of H inside G. Products use
[G/H]·[G/K] = tr_H^G(res^G_H [G/K]).
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from functools import lru_cache

from symprod.burnside.ring import BurnsideElement, BurnsideRing, burnside_ring
from symprod.core.exceptions import DomainError, GroupMismatchError, SubgroupError
from symprod.groups import perm
from symprod.groups.homs import GroupHom
from symprod.groups.lattice import double_cosets
from symprod.groups.perm import Perm
from symprod.groups.permgroup import PermGroup, Subgroup

logger = logging.getLogger(__name__)


def _as_group(sub: Subgroup | PermGroup) -> PermGroup:
    return sub.as_group() if isinstance(sub, Subgroup) else sub


def transfer(group: PermGroup, sub: Subgroup | PermGroup, x: BurnsideElement) -> BurnsideElement:
    """Induce an element of A(H) up to A(G): [H/K] ↦ [G/K].

    Args:
        group: The ambient group G.
        sub: A subgroup H of G.
        x: An element of A(H).

    Raises:
        SubgroupError: If H is not contained in G.
        GroupMismatchError: If ``x`` does not live over H.
    """
    h_group = _as_group(sub)
    if not h_group.element_set <= group.element_set:
        raise SubgroupError(f"{h_group.label} is not a subgroup of {group.label}")
    if x.group != h_group:
        raise GroupMismatchError("transfer", h_group.label, x.group.label)
    source = x.ring
    target = burnside_ring(group, group.order)
    coeffs = [0] * target.rank
    for position, coeff in x.terms():
        rep = source.lattice.representative(position)
        coeffs[target.lattice.class_of(rep)] += coeff
    return BurnsideElement(group, tuple(coeffs))


def _restrict_basis(alpha: GroupHom, ring: BurnsideRing, position: int) -> tuple[int, ...]:
    """Decompose α*[G/H] for the class representative H at ``position``."""
    k_group = alpha.source
    k_ring = burnside_ring(k_group, k_group.order)
    lookup, leaders = ring.cosets(position)
    images = [alpha(k) for k in k_group.elements]
    gen_images = [alpha(s) for s in k_group.generators]
    coeffs = [0] * k_ring.rank
    seen: set[int] = set()
    for start in range(len(leaders)):
        if start in seen:
            continue
        seen.add(start)
        frontier = [start]
        while frontier:
            nxt: list[int] = []
            for c in frontier:
                for a in gen_images:
                    d = lookup[perm.compose(a, leaders[c])]
                    if d not in seen:
                        seen.add(d)
                        nxt.append(d)
            frontier = nxt
        g = leaders[start]
        stabilizer = frozenset(
            k for k, a in zip(k_group.elements, images, strict=True) if lookup[perm.compose(a, g)] == start
        )
        stab = Subgroup(k_group, stabilizer, ())
        coeffs[k_ring.lattice.class_of(stab)] += 1
    return tuple(coeffs)


def restrict(alpha: GroupHom, x: BurnsideElement) -> BurnsideElement:
    """Pull an element of A(G) back along α: K → G.

    For an inclusion this is the usual restriction to a subgroup.

    Raises:
        GroupMismatchError: If ``x`` does not live over the target of α.
    """
    if x.group != alpha.target:
        raise GroupMismatchError("restrict", alpha.target.label, x.group.label)
    ring = x.ring
    k_rank = burnside_ring(alpha.source, alpha.source.order).rank
    coeffs = [0] * k_rank
    for position, coeff in x.terms():
        for i, c in enumerate(_restrict_basis(alpha, ring, position)):
            coeffs[i] += coeff * c
    return BurnsideElement(alpha.source, tuple(coeffs))


def restrict_to(group: PermGroup, sub: Subgroup | PermGroup, x: BurnsideElement) -> BurnsideElement:
    """Restrict ``x`` in A(G) to the subgroup H."""
    return restrict(GroupHom.inclusion(sub, group), x)


@lru_cache(maxsize=4096)
def _basis_product(group: PermGroup, i: int, j: int) -> tuple[int, ...]:
    ring = burnside_ring(group, group.order)
    h = ring.lattice.representative(i)
    restricted = restrict_to(group, h, ring.basis(j))
    return transfer(group, h, restricted).coeffs


def multiply(x: BurnsideElement, y: BurnsideElement) -> BurnsideElement:
    """Return the ring product x·y (cartesian product of G-sets).

    Raises:
        GroupMismatchError: If the operands live over different groups.
    """
    if x.group != y.group:
        raise GroupMismatchError("multiply", x.group.label, y.group.label)
    coeffs = [0] * len(x.coeffs)
    for i, a in x.terms():
        for j, b in y.terms():
            lo, hi = (i, j) if i <= j else (j, i)
            for position, c in enumerate(_basis_product(x.group, lo, hi)):
                coeffs[position] += a * b * c
    return BurnsideElement(x.group, tuple(coeffs))


def marks(x: BurnsideElement) -> tuple[int, ...]:
    """Return the mark vector: the number of L-fixed points for every class rep L."""
    table = x.ring.mark_table
    return tuple(sum(row[h] * c for h, c in x.terms()) for row in table)


def mark_table(group: PermGroup) -> tuple[tuple[int, ...], ...]:
    """Return the table of marks of ``group`` (rows L, columns H)."""
    return burnside_ring(group, group.order).mark_table


def from_marks(group: PermGroup, mark_vector: Sequence[int]) -> BurnsideElement:
    """Recover the element with the given marks.

    The table of marks is triangular in basis order, so back-substitution
    from the whole group downwards recovers the coefficients.

    Raises:
        GroupMismatchError: If the vector has the wrong length.
        DomainError: If the vector is not the mark vector of any element.
    """
    ring = burnside_ring(group, group.order)
    if len(mark_vector) != ring.rank:
        raise GroupMismatchError("from_marks", f"{ring.rank} marks", f"{len(mark_vector)}")
    table = ring.mark_table
    coeffs = [0] * ring.rank
    for j in reversed(range(ring.rank)):
        residual = mark_vector[j] - sum(table[j][h] * coeffs[h] for h in range(j + 1, ring.rank))
        quotient, remainder = divmod(residual, table[j][j])
        if remainder:
            raise DomainError(f"mark vector {list(mark_vector)} is not realized by A({group.label})")
        coeffs[j] = quotient
    return BurnsideElement(group, tuple(coeffs))


def augmentation(x: BurnsideElement) -> int:
    """Return the cardinality of the virtual G-set: Σ c_H·[G:H]."""
    classes = x.ring.lattice.classes
    return sum(c * classes[i].index_in_parent for i, c in x.terms())


def conjugate_element(group: PermGroup, sub: Subgroup | PermGroup, g: Perm, x: BurnsideElement) -> BurnsideElement:
    """Transport ``x`` in A(H) to A(gHg⁻¹) by conjugation."""
    h_group = _as_group(sub)
    if x.group != h_group:
        raise GroupMismatchError("conjugate", h_group.label, x.group.label)
    target = Subgroup(group, h_group.element_set, h_group.generators).conjugate(g).as_group()
    alpha = GroupHom.conjugation(group, g).restrict_to(target)
    alpha = GroupHom(target, h_group, alpha.images)
    return restrict(alpha, x)


def res_tr_formula(group: PermGroup, k: Subgroup, h: Subgroup) -> BurnsideElement:
    """Evaluate the double coset formula for res^G_K ∘ tr_H^G on [H/H].

    Returns:
        Σ over double cosets KgH of [K / (K ∩ gHg⁻¹)], an element of A(K).

    Raises:
        SubgroupError: If K or H is not a subgroup of G.
    """
    k_group = k.as_group()
    k_ring = burnside_ring(k_group, k_group.order)
    coeffs = [0] * k_ring.rank
    for g, _size in double_cosets(group, k, h):
        conj = h.conjugate(g)
        meet = Subgroup(k_group, k.elements & conj.elements, ())
        coeffs[k_ring.lattice.class_of(meet)] += 1
    logger.debug("Double coset formula over %s has %d terms", group.label, sum(coeffs))
    return BurnsideElement(k_group, tuple(coeffs))
