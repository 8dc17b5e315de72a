"""The lattices I_n(G) ⊆ I(G) ⊆ A(G) and the groups A(G)/I_n(G).

I_n(G) is spanned by the classes t_K^H = [H:K]·[G/H] − [G/K] over
nested pairs K ≤ H ≤ G with [H:K] ≤ n. The quotient A(G)/I_n(G) is
π₀ of the G-fixed points of the n-th symmetric product of the sphere
spectrum; I(G), the augmentation ideal, is the limit as n grows.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from symprod.burnside.operations import restrict, transfer
from symprod.burnside.ring import BurnsideElement, burnside_ring
from symprod.core.exceptions import DomainError, InvariantViolationError, SubgroupError
from symprod.groups.homs import coset_action_hom
from symprod.groups.lattice import subgroup_lattice
from symprod.groups.parser import symmetric_group
from symprod.groups.permgroup import PermGroup, Subgroup
from symprod.lattice.basis import (
    AbelianInvariants,
    LatticeBasis,
    hnf_basis,
    quotient_invariants,
)

logger = logging.getLogger(__name__)

Stage = int | Literal["infinity"]


@dataclass(frozen=True)
class NestedPair:
    """A generator record K ≤ H of I_n(G).

    Attributes:
        outer: Class position of H in the subgroup lattice of G.
        inner: Class position of K in the subgroup lattice of G.
        index: The index [H:K].
        subgroup: The subgroup K, lying inside the representative of ``outer``.
        t_class: The class t_K^H in A(G).
    """

    outer: int
    inner: int
    index: int
    subgroup: Subgroup
    t_class: BurnsideElement


def _in_group(group: PermGroup, sub: Subgroup | PermGroup) -> Subgroup:
    if isinstance(sub, PermGroup):
        sub = Subgroup(sub, sub.element_set, sub.generators)
    return sub.within(group)


def t_class(group: PermGroup, outer: Subgroup | PermGroup, inner: Subgroup | PermGroup) -> BurnsideElement:
    """Return t_K^H = [H:K]·tr_H^G(1) − tr_K^G(1) in A(G).

    Raises:
        SubgroupError: If K ≤ H ≤ G fails.
    """
    h = _in_group(group, outer)
    k = _in_group(group, inner)
    if not k.is_subgroup_of(h):
        raise SubgroupError(f"{k!r} is not contained in {h!r}")
    ring = burnside_ring(group, group.order)
    coeffs = [0] * ring.rank
    coeffs[ring.lattice.class_of(h)] += h.order // k.order
    coeffs[ring.lattice.class_of(k)] -= 1
    return ring.element(coeffs)


def t_n(n: int) -> BurnsideElement:
    """Return t_n = n·1 − tr_{Σ_{n−1}}^{Σ_n}(1) in A(Σ_n)."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    group = symmetric_group(n)
    point_stabilizer = Subgroup.from_elements(group, [g for g in group.elements if g[n - 1] == n - 1])
    return t_class(group, group.whole(), point_stabilizer)


@lru_cache(maxsize=256)
def _all_pairs(group: PermGroup) -> tuple[NestedPair, ...]:
    """Every proper nested pair up to the conjugation used for spanning, sorted by index."""
    lattice = subgroup_lattice(group, group.order)
    records: dict[tuple[int, int], NestedPair] = {}
    for outer_class in lattice.classes:
        h = outer_class.representative
        inner_lattice = subgroup_lattice(h.as_group(), group.order)
        for inner_class in inner_lattice.classes:
            k = inner_class.representative
            if k.order == h.order:
                continue
            inner = lattice.class_of(k)
            key = (outer_class.position, inner)
            if key in records:
                continue
            records[key] = NestedPair(
                outer=outer_class.position,
                inner=inner,
                index=h.order // k.order,
                subgroup=k.within(group),
                t_class=t_class(group, h, k.within(group)),
            )
    pairs = sorted(records.values(), key=lambda p: (p.index, p.outer, p.inner))
    logger.debug("%s: %d nested pair generators", group.label, len(pairs))
    return tuple(pairs)


def nested_pairs(group: PermGroup, n: int) -> list[NestedPair]:
    """Return the generator records of I_n(G), ordered by (index, H, K)."""
    return [p for p in _all_pairs(group) if p.index <= n]


def _resolve_stage(group: PermGroup, n: Stage) -> int:
    if n == "infinity":
        return group.order
    if n < 1:
        raise DomainError(f"filtration stage must be positive, got {n}")
    return n


@lru_cache(maxsize=1024)
def _ideal(group: PermGroup, n: int) -> LatticeBasis:
    rank = len(subgroup_lattice(group, group.order))
    return hnf_basis(rank, [p.t_class.coeffs for p in nested_pairs(group, n)])


def ideal_lattice(group: PermGroup, n: Stage) -> LatticeBasis:
    """Return the HNF basis of I_n(G).

    ``"infinity"`` stands for n = |G|, where the filtration is complete.

    Raises:
        DomainError: If n < 1.
    """
    stage = _resolve_stage(group, n)
    return _ideal(group, _effective_stage(group, stage))


@lru_cache(maxsize=256)
def augmentation_ideal(group: PermGroup) -> LatticeBasis:
    """Return I(G), spanned by t_H^G = [G:H]·1 − [G/H] over all class representatives."""
    lattice = subgroup_lattice(group, group.order)
    whole = group.whole()
    generators = [t_class(group, whole, c.representative).coeffs for c in lattice.classes]
    return hnf_basis(len(lattice), generators)


def sp_invariants(group: PermGroup, n: Stage) -> AbelianInvariants:
    """Return the invariants of A(G)/I_n(G)."""
    return _quotient(group, _effective_stage(group, _resolve_stage(group, n)))


@lru_cache(maxsize=1024)
def _quotient(group: PermGroup, n: int) -> AbelianInvariants:
    lattice = _ideal(group, n)
    return quotient_invariants(lattice.ambient_rank, lattice)


@lru_cache(maxsize=256)
def _thresholds(group: PermGroup) -> tuple[int, ...]:
    return tuple(sorted({1} | {p.index for p in _all_pairs(group)}))


def stage_thresholds(group: PermGroup) -> list[int]:
    """Return the stages at which I_n(G) can change: 1 and every pair index."""
    return list(_thresholds(group))


def _effective_stage(group: PermGroup, n: int) -> int:
    """Return the largest threshold <= n; I_n(G) only changes at thresholds."""
    return max(t for t in stage_thresholds(group) if t <= n)


def stabilization_index(group: PermGroup) -> int:
    """Return the least n with I_n(G) = I(G).

    Raises:
        InvariantViolationError: If no stage up to |G| reaches I(G).
    """
    target = augmentation_ideal(group)
    for n in stage_thresholds(group):
        if ideal_lattice(group, n) == target:
            logger.info("%s: filtration stabilizes at n=%d", group.label, n)
            return n
    raise InvariantViolationError(f"I_n({group.label}) never reaches the augmentation ideal")


def rational_step_check(group: PermGroup, n: int) -> bool:
    """Return True iff I_{n−1}(G) → I_n(G) is a rational isomorphism.

    Raises:
        DomainError: If n < 2.
    """
    if n < 2:
        raise DomainError(f"rational step check needs n >= 2, got {n}")
    return ideal_lattice(group, n - 1).rank == ideal_lattice(group, n).rank


def coset_action_check(group: PermGroup, outer: Subgroup | PermGroup, inner: Subgroup | PermGroup) -> bool:
    """Check tr_H^G(β*(t_m)) = t_K^H for β: H → Σ_m the action on H/K."""
    h = _in_group(group, outer)
    k = _in_group(group, inner)
    h_group = h.as_group()
    beta = coset_action_hom(h_group, k.within(h_group))
    m = h.order // k.order
    pulled = restrict(beta, t_n(m)) if m > 1 else burnside_ring(h_group, h_group.order).zero()
    return transfer(group, h_group, pulled) == t_class(group, h, k)
