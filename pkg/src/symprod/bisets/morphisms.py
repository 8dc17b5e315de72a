"""Morphisms of the finite global Burnside category.

A(G, K) is free abelian on the canonical pairs (L, α) and holds the
operations A(G) → A(K). Composition goes through explicit bisets: each
basis pair becomes K ×_(L,α) G, the balanced product over the middle
group is formed, and the result is decomposed back into orbits.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from functools import lru_cache

from symprod.bisets.biset import DEFAULT_BISET_BOUND, Biset, balanced_product, orbit_pairs, pair_to_biset
from symprod.bisets.pairs import PairLA, canonical_pair, pair_from_hom
from symprod.burnside.operations import restrict, transfer
from symprod.burnside.ring import BurnsideElement, burnside_ring
from symprod.core.exceptions import GroupMismatchError
from symprod.core.models import CatMorphismDocument
from symprod.groups import perm
from symprod.groups.homs import GroupHom
from symprod.groups.lattice import double_cosets
from symprod.groups.perm import Perm
from symprod.groups.permgroup import PermGroup, Subgroup, reduce_generators

logger = logging.getLogger(__name__)


class CatMorphism:
    """An element of A(G, K): an integer combination of canonical pairs.

    Attributes:
        source: The group G.
        target: The group K.
        terms: Non-zero coefficients keyed by canonical pair.
    """

    __slots__ = ("_source", "_target", "_terms")

    def __init__(self, source: PermGroup, target: PermGroup, terms: Mapping[PairLA, int] | None = None) -> None:
        self._source = source
        self._target = target
        self._terms = {p: c for p, c in sorted((terms or {}).items()) if c}

    @property
    def source(self) -> PermGroup:
        """Return G."""
        return self._source

    @property
    def target(self) -> PermGroup:
        """Return K."""
        return self._target

    @property
    def terms(self) -> Mapping[PairLA, int]:
        """Return the non-zero coefficients in basis order."""
        return self._terms

    def is_zero(self) -> bool:
        """Return True for the zero morphism."""
        return not self._terms

    def _check_parallel(self, other: CatMorphism, operation: str) -> None:
        if other._source != self._source or other._target != self._target:
            raise GroupMismatchError(
                operation,
                f"A({self._source.label}, {self._target.label})",
                f"A({other._source.label}, {other._target.label})",
            )

    def __add__(self, other: CatMorphism) -> CatMorphism:
        self._check_parallel(other, "add")
        merged = dict(self._terms)
        for p, c in other._terms.items():
            merged[p] = merged.get(p, 0) + c
        return CatMorphism(self._source, self._target, merged)

    def __sub__(self, other: CatMorphism) -> CatMorphism:
        return self + (-1) * other

    def __rmul__(self, scalar: int) -> CatMorphism:
        return CatMorphism(self._source, self._target, {p: scalar * c for p, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CatMorphism):
            return NotImplemented
        return (
            self._source == other._source
            and self._target == other._target
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self._source, self._target, tuple(self._terms.items())))

    def __repr__(self) -> str:
        rendered = " + ".join(f"{c}*{p.describe()}" for p, c in self._terms.items()) or "0"
        return f"CatMorphism({self._source.label} -> {self._target.label}: {rendered})"

    def to_document(self) -> CatMorphismDocument:
        """Return the JSON document for this morphism."""
        return CatMorphismDocument(
            source=self._source.label,
            target=self._target.label,
            terms=tuple(p.to_document(c) for p, c in self._terms.items()),
        )


def basis_morphism(pair: PairLA) -> CatMorphism:
    """Return the morphism with coefficient 1 on ``pair``."""
    return CatMorphism(pair.source, pair.target, {pair: 1})


def biset_decompose(target: PermGroup, source: PermGroup, biset: Biset) -> CatMorphism:
    """Read a K-G-biset as an element of A(G, K), one pair per orbit.

    Raises:
        GroupMismatchError: If the biset is not a K-G-biset.
        BisetError: If the right action is not free.
    """
    if biset.left_group != target or biset.right_group != source:
        raise GroupMismatchError(
            "decompose",
            f"{target.label}-{source.label}-biset",
            f"{biset.left_group.label}-{biset.right_group.label}-biset",
        )
    return CatMorphism(source, target, orbit_pairs(biset))


@lru_cache(maxsize=8192)
def _compose_pairs(
    outer: PairLA,
    inner: PairLA,
    groups: tuple[PermGroup, PermGroup, PermGroup],
    bound: int,
) -> tuple[tuple[PairLA, int], ...]:
    # Pairs compare by (position, images) only, so the groups join the cache key.
    product = balanced_product(pair_to_biset(outer, bound), pair_to_biset(inner, bound), bound)
    return tuple(orbit_pairs(product).items())


def compose(f: CatMorphism, g: CatMorphism, bound: int = DEFAULT_BISET_BOUND) -> CatMorphism:
    """Return f ∘ g for g ∈ A(G, K) and f ∈ A(K, L').

    Raises:
        GroupMismatchError: If f.source differs from g.target.
        ResourceBoundError: If a balanced product exceeds ``bound``.
    """
    if f.source != g.target:
        raise GroupMismatchError("compose", g.target.label, f.source.label)
    total: dict[PairLA, int] = {}
    for p, a in f.terms.items():
        for q, b in g.terms.items():
            for r, c in _compose_pairs(p, q, (g.source, g.target, f.target), bound):
                total[r] = total.get(r, 0) + a * b * c
    return CatMorphism(g.source, f.target, total)


def evaluate(f: CatMorphism, x: BurnsideElement) -> BurnsideElement:
    """Apply f ∈ A(G, K) to x ∈ A(G); each pair acts as tr_L^K ∘ α*.

    Raises:
        GroupMismatchError: If x does not live over f.source.
    """
    if x.group != f.source:
        raise GroupMismatchError("evaluate", f.source.label, x.group.label)
    result = burnside_ring(f.target, f.target.order).zero()
    for pair, c in f.terms.items():
        result = result + c * transfer(f.target, pair.domain, restrict(pair.alpha, x))
    return result


def identity_morphism(group: PermGroup) -> CatMorphism:
    """Return the identity of G: the pair (G, id)."""
    return basis_morphism(pair_from_hom(group, GroupHom.identity(group)))


def restriction_along(target: PermGroup, alpha: GroupHom) -> CatMorphism:
    """Return α* ∈ A(G, K) for α: K → G, the pair (K, α)."""
    if alpha.source != target:
        raise GroupMismatchError("restriction", target.label, alpha.source.label)
    return basis_morphism(pair_from_hom(target, alpha))


def restriction_morphism(group: PermGroup, sub: Subgroup | PermGroup) -> CatMorphism:
    """Return res^G_H ∈ A(G, H)."""
    h = sub.as_group() if isinstance(sub, Subgroup) else sub
    return restriction_along(h, GroupHom.inclusion(h, group))


def transfer_morphism(group: PermGroup, sub: Subgroup | PermGroup) -> CatMorphism:
    """Return tr_H^G ∈ A(H, G): the pair (H ≤ G, id_H)."""
    h = sub.as_group() if isinstance(sub, Subgroup) else sub
    identity = GroupHom.identity(h)
    inside = Subgroup(group, h.element_set, h.generators)
    return basis_morphism(canonical_pair(h, group, inside, identity.full_map))


def conjugation_morphism(sub: Subgroup, g: Perm) -> CatMorphism:
    """Return c_g* ∈ A(H, gHg⁻¹) induced by x ↦ g⁻¹xg."""
    h = sub.as_group()
    conj = sub.conjugate(g).as_group()
    g_inv = perm.inverse(g)
    alpha = GroupHom(conj, h, [perm.conjugate(g_inv, s) for s in conj.generators])
    return restriction_along(conj, alpha)


def double_coset_morphism(group: PermGroup, k: Subgroup, h: Subgroup) -> CatMorphism:
    """Return Σ over K g H of the pairs (K ∩ gHg⁻¹, x ↦ g⁻¹xg) in A(H, K).

    This is res^G_K ∘ tr_H^G read off the double coset formula.
    """
    k_group, h_group = k.as_group(), h.as_group()
    total: dict[PairLA, int] = {}
    for g, _size in double_cosets(group, k, h):
        g_inv = perm.inverse(g)
        members = sorted(k.elements & h.conjugate(g).elements)
        meet = Subgroup(k_group, frozenset(members), reduce_generators(group.degree, members))
        alpha = {x: perm.conjugate(g_inv, x) for x in members}
        pair = canonical_pair(h_group, k_group, meet, alpha)
        total[pair] = total.get(pair, 0) + 1
    return CatMorphism(h_group, k_group, total)
