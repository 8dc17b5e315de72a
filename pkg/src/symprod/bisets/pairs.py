"""Canonical basis pairs (L, α) of the morphism groups A(G, K).

A pair is a subgroup L ≤ K with a homomorphism α: L → G. Pairs related
by (L, α) ~ (kLk⁻¹, c_g ∘ α ∘ c_k) give the same basis element. The
canonical member puts L at its class representative and takes the
least image tuple over the normalizer N_K(L) and conjugation in G.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from functools import lru_cache

from symprod.core.exceptions import InvariantViolationError
from symprod.core.models import CategoryBasisDocument, CatTermDocument
from symprod.groups import perm
from symprod.groups.homs import DEFAULT_HOM_BOUND, GroupHom, enumerate_homs
from symprod.groups.lattice import DEFAULT_ORDER_BOUND, conjugator, normalizer, subgroup_lattice
from symprod.groups.perm import Perm
from symprod.groups.permgroup import PermGroup, Subgroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class PairLA:
    """A canonical basis pair of A(G, K): the operation tr_L^K ∘ α*.

    Attributes:
        position: Class position of L in the subgroup lattice of K.
        images: Images under α of the generators of ``domain``.
        source: The group G.
        target: The group K.
        subgroup: The class representative L.
    """

    position: int
    images: tuple[Perm, ...]
    source: PermGroup = field(compare=False)
    target: PermGroup = field(compare=False)
    subgroup: Subgroup = field(compare=False, hash=False)

    @property
    def domain(self) -> PermGroup:
        """Return L as a group."""
        return self.subgroup.as_group()

    @property
    def alpha(self) -> GroupHom:
        """Return α: L → G."""
        return GroupHom(self.domain, self.source, self.images)

    def to_document(self, coeff: int = 1) -> CatTermDocument:
        """Return the JSON term for this pair with coefficient ``coeff``."""
        return CatTermDocument(
            L_order=self.subgroup.order,
            L_gens=tuple(perm.format_cycles(g) for g in self.domain.generators),
            alpha_images=tuple(perm.format_cycles(x) for x in self.images),
            coeff=coeff,
        )

    def describe(self) -> str:
        """Render as ``(<gens>, gens -> images)``."""
        mapping = ", ".join(
            f"{perm.format_cycles(s)}->{perm.format_cycles(x)}"
            for s, x in zip(self.domain.generators, self.images, strict=True)
        )
        return f"(L{self.position}=<{self.subgroup.describe()}>, {mapping or 'trivial'})"


@lru_cache(maxsize=1024)
def _normalizer_elements(target: PermGroup, position: int) -> tuple[Perm, ...]:
    rep = subgroup_lattice(target, target.order).representative(position)
    return tuple(sorted(normalizer(target, rep).elements))


def canonical_pair(
    source: PermGroup,
    target: PermGroup,
    sub: Subgroup,
    alpha: Mapping[Perm, Perm],
) -> PairLA:
    """Return the canonical pair equivalent to (L, α).

    Args:
        source: The group G.
        target: The group K.
        sub: A subgroup L of K, given with generators.
        alpha: α as a map defined on every element of L.

    Returns:
        The canonical PairLA of its (K×G)-conjugacy class.
    """
    lattice = subgroup_lattice(target, target.order)
    position = lattice.class_of(sub)
    rep = lattice.representative(position)
    k = conjugator(target, sub, rep)
    if k is None:
        raise InvariantViolationError(f"{sub!r} is not conjugate to its class representative")
    k_inv = perm.inverse(k)
    beta = {x: alpha[perm.conjugate(k_inv, x)] for x in rep.elements}
    gens = rep.as_group().generators
    best: tuple[Perm, ...] | None = None
    for n in _normalizer_elements(target, position):
        images = tuple(beta[perm.conjugate(n, s)] for s in gens)
        for g in source.elements:
            candidate = tuple(perm.conjugate(g, y) for y in images)
            if best is None or candidate < best:
                best = candidate
    assert best is not None
    return PairLA(position=position, images=best, source=source, target=target, subgroup=rep)


def pair_from_hom(target: PermGroup, alpha: GroupHom) -> PairLA:
    """Return the canonical pair for α: L → G with L a subgroup of K."""
    sub = Subgroup(target, alpha.source.element_set, alpha.source.generators)
    return canonical_pair(alpha.target, target, sub, alpha.full_map)


def category_basis(
    source: PermGroup,
    target: PermGroup,
    *,
    order_bound: int = DEFAULT_ORDER_BOUND,
    hom_bound: int = DEFAULT_HOM_BOUND,
) -> list[PairLA]:
    """Return the canonical basis of A(G, K), sorted by (L class, images).

    Args:
        source: The group G.
        target: The group K.
        order_bound: Bound on |K| for subgroup enumeration.
        hom_bound: Bound on group orders in the homomorphism search.

    Raises:
        ResourceBoundError: If a bound is exceeded.
    """
    lattice = subgroup_lattice(target, order_bound)
    found: set[PairLA] = set()
    for cls in lattice.classes:
        domain = cls.representative.as_group()
        for hom in enumerate_homs(domain, source, hom_bound):
            found.add(canonical_pair(source, target, cls.representative, hom.full_map))
    basis = sorted(found)
    logger.info("A(%s, %s) has rank %d", source.label, target.label, len(basis))
    return basis


def category_basis_document(
    source: PermGroup,
    target: PermGroup,
    *,
    order_bound: int = DEFAULT_ORDER_BOUND,
    hom_bound: int = DEFAULT_HOM_BOUND,
) -> CategoryBasisDocument:
    """Return the JSON document listing the canonical basis of A(G, K)."""
    basis = category_basis(source, target, order_bound=order_bound, hom_bound=hom_bound)
    return CategoryBasisDocument(
        source=source.label,
        target=target.label,
        pairs=tuple(p.to_document() for p in basis),
    )
