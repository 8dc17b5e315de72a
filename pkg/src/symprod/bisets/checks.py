"""Sampled checks of the category laws for composition by balanced product."""

from __future__ import annotations

import logging
import random

from symprod.bisets.morphisms import basis_morphism, compose, evaluate, identity_morphism
from symprod.bisets.pairs import PairLA, category_basis
from symprod.burnside.ring import burnside_ring
from symprod.core.config import SymprodConfig
from symprod.core.models import ComposeCheckDocument
from symprod.groups.permgroup import PermGroup

logger = logging.getLogger(__name__)


def compose_check(
    source: PermGroup,
    middle: PermGroup,
    target: PermGroup,
    config: SymprodConfig | None = None,
) -> ComposeCheckDocument:
    """Check unit laws, associativity and evaluation on basis pairs.

    Pairs g ∈ A(G, K) and f ∈ A(K, L) are drawn from the canonical bases;
    when there are more than ``config.sampling.samples`` combinations a
    seeded sample is taken. For each combination the check verifies
    id ∘ f = f = f ∘ id, (h ∘ f) ∘ g = h ∘ (f ∘ g) for a sampled
    h ∈ A(L, L), and evaluate(f ∘ g, x) = evaluate(f, evaluate(g, x))
    on every basis element x of A(G).

    Args:
        source: The group G.
        middle: The group K.
        target: The group L.
        config: Bounds and sampling settings.

    Returns:
        A document listing every law that failed.

    Raises:
        ResourceBoundError: If a group, homomorphism search or biset exceeds its bound.
    """
    config = config or SymprodConfig()
    limits = config.limits
    rng = random.Random(config.sampling.seed)
    bounds = {"order_bound": limits.group_order_bound, "hom_bound": limits.hom_order_bound}
    size_bound = limits.biset_size_bound

    inner_basis = category_basis(source, middle, **bounds)
    outer_basis = category_basis(middle, target, **bounds)
    after_basis = category_basis(target, target, **bounds)
    combos: list[tuple[PairLA, PairLA]] = [(p, q) for p in outer_basis for q in inner_basis]
    if len(combos) > config.sampling.samples:
        combos = rng.sample(combos, config.sampling.samples)

    ring = burnside_ring(source, limits.group_order_bound)
    id_middle, id_target = identity_morphism(middle), identity_morphism(target)
    failures: list[str] = []
    for p, q in combos:
        f, g = basis_morphism(p), basis_morphism(q)
        fg = compose(f, g, size_bound)
        if compose(id_target, f, size_bound) != f:
            failures.append(f"left unit: {p.describe()}")
        if compose(f, id_middle, size_bound) != f:
            failures.append(f"right unit: {p.describe()}")
        h = basis_morphism(rng.choice(after_basis))
        if compose(compose(h, f, size_bound), g, size_bound) != compose(h, fg, size_bound):
            failures.append(f"associativity: {h!r} o {p.describe()} o {q.describe()}")
        for position in range(ring.rank):
            x = ring.basis(position)
            if evaluate(fg, x) != evaluate(f, evaluate(g, x)):
                failures.append(f"evaluation: {p.describe()} o {q.describe()} on class{position}")

    unique = tuple(dict.fromkeys(failures))
    logger.info(
        "Composition laws over %s -> %s -> %s: %d combinations, %d failures",
        source.label,
        middle.label,
        target.label,
        len(combos),
        len(unique),
    )
    return ComposeCheckDocument(
        source=source.label,
        middle=middle.label,
        target=target.label,
        seed=config.sampling.seed,
        compositions_checked=len(combos),
        failures=unique,
    )
