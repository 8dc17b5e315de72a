"""Finite K-G-bisets with free right action, stored as full action tables.

Points are numbered 0..size-1. ``left[k]`` and ``right[g]`` are the
permutations of the points induced by k ∈ K and g ∈ G, as image tuples.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass

from symprod.bisets.pairs import PairLA, canonical_pair
from symprod.core.exceptions import BisetError, GroupMismatchError, ResourceBoundError
from symprod.groups import perm
from symprod.groups.homs import left_cosets
from symprod.groups.perm import Perm
from symprod.groups.permgroup import PermGroup, Subgroup, reduce_generators

logger = logging.getLogger(__name__)

DEFAULT_BISET_BOUND = 100_000

Points = tuple[int, ...]


@dataclass(frozen=True)
class Biset:
    """A finite K-G-biset.

    Attributes:
        left_group: The group K acting on the left.
        right_group: The group G acting on the right.
        size: Number of points.
        left: Action table of every element of K.
        right: Action table of every element of G.
    """

    left_group: PermGroup
    right_group: PermGroup
    size: int
    left: Mapping[Perm, Points]
    right: Mapping[Perm, Points]

    def validate(self) -> None:
        """Check that the actions commute and the right action is free.

        Raises:
            BisetError: If an invariant fails.
        """
        for k in self.left_group.generators:
            for g in self.right_group.generators:
                lk, rg = self.left[k], self.right[g]
                if any(lk[rg[s]] != rg[lk[s]] for s in range(self.size)):
                    raise BisetError("left and right actions do not commute")
        self._check_free()

    def _check_free(self) -> None:
        identity = self.right_group.identity
        for g, table in self.right.items():
            if g != identity and any(table[s] == s for s in range(self.size)):
                raise BisetError(f"right action of {perm.format_cycles(g)} has a fixed point")

    def __add__(self, other: Biset) -> Biset:
        """Return the disjoint union."""
        if other.left_group != self.left_group or other.right_group != self.right_group:
            raise GroupMismatchError("biset union", self.left_group.label, other.left_group.label)
        shift = self.size

        def join(a: Points, b: Points) -> Points:
            return a + tuple(x + shift for x in b)

        return Biset(
            left_group=self.left_group,
            right_group=self.right_group,
            size=self.size + other.size,
            left={k: join(self.left[k], other.left[k]) for k in self.left_group.elements},
            right={g: join(self.right[g], other.right[g]) for g in self.right_group.elements},
        )


def _check_size(size: int, bound: int) -> None:
    if size > bound:
        raise ResourceBoundError("biset size", size, bound)


def pair_to_biset(pair: PairLA, bound: int = DEFAULT_BISET_BOUND) -> Biset:
    """Build K ×_(L,α) G = (K × G)/((kl, g) ~ (k, α(l)g)).

    The point (i, g) stands for [k_i, g] where k_i is the least element
    of the i-th left coset of L in K.

    Raises:
        ResourceBoundError: If [K:L]·|G| exceeds ``bound``.
    """
    k_group, g_group, sub = pair.target, pair.source, pair.subgroup
    cosets = left_cosets(k_group, sub)
    reps = [min(c) for c in cosets]
    lookup = {x: i for i, c in enumerate(cosets) for x in c}
    g_elems = g_group.elements
    g_pos = {g: i for i, g in enumerate(g_elems)}
    order = len(g_elems)
    size = len(reps) * order
    _check_size(size, bound)
    alpha = pair.alpha

    left: dict[Perm, Points] = {}
    for k in k_group.elements:
        table = [0] * size
        for i, k_i in enumerate(reps):
            moved = perm.compose(k, k_i)
            j = lookup[moved]
            a = alpha(perm.compose(perm.inverse(reps[j]), moved))
            for gi, g in enumerate(g_elems):
                table[i * order + gi] = j * order + g_pos[perm.compose(a, g)]
        left[k] = tuple(table)

    right: dict[Perm, Points] = {}
    for h in g_elems:
        shifted = [g_pos[perm.compose(g, h)] for g in g_elems]
        right[h] = tuple(i * order + shifted[gi] for i in range(len(reps)) for gi in range(order))

    return Biset(left_group=k_group, right_group=g_group, size=size, left=left, right=right)


def orbit_pairs(biset: Biset) -> dict[PairLA, int]:
    """Decompose a biset into (K×G)-orbits, one canonical pair per orbit.

    For an orbit through s, L = {k : k·s ∈ s·G} and α(k) is the unique
    g with k·s = s·g.

    Raises:
        BisetError: If the right action is not free.
    """
    biset._check_free()
    k_group, g_group = biset.left_group, biset.right_group
    gen_tables = [biset.left[k] for k in k_group.generators] + [biset.right[g] for g in g_group.generators]
    seen = [False] * biset.size
    counts: dict[PairLA, int] = {}
    for start in range(biset.size):
        if seen[start]:
            continue
        seen[start] = True
        frontier = [start]
        while frontier:
            nxt: list[int] = []
            for s in frontier:
                for table in gen_tables:
                    t = table[s]
                    if not seen[t]:
                        seen[t] = True
                        nxt.append(t)
            frontier = nxt
        orbit_of_start = {biset.right[g][start]: g for g in g_group.elements}
        alpha: dict[Perm, Perm] = {}
        for k in k_group.elements:
            image = orbit_of_start.get(biset.left[k][start])
            if image is not None:
                alpha[k] = image
        members = sorted(alpha)
        sub = Subgroup(k_group, frozenset(members), reduce_generators(k_group.degree, members))
        pair = canonical_pair(g_group, k_group, sub, alpha)
        counts[pair] = counts.get(pair, 0) + 1
    logger.debug("Decomposed biset of size %d into %d orbits", biset.size, sum(counts.values()))
    return counts


def balanced_product(outer: Biset, inner: Biset, bound: int = DEFAULT_BISET_BOUND) -> Biset:
    """Return S ×_K T = (S × T)/((s·k, t) ~ (s, k·t)).

    Args:
        outer: An L'-K-biset S.
        inner: A K-G-biset T.
        bound: Largest permitted size of the product.

    Raises:
        GroupMismatchError: If the middle groups differ.
        ResourceBoundError: If the product is larger than ``bound``.
    """
    middle = outer.right_group
    if inner.left_group != middle:
        raise GroupMismatchError("balanced product", middle.label, inner.left_group.label)
    # Every s is s₀·k for a unique orbit representative s₀ and k ∈ K.
    reps: list[int] = []
    split: dict[int, tuple[int, Perm]] = {}
    for s in range(outer.size):
        if s in split:
            continue
        r = len(reps)
        reps.append(s)
        for k in middle.elements:
            split[outer.right[k][s]] = (r, k)
    width = inner.size
    size = len(reps) * width
    _check_size(size, bound)

    left: dict[Perm, Points] = {}
    for x in outer.left_group.elements:
        table = [0] * size
        for r, s in enumerate(reps):
            r2, k = split[outer.left[x][s]]
            moved = inner.left[k]
            for t in range(width):
                table[r * width + t] = r2 * width + moved[t]
        left[x] = tuple(table)

    right: dict[Perm, Points] = {}
    for g in inner.right_group.elements:
        moved = inner.right[g]
        right[g] = tuple(r * width + moved[t] for r in range(len(reps)) for t in range(width))

    logger.debug("Balanced product over %s has %d points", middle.label, size)
    return Biset(
        left_group=outer.left_group,
        right_group=inner.right_group,
        size=size,
        left=left,
        right=right,
    )
