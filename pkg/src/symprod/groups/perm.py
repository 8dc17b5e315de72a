"""Permutations keyed by their 0-based image tuples.

A permutation ``p`` of degree ``n`` is stored as its sympy array form
``(p(0), ..., p(n-1))`` frozen into a tuple, which keeps elements hashable
and gives the lexicographic order used for all canonical choices. The
arithmetic is sympy's ``Permutation``. Products compose right to left:
``compose(p, q)`` applies ``q`` first, so groups act on points from the
left.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from functools import lru_cache

from sympy.combinatorics import Permutation

Perm = tuple[int, ...]


@lru_cache(maxsize=1 << 16)
def as_permutation(p: Perm) -> Permutation:
    """Return the sympy permutation with image tuple ``p``."""
    return Permutation(list(p))


def from_permutation(p: Permutation) -> Perm:
    """Return the image tuple of a sympy permutation."""
    return tuple(p.array_form)


def identity(degree: int) -> Perm:
    """Return the identity permutation of the given degree."""
    return tuple(range(degree))


def is_permutation(images: Sequence[int], degree: int) -> bool:
    """Check that ``images`` is a bijection on ``{0..degree-1}``."""
    return len(images) == degree and sorted(images) == list(range(degree))


def compose(p: Perm, q: Perm) -> Perm:
    """Return ``p ∘ q`` (apply ``q``, then ``p``)."""
    return from_permutation(Permutation.rmul(as_permutation(p), as_permutation(q)))


def inverse(p: Perm) -> Perm:
    """Return the inverse permutation."""
    return from_permutation(~as_permutation(p))


def conjugate(g: Perm, x: Perm) -> Perm:
    """Return ``g x g⁻¹``."""
    return from_permutation(Permutation.rmul(as_permutation(g), as_permutation(x), ~as_permutation(g)))


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Return the non-trivial cycles of ``p`` (0-based), each starting at its least point."""
    return [tuple(cycle) for cycle in as_permutation(p).cyclic_form]


def order(p: Perm) -> int:
    """Return the order of ``p`` (lcm of its cycle lengths)."""
    return int(as_permutation(p).order())


def sign(p: Perm) -> int:
    """Return +1 for even and -1 for odd permutations."""
    return int(as_permutation(p).signature())


def from_cycles(cycle_list: Iterable[Sequence[int]], degree: int) -> Perm:
    """Build a permutation from disjoint 0-based cycles.

    Raises:
        ValueError: If a point repeats or lies outside ``{0..degree-1}``.
    """
    cycle_list = [list(cycle) for cycle in cycle_list]
    used: set[int] = set()
    for cycle in cycle_list:
        for point in cycle:
            if not 0 <= point < degree:
                raise ValueError(f"point {point + 1} outside 1..{degree}")
            if point in used:
                raise ValueError(f"point {point + 1} appears twice")
            used.add(point)
    # sympy reads a list of lists as cycles; singletons only fix the size
    nontrivial = [cycle for cycle in cycle_list if len(cycle) > 1]
    if not nontrivial:
        return identity(degree)
    return from_permutation(Permutation(nontrivial, size=degree))


def format_cycles(p: Perm) -> str:
    """Render ``p`` in 1-based cycle notation, ``()`` for the identity."""
    parts = cycles(p)
    if not parts:
        return "()"
    return "".join("(" + " ".join(str(point + 1) for point in cycle) + ")" for cycle in parts)
