"""Group-spec parsing.

Grammar::

    spec  := "Sym(" n ")" | "Alt(" n ")" | "Cyclic(" n ")" | "Dihedral(" n ")"
           | "Perm(" degree ";" perm ("," perm)* ")"
    perm  := cycle+
    cycle := "(" point (" " point)* ")"

Points are 1-based. Whitespace around tokens is ignored.
"""

from __future__ import annotations

import logging
import re
from collections.abc import Callable
from math import factorial

from sympy.combinatorics import PermutationGroup
from sympy.combinatorics.named_groups import AlternatingGroup, CyclicGroup, DihedralGroup, SymmetricGroup

from symprod.core.exceptions import PermutationError, ResourceBoundError, SpecParseError
from symprod.groups import perm
from symprod.groups.perm import Perm
from symprod.groups.permgroup import PermGroup

logger = logging.getLogger(__name__)

_SPEC_PATTERN = re.compile(r"^\s*([A-Za-z]+)\s*\((.*)\)\s*$", re.DOTALL)
_PERM_PATTERN = re.compile(r"^(\s*\([^()]*\))+\s*$")
_CYCLE_PATTERN = re.compile(r"\(([^()]*)\)")
_INT_PATTERN = re.compile(r"^\s*(\d+)\s*$")


def _named(factory: Callable[[int], PermutationGroup]) -> Callable[[int], list[Perm]]:
    def build(n: int) -> list[Perm]:
        # sympy pads Alt(1), Alt(2) and Sym(1) with an identity generator
        return [perm.from_permutation(g) for g in factory(n).generators if not g.is_Identity]

    return build


_CONSTRUCTORS: dict[str, tuple[int, Callable[[int], list[Perm]]]] = {
    "Sym": (1, _named(SymmetricGroup)),
    "Alt": (1, _named(AlternatingGroup)),
    "Cyclic": (1, _named(CyclicGroup)),
    "Dihedral": (3, _named(DihedralGroup)),
}

_ORDERS: dict[str, Callable[[int], int]] = {
    "Sym": factorial,
    "Alt": lambda n: max(factorial(n) // 2, 1),
    "Cyclic": lambda n: n,
    "Dihedral": lambda n: 2 * n,
}


def parse_perm(text: str, degree: int, spec: str = "") -> Perm:
    """Parse one permutation written as a product of disjoint cycles.

    Args:
        text: e.g. ``"(1 2)(3 4)"``.
        degree: Number of points.
        spec: Enclosing spec, for diagnostics.

    Returns:
        The permutation as a 0-based image tuple.

    Raises:
        SpecParseError: If the text is not a sequence of cycles of integers.
        PermutationError: If a point is out of range or repeats.
    """
    if not _PERM_PATTERN.match(text):
        raise SpecParseError(spec or text, f"malformed permutation '{text.strip()}'")
    cycle_list: list[list[int]] = []
    for body in _CYCLE_PATTERN.findall(text):
        tokens = body.split()
        if not tokens:
            raise SpecParseError(spec or text, "empty cycle '()'")
        if not all(token.isdigit() for token in tokens):
            raise SpecParseError(spec or text, f"non-integer point in '({body})'")
        cycle_list.append([int(token) - 1 for token in tokens])
    try:
        return perm.from_cycles(cycle_list, degree)
    except ValueError as exc:
        raise PermutationError(f"'{text.strip()}' is not a permutation of 1..{degree}: {exc}") from exc


def _parse_int(text: str, spec: str, what: str) -> int:
    match = _INT_PATTERN.match(text)
    if match is None:
        raise SpecParseError(spec, f"{what} must be a non-negative integer, got '{text.strip()}'")
    return int(match.group(1))


def group_from_spec(spec: str, bound: int | None = None) -> PermGroup:
    """Build a permutation group from a spec string.

    Args:
        spec: A string matching the group-spec grammar.
        bound: Largest permitted group order, checked before enumeration.

    Returns:
        The group with its full element set. ``Dihedral(n)`` is the
        order-2n group acting on n points.

    Raises:
        SpecParseError: On grammar violations or unknown names.
        PermutationError: If a listed generator is not a permutation.
        ResourceBoundError: If the group order exceeds ``bound``.
    """
    match = _SPEC_PATTERN.match(spec)
    if match is None:
        raise SpecParseError(spec, "expected Name(arguments)")
    name, body = match.group(1), match.group(2)

    if name == "Perm":
        degree_text, sep, perms_text = body.partition(";")
        if not sep:
            raise SpecParseError(spec, "Perm requires 'degree; perm, ...'")
        degree = _parse_int(degree_text, spec, "degree")
        if degree < 1:
            raise SpecParseError(spec, "degree must be positive")
        pieces = perms_text.split(",")
        if not any(piece.strip() for piece in pieces):
            raise SpecParseError(spec, "Perm requires at least one permutation")
        generators = [parse_perm(piece, degree, spec) for piece in pieces]
        label = f"Perm({degree}; {', '.join(piece.strip() for piece in pieces)})"
        return PermGroup(degree, generators, label=label, bound=bound)

    if name not in _CONSTRUCTORS:
        raise SpecParseError(spec, f"unknown group name '{name}'")
    minimum, build = _CONSTRUCTORS[name]
    n = _parse_int(body, spec, "argument")
    if n < minimum:
        raise SpecParseError(spec, f"{name} requires n >= {minimum}")
    order = _ORDERS[name](n)
    if bound is not None and order > bound:
        raise ResourceBoundError("group order", order, bound)
    group = PermGroup(n, build(n), label=f"{name}({n})")
    logger.debug("Parsed %s (order %d)", group.label, group.order)
    return group


def symmetric_group(n: int) -> PermGroup:
    """Return ``Sym(n)``."""
    return group_from_spec(f"Sym({n})")
