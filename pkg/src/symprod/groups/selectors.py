"""Subgroup selectors used on the command line and in expected tables.

Grammar: ``classN`` (class representative at position N), ``gens:P,Q,...``
(subgroup generated by permutations in cycle notation), ``trivial``,
``whole``, and ``all`` (every class representative).
"""

from __future__ import annotations

import json
import re

from symprod.core.exceptions import SelectorError, SymprodError
from symprod.groups.lattice import DEFAULT_ORDER_BOUND, subgroup_lattice
from symprod.groups.parser import parse_perm
from symprod.groups.permgroup import PermGroup, Subgroup

_CLASS_PATTERN = re.compile(r"^class(\d+)$")


def select_subgroup(group: PermGroup, selector: str, bound: int = DEFAULT_ORDER_BOUND) -> Subgroup:
    """Resolve a single-subgroup selector.

    Raises:
        SelectorError: If the selector is malformed or names no subgroup of ``group``.
    """
    text = selector.strip()
    if text == "trivial":
        return group.trivial()
    if text == "whole":
        return group.whole()
    match = _CLASS_PATTERN.match(text)
    if match is not None:
        lattice = subgroup_lattice(group, bound)
        position = int(match.group(1))
        if position >= len(lattice):
            raise SelectorError(f"'{text}': {group.label} has only {len(lattice)} subgroup classes")
        return lattice.representative(position)
    if text.startswith("gens:"):
        body = text[len("gens:") :].strip()
        pieces = [piece for piece in body.split(",") if piece.strip()]
        try:
            generators = [parse_perm(piece, group.degree) for piece in pieces]
            return group.subgroup(generators)
        except SymprodError as exc:
            raise SelectorError(f"'{text}': {exc}") from exc
    raise SelectorError(f"unknown subgroup selector '{text}' (use classN, gens:..., trivial or whole)")


def select_subgroups(group: PermGroup, selector: str, bound: int = DEFAULT_ORDER_BOUND) -> list[Subgroup]:
    """Resolve a selector that may also be ``all``."""
    if selector.strip() == "all":
        return [c.representative for c in subgroup_lattice(group, bound).classes]
    return [select_subgroup(group, selector, bound)]


def parse_vector(text: str, length: int) -> tuple[int, ...]:
    """Parse a JSON integer vector such as ``[3, 0, -1]``.

    Raises:
        SelectorError: If the text is not a JSON list of ``length`` integers.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SelectorError(f"element vector is not valid JSON: {exc.msg}") from exc
    if not isinstance(data, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in data):
        raise SelectorError("element vector must be a JSON list of integers")
    if len(data) != length:
        raise SelectorError(f"element vector has length {len(data)}, expected {length}")
    return tuple(data)
