"""Data-driven line items for the reproduction suites.

Each expected table lists named groups and a sequence of checks. A
check has a ``kind`` and kind-specific fields; elements of A(G) are
written as term lists ``[coeff, outer, inner]`` standing for
coeff·t_inner^outer with subgroup selectors for outer and inner.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Mapping, Sequence
from typing import Any

from symprod.burnside.ring import BurnsideElement, burnside_ring
from symprod.core.config import SymprodConfig
from symprod.core.exceptions import ConfigError, ResourceBoundError, SymprodError
from symprod.core.models import CheckResult, CheckStatus
from symprod.filtration.ideals import (
    augmentation_ideal,
    ideal_lattice,
    rational_step_check,
    sp_invariants,
    stabilization_index,
    t_class,
)
from symprod.groups.lattice import subgroup_lattice
from symprod.groups.parser import group_from_spec
from symprod.groups.permgroup import PermGroup
from symprod.groups.selectors import select_subgroup
from symprod.lattice.basis import LatticeBasis, contains, hnf_basis, sublattice_index

logger = logging.getLogger(__name__)

Check = Mapping[str, Any]


def _render_stages(rows: Sequence[tuple[int, int, tuple[int, ...]]]) -> str:
    return "; ".join(f"n={n}: rank {r} torsion {list(t)}" for n, r, t in rows)


class TableChecker:
    """Evaluates the checks of one expected table.

    Attributes:
        suite: Name of the owning suite.
        groups: Named groups of the table.
    """

    def __init__(self, suite: str, groups: Mapping[str, str], config: SymprodConfig) -> None:
        self._suite = suite
        self._config = config
        self._groups: dict[str, PermGroup] = {}
        for name, spec in groups.items():
            self._groups[name] = group_from_spec(spec, bound=config.limits.group_order_bound)
        self._handlers: dict[str, Callable[[Check], tuple[str, str]]] = {
            "class_count": self._class_count,
            "subgroup_count": self._subgroup_count,
            "augmentation_rank": self._augmentation_rank,
            "stages": self._stages,
            "stabilization": self._stabilization,
            "ideal_rank": self._ideal_rank,
            "index": self._index,
            "rational_step": self._rational_step,
            "membership": self._membership,
            "relation": self._relation,
            "span": self._span,
        }

    @property
    def suite(self) -> str:
        """Return the owning suite name."""
        return self._suite

    def group(self, name: str) -> PermGroup:
        """Return the named group.

        Raises:
            ConfigError: If the table does not define ``name``.
        """
        try:
            return self._groups[name]
        except KeyError:
            raise ConfigError(f"expected table for '{self._suite}' has no group '{name}'") from None

    def element(self, group: PermGroup, terms: Sequence[Sequence[Any]]) -> BurnsideElement:
        """Build Σ coeff·t_inner^outer in A(G) from a term list."""
        total = burnside_ring(group, group.order).zero()
        for coeff, outer, inner in terms:
            h = select_subgroup(group, outer, group.order)
            k = select_subgroup(group, inner, group.order)
            total = total + int(coeff) * t_class(group, h, k)
        return total

    def run(self, check: Check) -> CheckResult:
        """Evaluate one check, converting library errors into an error item.

        Raises:
            ResourceBoundError: If a computation exceeds a configured bound.
        """
        kind = str(check.get("kind", ""))
        name = str(check.get("name", kind))
        handler = self._handlers.get(kind)
        if handler is None:
            return self.result(name, CheckStatus.ERROR, "", f"unknown check kind '{kind}'")
        try:
            expected, actual = handler(check)
        except ResourceBoundError:
            raise
        except SymprodError as exc:
            logger.warning("Check '%s' in %s raised: %s", name, self._suite, exc)
            return self.result(name, CheckStatus.ERROR, "", str(exc))
        status = CheckStatus.PASSED if expected == actual else CheckStatus.FAILED
        return self.result(name, status, expected, actual)

    def result(self, name: str, status: CheckStatus, expected: str, actual: str) -> CheckResult:
        """Build a CheckResult for this suite."""
        return CheckResult(suite=self._suite, name=name, status=status, expected=expected, actual=actual)

    def compare(self, name: str, expected: object, actual: object) -> CheckResult:
        """Build a pass/fail item from two comparable values."""
        status = CheckStatus.PASSED if expected == actual else CheckStatus.FAILED
        return self.result(name, status, str(expected), str(actual))

    # ── Handlers: each returns (expected, actual) as text ──

    def _class_count(self, check: Check) -> tuple[str, str]:
        group = self.group(check["group"])
        return str(check["expected"]), str(len(subgroup_lattice(group, group.order)))

    def _subgroup_count(self, check: Check) -> tuple[str, str]:
        group = self.group(check["group"])
        return str(check["expected"]), str(subgroup_lattice(group, group.order).subgroup_count)

    def _augmentation_rank(self, check: Check) -> tuple[str, str]:
        group = self.group(check["group"])
        return str(check["expected"]), str(augmentation_ideal(group).rank)

    def _stages(self, check: Check) -> tuple[str, str]:
        group = self.group(check["group"])
        expected_rows = [(int(r["n"]), int(r["rank"]), tuple(r.get("torsion", []))) for r in check["expected"]]
        actual_rows = []
        for n, _, _ in expected_rows:
            inv = sp_invariants(group, n)
            actual_rows.append((n, inv.rank, inv.torsion))
        return _render_stages(expected_rows), _render_stages(actual_rows)

    def _stabilization(self, check: Check) -> tuple[str, str]:
        group = self.group(check["group"])
        return str(check["expected"]), str(stabilization_index(group))

    def _ideal_rank(self, check: Check) -> tuple[str, str]:
        group = self.group(check["group"])
        return str(check["expected"]), str(ideal_lattice(group, int(check["n"])).rank)

    def _index(self, check: Check) -> tuple[str, str]:
        group = self.group(check["group"])
        inner = self._lattice(group, check["inner"])
        outer = self._lattice(group, check["outer"])
        return str(check["expected"]), str(sublattice_index(inner, outer))

    def _rational_step(self, check: Check) -> tuple[str, str]:
        group = self.group(check["group"])
        actual = rational_step_check(group, int(check["n"]))
        return str(bool(check["expected"])), str(actual)

    def _membership(self, check: Check) -> tuple[str, str]:
        group = self.group(check["group"])
        element = self.element(group, check["terms"])
        lattice = self._lattice(group, check["n"])
        return str(bool(check["expected"])), str(contains(lattice, element.coeffs))

    def _relation(self, check: Check) -> tuple[str, str]:
        group = self.group(check["group"])
        lhs = self.element(group, check["lhs"])
        rhs = self.element(group, check["rhs"])
        return str(list(rhs.coeffs)), str(list(lhs.coeffs))

    def _span(self, check: Check) -> tuple[str, str]:
        group = self.group(check["group"])
        rank = len(subgroup_lattice(group, group.order))
        span = hnf_basis(rank, [self.element(group, terms).coeffs for terms in check["elements"]])
        target = self._lattice(group, check["equals"])
        independent = span.rank == len(check["elements"])
        return "equal, independent", f"{'equal' if span == target else 'different'}, " + (
            "independent" if independent else "dependent"
        )

    def _lattice(self, group: PermGroup, stage: object) -> LatticeBasis:
        if stage == "augmentation":
            return augmentation_ideal(group)
        return ideal_lattice(group, "infinity" if stage == "infinity" else int(str(stage)))
