"""Suite for the alternating group A₅."""

from __future__ import annotations

from symprod.core.models import CheckResult
from symprod.filtration.ideals import rational_step_check
from symprod.groups.lattice import min_proper_index
from symprod.reproduce.checks import TableChecker
from symprod.reproduce.suite import ExampleSuite, register_suite


@register_suite
class Alternating5Suite(ExampleSuite):
    """A₅: torsion ℤ/3 at n = 3 and ℤ/5 at n = 5, full ideal at n = 6."""

    @property
    def name(self) -> str:
        return "a5"

    @property
    def description(self) -> str:
        return "Alt(5): quotients 9; 5; 3+Z/3; 3; 1+Z/5; 1"

    def extra_checks(self, checker: TableChecker) -> list[CheckResult]:
        group = checker.group("A5")
        # No proper subgroup of index < 5, so no multiple of t_A4^A5 lies in I_4.
        return [
            checker.compare("least proper index", 5, min_proper_index(group)),
            checker.compare("I_4 -> I_5 rational isomorphism", False, rational_step_check(group, 5)),
        ]
