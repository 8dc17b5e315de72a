"""Suite for p-groups: I_n(P) = 0 below p and I_p(P) = I(P)."""

from __future__ import annotations

from symprod.core.models import CheckResult
from symprod.filtration.ideals import augmentation_ideal, ideal_lattice, stabilization_index
from symprod.reproduce.checks import TableChecker
from symprod.reproduce.suite import ExampleSuite, register_suite

_PRIMES = {"C4": 2, "C2xC2": 2, "D4": 2, "Q8": 2, "C8": 2, "C2xC2xC2": 2, "C9": 3, "C3xC3": 3}


@register_suite
class PGroupSuite(ExampleSuite):
    """Groups of order 4, 8 and 9."""

    @property
    def name(self) -> str:
        return "pgroups"

    @property
    def description(self) -> str:
        return "p-groups of order 4, 8 and 9: free of rank 1 from n = p on"

    def extra_checks(self, checker: TableChecker) -> list[CheckResult]:
        items: list[CheckResult] = []
        for name, p in _PRIMES.items():
            group = checker.group(name)
            items.append(checker.compare(f"{name}: I_{p - 1} = 0", 0, ideal_lattice(group, p - 1).rank))
            items.append(checker.compare(f"{name}: I_{p} = I", True, ideal_lattice(group, p) == augmentation_ideal(group)))
            items.append(checker.compare(f"{name}: stabilization", p, stabilization_index(group)))
        return items
