"""Reproduction suites: worked examples checked against embedded tables.

Each suite owns a YAML table under ``expected/`` and may add line items
that need more than the table vocabulary (restrictions along specific
homomorphisms, for instance). The runner executes suites sequentially
or concurrently and assembles a ReproduceReport in suite order.
"""

from __future__ import annotations

import asyncio
import logging
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any

import yaml

from symprod.core.config import SymprodConfig
from symprod.core.exceptions import ResourceBoundError, SelectorError
from symprod.core.models import CheckResult, CheckStatus, ReproduceReport
from symprod.reproduce.checks import TableChecker

logger = logging.getLogger(__name__)

_EXPECTED_DIR = Path(__file__).parent / "expected"


class ExampleSuite(ABC):
    """Abstract base class for a reproduction suite."""

    def __init__(self, expected_path: str | Path | None = None) -> None:
        self._expected_path = Path(expected_path) if expected_path else _EXPECTED_DIR / f"{self.name}.yaml"

    @property
    @abstractmethod
    def name(self) -> str:
        """Return the example id."""
        ...

    @property
    def description(self) -> str:
        """Return a one-line description of the example."""
        return ""

    def load_expected(self) -> dict[str, Any]:
        """Load the expected table, or an empty mapping if it cannot be read."""
        if not self._expected_path.exists():
            logger.warning("No expected table for suite '%s' at %s", self.name, self._expected_path)
            return {}
        try:
            raw = yaml.safe_load(self._expected_path.read_text(encoding="utf-8"))
        except yaml.YAMLError:
            logger.exception("Failed to load expected table for '%s'", self.name)
            return {}
        return raw if isinstance(raw, dict) else {}

    def run(self, config: SymprodConfig) -> list[CheckResult]:
        """Run every line item of the suite.

        Args:
            config: Bounds and sampling settings.

        Returns:
            One CheckResult per line item, in table order.
        """
        data = self.load_expected()
        if not data:
            return [
                CheckResult(
                    suite=self.name,
                    name="expected table",
                    status=CheckStatus.ERROR,
                    actual=f"missing or unreadable: {self._expected_path.name}",
                )
            ]
        checker = TableChecker(self.name, data.get("groups", {}), config)
        results = [checker.run(check) for check in data.get("checks", [])]
        results.extend(self.extra_checks(checker))
        logger.info(
            "Suite '%s': %d/%d line items passed",
            self.name,
            sum(1 for r in results if r.passed),
            len(results),
        )
        return results

    def extra_checks(self, checker: TableChecker) -> list[CheckResult]:
        """Return line items computed in code rather than from the table."""
        return []


_suite_registry: dict[str, type[ExampleSuite]] = {}


def register_suite(suite_class: type[ExampleSuite]) -> type[ExampleSuite]:
    """Register a suite class under its example id (usable as a decorator)."""
    instance = suite_class()
    _suite_registry[instance.name] = suite_class
    return suite_class


def get_registered_suites() -> dict[str, type[ExampleSuite]]:
    """Return all registered suite classes keyed by example id."""
    return dict(_suite_registry)


class ReproductionRunner:
    """Runs reproduction suites and aggregates their line items.

    Attributes:
        suites: The suite instances to run, in order.
        config: Configuration for bounds and concurrency.
    """

    def __init__(self, suites: list[ExampleSuite], config: SymprodConfig | None = None) -> None:
        self._suites = suites
        self._config = config or SymprodConfig()

    @classmethod
    def from_names(cls, names: list[str], config: SymprodConfig | None = None) -> ReproductionRunner:
        """Create a runner from example ids; ``all`` selects every registered suite.

        Raises:
            SelectorError: If an id is not registered.
        """
        registry = get_registered_suites()
        if names == ["all"]:
            names = sorted(registry)
        suites: list[ExampleSuite] = []
        for name in names:
            suite_class = registry.get(name)
            if suite_class is None:
                known = ", ".join(sorted(registry))
                raise SelectorError(f"unknown example '{name}' (known: {known}, all)")
            suites.append(suite_class())
        return cls(suites, config)

    async def run(self) -> ReproduceReport:
        """Run all suites and return the aggregated report."""
        if self._config.runner.parallel:
            per_suite = await self._run_parallel()
        else:
            per_suite = [self._run_one(suite) for suite in self._suites]

        results = tuple(r for batch in per_suite for r in batch)
        passed = sum(1 for r in results if r.passed)
        return ReproduceReport(
            examples=tuple(s.name for s in self._suites),
            results=results,
            passed=passed,
            failed=len(results) - passed,
        )

    async def _run_parallel(self) -> list[list[CheckResult]]:
        """Run suites in worker threads with a semaphore limit."""
        semaphore = asyncio.Semaphore(self._config.runner.max_workers)
        batches: list[list[CheckResult]] = [[] for _ in self._suites]

        async def _run_with_semaphore(idx: int, suite: ExampleSuite) -> None:
            async with semaphore:
                batches[idx] = await asyncio.to_thread(self._run_one, suite)

        try:
            async with asyncio.TaskGroup() as tg:
                for i, suite in enumerate(self._suites):
                    tg.create_task(_run_with_semaphore(i, suite))
        except ExceptionGroup as group:
            bound_errors = group.subgroup(ResourceBoundError)
            if bound_errors is None:
                raise
            raise bound_errors.exceptions[0] from group

        return batches

    def _run_one(self, suite: ExampleSuite) -> list[CheckResult]:
        try:
            return suite.run(self._config)
        except ResourceBoundError:
            raise
        except Exception as exc:
            logger.exception("Reproduction suite '%s' failed", suite.name)
            return [
                CheckResult(
                    suite=suite.name,
                    name="suite",
                    status=CheckStatus.ERROR,
                    actual=str(exc),
                )
            ]


def reproduce(names: list[str], config: SymprodConfig | None = None) -> ReproduceReport:
    """Run the named suites synchronously."""
    return asyncio.run(ReproductionRunner.from_names(names, config).run())
