"""Tests for the suite registry and the reproduction runner."""

from __future__ import annotations

import asyncio
from pathlib import Path

import pytest

from symprod.core.config import SymprodConfig
from symprod.core.exceptions import ResourceBoundError, SelectorError
from symprod.core.models import CheckResult, CheckStatus
from symprod.reproduce import ExampleSuite, ReproductionRunner, get_registered_suites, reproduce
from symprod.reproduce.checks import TableChecker
from tests.fixtures.groups import make_config

_S2_TABLE = """\
groups:
  S2: "Sym(2)"
checks:
  - {kind: class_count, group: S2, expected: 2}
  - {kind: stabilization, group: S2, expected: 5}
"""


class _FileSuite(ExampleSuite):
    @property
    def name(self) -> str:
        return "file"


class _BrokenSuite(ExampleSuite):
    @property
    def name(self) -> str:
        return "broken"

    def run(self, config: SymprodConfig) -> list[CheckResult]:
        raise RuntimeError("table exploded")


class TestRegistry:
    """Tests for suite registration."""

    def test_registered_ids(self) -> None:
        assert set(get_registered_suites()) == {"s2", "s3", "s4", "s5", "a5", "pgroups"}

    def test_descriptions(self) -> None:
        for suite_class in get_registered_suites().values():
            assert suite_class().description

    def test_unknown_name(self) -> None:
        with pytest.raises(SelectorError, match="unknown example 's7'"):
            ReproductionRunner.from_names(["s7"])

    def test_all_selects_every_suite(self) -> None:
        runner = ReproductionRunner.from_names(["all"])
        assert [s.name for s in runner._suites] == sorted(get_registered_suites())


class TestExampleSuite:
    """Tests for table loading and line items."""

    def test_missing_table(self, tmp_path: Path) -> None:
        results = _FileSuite(tmp_path / "absent.yaml").run(SymprodConfig())
        assert len(results) == 1
        assert results[0].status == CheckStatus.ERROR
        assert "absent.yaml" in results[0].actual

    def test_unreadable_table(self, tmp_path: Path) -> None:
        path = tmp_path / "bad.yaml"
        path.write_text("{{not yaml", encoding="utf-8")
        assert _FileSuite(path).run(SymprodConfig())[0].status == CheckStatus.ERROR

    def test_pass_and_fail(self, tmp_path: Path) -> None:
        path = tmp_path / "table.yaml"
        path.write_text(_S2_TABLE, encoding="utf-8")
        results = _FileSuite(path).run(SymprodConfig())
        assert [r.status for r in results] == [CheckStatus.PASSED, CheckStatus.FAILED]
        assert (results[1].expected, results[1].actual) == ("5", "2")
        assert results[0].suite == "file"


class TestReproductionRunner:
    """Tests for running suites and aggregating results."""

    def test_s2(self) -> None:
        report = reproduce(["s2"])
        assert report.examples == ("s2",)
        assert report.all_passed
        assert report.passed == len(report.results) == 5

    def test_s3(self) -> None:
        report = reproduce(["s3"])
        assert report.all_passed, [r for r in report.results if not r.passed]

    def test_suite_exception_becomes_error(self) -> None:
        report = asyncio.run(ReproductionRunner([_BrokenSuite()]).run())
        assert report.failed == 1
        assert report.results[0].status == CheckStatus.ERROR
        assert report.results[0].actual == "table exploded"

    def test_parallel_keeps_suite_order(self) -> None:
        sequential = reproduce(["s3", "s2"], make_config(parallel=False))
        parallel = reproduce(["s3", "s2"], make_config(parallel=True, max_workers=2))
        assert parallel == sequential
        assert parallel.results[0].suite == "s3"

    @pytest.mark.parametrize("parallel", [False, True])
    def test_bound_violation_propagates(self, parallel: bool) -> None:
        with pytest.raises(ResourceBoundError) as excinfo:
            reproduce(["s2", "s5"], make_config(bound=10, parallel=parallel))
        assert excinfo.value.value == 120
        assert excinfo.value.bound == 10

    def test_checker_rejects_group_over_bound(self) -> None:
        with pytest.raises(ResourceBoundError):
            TableChecker("s5", {"S5": "Sym(5)"}, make_config(bound=10))

    def test_bound_error_not_downgraded_to_line_item(self, monkeypatch: pytest.MonkeyPatch) -> None:
        def _too_big(group: object, bound: int) -> None:
            raise ResourceBoundError("group order", 5040, bound)

        monkeypatch.setattr("symprod.reproduce.checks.subgroup_lattice", _too_big)
        checker = TableChecker("s2", {"S2": "Sym(2)"}, make_config())
        with pytest.raises(ResourceBoundError):
            checker.run({"kind": "class_count", "group": "S2", "expected": 2})
