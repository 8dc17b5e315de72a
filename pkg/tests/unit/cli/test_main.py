"""Tests for the CLI entry point."""

from __future__ import annotations

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

import symprod
from symprod.cli.main import EXIT_RESOURCE, EXIT_VALIDATION, cli


class TestCLI:
    """Tests for the top-level group using Click's test runner."""

    def test_version(self) -> None:
        result = CliRunner().invoke(cli, ["--version"])
        assert result.exit_code == 0
        assert symprod.__version__ in result.output

    def test_help_lists_commands(self) -> None:
        result = CliRunner().invoke(cli, ["--help"])
        assert result.exit_code == 0
        for command in ("subgroups", "burnside", "filtration", "sp", "cat-basis", "reproduce"):
            assert command in result.output

    def test_init_creates_config(self, tmp_path: Path) -> None:
        output_path = tmp_path / "symprod.yaml"
        result = CliRunner().invoke(cli, ["init", "-o", str(output_path)])
        assert result.exit_code == 0
        content = output_path.read_text()
        for section in ("limits:", "runner:", "sampling:", "reporting:"):
            assert section in content, f"Missing config section: {section}"

    def test_init_template_loads(self, tmp_path: Path) -> None:
        output_path = tmp_path / "symprod.yaml"
        CliRunner().invoke(cli, ["init", "-o", str(output_path)])
        result = CliRunner().invoke(cli, ["sp", "Sym(2)", "1", "--json", "-c", str(output_path)])
        assert result.exit_code == 0

    def test_init_skips_existing(self, tmp_path: Path) -> None:
        output_path = tmp_path / "symprod.yaml"
        output_path.write_text("existing", encoding="utf-8")
        result = CliRunner().invoke(cli, ["init", "-o", str(output_path)])
        assert result.exit_code == 0
        assert "already exists" in result.output
        assert output_path.read_text() == "existing"


class TestErrors:
    """Tests for the mapping of library errors onto exit codes."""

    def test_bad_spec(self) -> None:
        result = CliRunner().invoke(cli, ["subgroups", "Sym("])
        assert result.exit_code == EXIT_VALIDATION
        assert "error:" in result.output

    def test_resource_bound(self) -> None:
        result = CliRunner().invoke(cli, ["subgroups", "Sym(4)", "--bound", "10"])
        assert result.exit_code == EXIT_RESOURCE
        assert "exceeds the configured bound 10" in result.output

    def test_json_and_csv_exclusive(self) -> None:
        result = CliRunner().invoke(cli, ["sp", "Sym(2)", "1", "--json", "--csv"])
        assert result.exit_code == 2
        assert "mutually exclusive" in result.output

    def test_bad_stage(self) -> None:
        result = CliRunner().invoke(cli, ["sp", "Sym(3)", "0"])
        assert result.exit_code == EXIT_VALIDATION

    def test_wrong_vector_length(self) -> None:
        result = CliRunner().invoke(cli, ["member", "Sym(2)", "2", "--elem", "[1]"])
        assert result.exit_code == EXIT_VALIDATION
        assert "error:" in result.output

    def test_missing_config(self, tmp_path: Path) -> None:
        result = CliRunner().invoke(cli, ["sp", "Sym(2)", "1", "-c", str(tmp_path / "nope.yaml")])
        assert result.exit_code == EXIT_VALIDATION
        assert "not found" in result.output


class TestGroupCommands:
    """Tests for subgroups, burnside and doublecoset-check."""

    def test_subgroups_text(self) -> None:
        result = CliRunner().invoke(cli, ["subgroups", "Sym(3)"])
        assert result.exit_code == 0
        assert "6 subgroups in 4 classes" in result.output

    def test_subgroups_json(self) -> None:
        result = CliRunner().invoke(cli, ["subgroups", "Alt(4)", "--json"])
        data = json.loads(result.output)
        assert data["subgroup_count"] == 10
        assert len(data["classes"]) == 5

    @pytest.mark.slow
    def test_subgroups_alt5(self) -> None:
        result = CliRunner().invoke(cli, ["subgroups", "Alt(5)", "--json"])
        assert result.exit_code == 0
        assert len(json.loads(result.output)["classes"]) == 9

    def test_burnside_csv(self) -> None:
        result = CliRunner().invoke(cli, ["burnside", "Sym(2)", "--csv"])
        assert result.exit_code == 0
        assert result.output.splitlines()[1] == "class0,2,1"

    def test_doublecoset_check(self) -> None:
        result = CliRunner().invoke(cli, ["doublecoset-check", "Sym(3)", "--json"])
        assert result.exit_code == 0
        assert json.loads(result.output)["pairs_checked"] == 16


class TestFiltrationCommands:
    """Tests for filtration, sp, member and saturation."""

    def test_sp_json(self) -> None:
        result = CliRunner().invoke(cli, ["sp", "Sym(4)", "3", "--json"])
        assert result.exit_code == 0
        assert result.output.strip() == '{"rank":1,"torsion":[3]}'

    def test_sp_infinity(self) -> None:
        result = CliRunner().invoke(cli, ["sp", "Sym(4)", "inf", "--json"])
        assert result.output.strip() == '{"rank":1,"torsion":[]}'

    def test_filtration(self) -> None:
        result = CliRunner().invoke(cli, ["filtration", "Sym(3)", "--max-n", "3", "--json"])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert [s["quotient"]["rank"] for s in data["stages"]] == [4, 2, 1]
        assert data["stabilization"] == 3

    def test_filtration_parallel(self) -> None:
        args = ["filtration", "Sym(4)", "--max-n", "4", "--json"]
        sequential = CliRunner().invoke(cli, [*args, "--sequential"])
        parallel = CliRunner().invoke(cli, [*args, "--parallel"])
        assert parallel.output == sequential.output

    def test_member(self) -> None:
        result = CliRunner().invoke(cli, ["member", "Sym(2)", "2", "--elem", "[-1,2]", "--json"])
        assert result.exit_code == 0
        assert json.loads(result.output)["member"] is True

    def test_not_member(self) -> None:
        result = CliRunner().invoke(cli, ["member", "Sym(2)", "1", "--elem", "[-1,2]", "--json"])
        data = json.loads(result.output)
        assert data["member"] is False
        assert data["coordinates"] is None

    def test_saturation(self) -> None:
        result = CliRunner().invoke(cli, ["saturation", "Sym(2)", "2", "--elem", "[-2,4]", "--json"])
        assert json.loads(result.output)["member"] is True

    def test_output_file(self, tmp_path: Path) -> None:
        out = tmp_path / "reports" / "sp.json"
        result = CliRunner().invoke(cli, ["sp", "Sym(3)", "2", "--json", "-o", str(out)])
        assert result.exit_code == 0
        assert json.loads(out.read_text()) == {"rank": 2, "torsion": []}

    def test_config_default_format(self, tmp_path: Path) -> None:
        config = tmp_path / "symprod.yaml"
        config.write_text("reporting:\n  default_format: json\n", encoding="utf-8")
        result = CliRunner().invoke(cli, ["sp", "Sym(2)", "1", "-c", str(config)])
        assert result.output.strip() == '{"rank":2,"torsion":[]}'


class TestCategoryCommands:
    """Tests for cat-basis and compose-check."""

    def test_cat_basis(self) -> None:
        result = CliRunner().invoke(cli, ["cat-basis", "Sym(2)", "Sym(2)", "--json"])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert len(data["pairs"]) == 3

    def test_compose_check(self) -> None:
        result = CliRunner().invoke(
            cli, ["compose-check", "Sym(2)", "Sym(2)", "Sym(2)", "--json", "--seed", "5"]
        )
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["seed"] == 5
        assert data["failures"] == []


class TestReproduceCommands:
    """Tests for reproduce and examples."""

    def test_examples(self) -> None:
        result = CliRunner().invoke(cli, ["examples"])
        assert result.exit_code == 0
        assert "s2" in result.output
        assert "pgroups" in result.output

    def test_reproduce_s2(self) -> None:
        result = CliRunner().invoke(cli, ["reproduce", "s2", "--json"])
        assert result.exit_code == 0
        assert json.loads(result.output)["failed"] == 0

    def test_reproduce_unknown(self) -> None:
        result = CliRunner().invoke(cli, ["reproduce", "s7"])
        assert result.exit_code == EXIT_VALIDATION
        assert "unknown example" in result.output

    @pytest.mark.parametrize("mode", ["--sequential", "--parallel"])
    def test_reproduce_bound_exit_code(self, mode: str) -> None:
        result = CliRunner().invoke(cli, ["reproduce", "s5", "--bound", "10", mode])
        assert result.exit_code == EXIT_RESOURCE
        assert "group order 120 exceeds the configured bound 10" in result.output
