"""Tests for the command line."""

import json
from fractions import Fraction

import pytest
from pydantic import ValidationError

from app.main import run
from app.schemas.run import RunConfig, parse_rational


@pytest.fixture
def cli(tmp_path, capsys):
    """Run a command with a private cache; returns (exit code, stdout, stderr)."""

    def invoke(*argv: str):
        command, *rest = argv
        code = run([command, "--cache-dir", str(tmp_path / "cache"), "--log-level", "ERROR", *rest])
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return invoke


class TestGenFunCommand:
    """Test genfun output formats."""

    def test_text(self, cli):
        """Test the text layout."""
        code, out, _ = cli("genfun", "--kind", "periodic-even", "--size", "6")
        assert code == 0
        assert out.splitlines() == [
            "periodic-even L=6",
            "Z_L F_L(x) = 2x^3 + 3x^2 + 2x",
            "Z_L = 7",
            "source: closed-form",
        ]

    def test_json(self, cli):
        """Test JSON output with decimal-string coefficients."""
        code, out, _ = cli("genfun", "--kind", "reflecting-odd", "-L", "7", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["coefficients"] == ["26", "59", "59", "26"]
        assert data["z"] == "170"

    def test_csv(self, cli):
        """Test CSV output, one row per power."""
        code, out, _ = cli("genfun", "--kind", "reflecting-even", "--size", "4", "--format", "csv")
        assert code == 0
        assert out.splitlines() == ["k,coefficient", "0,0", "1,1", "2,2"]

    def test_cache_is_written(self, cli, tmp_path):
        """Test that a computed function lands in the cache directory."""
        cli("genfun", "--kind", "periodic-even", "--size", "8")
        assert (tmp_path / "cache" / "periodic-even-L8.json").exists()

    def test_out_file(self, cli, tmp_path):
        """Test that --out writes to a file instead of stdout."""
        target = tmp_path / "out" / "genfun.txt"
        code, out, _ = cli("genfun", "--kind", "periodic-even", "--size", "4", "--out", str(target))
        assert code == 0
        assert out == ""
        assert "Z_L = 2" in target.read_text(encoding="utf-8")

    def test_parity_mismatch(self, cli):
        """Test that a size of the wrong parity is a usage error."""
        code, _, err = cli("genfun", "--kind", "periodic-even", "--size", "7")
        assert code == 2
        assert "requires even L" in err

    def test_missing_flag(self):
        """Test that argparse rejects a missing required flag."""
        with pytest.raises(SystemExit) as info:
            run(["genfun", "--kind", "periodic-even"])
        assert info.value.code == 2


class TestOracleCommand:
    """Test the ground-state command."""

    def test_odd_cylinder(self, cli):
        """Test ground-state statistics of the odd cylinder."""
        code, out, _ = cli("oracle", "--kind", "periodic-odd", "--size", "5")
        assert code == 0
        assert "Z_L = 25" in out
        assert "Z_L F_L(x) = 4x^2 + 11x + 10" in out

    def test_budget(self, cli):
        """Test that a size above --max-sites exits with the budget code."""
        code, _, err = cli("oracle", "--kind", "periodic-odd", "--size", "7", "--max-sites", "5")
        assert code == 3
        assert "error:" in err

    def test_budget_as_json(self, cli):
        """Test that errors are also printed as JSON under --format json."""
        code, out, _ = cli("oracle", "--kind", "periodic-odd", "--size", "7", "--max-sites", "5", "--format", "json")
        assert code == 3
        data = json.loads(out)
        assert data["error"] == "budget"
        assert data["exit_code"] == 3


class TestAsymptCommand:
    """Test closed-form coefficient output."""

    def test_cylinder_json(self, cli):
        """Test the cylinder coefficients and the g-factor at x = 2."""
        code, out, _ = cli("asympt", "--kind", "periodic-even", "--x", "2", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["branch"] == "low"
        assert data["epsilon"] == "+1"
        assert {"f0", "f1", "f2", "g_AL"} <= set(data)
        assert float(data["r"]) == pytest.approx(0.5)

    def test_strip_sign_with_size(self, cli):
        """Test that --size gives the sign of the exact value."""
        code, out, _ = cli("asympt", "--kind", "reflecting-odd", "--x", "-1", "--size", "7")
        assert code == 0
        assert "epsilon: 0" in out
        assert "g_AL" not in out

    def test_malformed_x(self, cli):
        """Test that a malformed rational is a usage error."""
        code, _, err = cli("asympt", "--kind", "periodic-even", "--x", "two")
        assert code == 2
        assert "malformed rational" in err


class TestTablesAndConstants:
    """Test the table and constants commands."""

    def test_constants_csv(self, cli):
        """Test the special-point constants of the even strip."""
        code, out, _ = cli("constants", "--kind", "reflecting-even", "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "kind,x,g0,g1,g2"
        assert len(lines) == 5

    def test_constants_refuse_cylinder(self, cli):
        """Test that the constants are strip-only."""
        code, _, _ = cli("constants", "--kind", "periodic-even")
        assert code == 2

    def test_small_table(self, cli):
        """Test that the odd strip table matches its reference rows."""
        code, out, _ = cli("table", "strip-odd", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert len(data["rows"]) == 6
        assert all(row[-1] == "yes" for row in data["rows"])

    def test_table_has_no_svg(self, cli):
        """Test that tables refuse svg output."""
        code, _, _ = cli("table", "strip-odd", "--format", "svg")
        assert code == 2


class TestCheckAndFit:
    """Test the check and fit commands."""

    def test_check_ode(self, cli):
        """Test the differential equation suite."""
        code, out, _ = cli("check", "ode")
        assert code == 0
        assert out.strip() == "ode: 100/100 passed"

    def test_fit_svg_needs_out(self, cli):
        """Test that svg output requires a file."""
        code, _, _ = cli("fit", "--kind", "periodic-even", "--x", "2", "--format", "svg")
        assert code == 2

    def test_inverted_range(self, cli):
        """Test that n-min above n-max is a usage error."""
        code, _, err = cli("fit", "--kind", "periodic-even", "--x", "2", "--n-min", "20", "--n-max", "10")
        assert code == 2
        assert "exceeds" in err

    def test_fit_text(self, cli):
        """Test a short fit on the odd strip."""
        code, out, _ = cli(
            "fit", "--kind", "reflecting-odd", "--x", "1/2", "--n-min", "6", "--n-max", "30", "--bits", "128", "--jobs", "1"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("reflecting-odd x=1/2")
        assert lines[1].startswith("windows: ")
        assert any(line.strip().startswith("g1 =") for line in lines)

    @pytest.mark.slow
    def test_curves_svg(self, cli, tmp_path):
        """Test the curve plot as SVG."""
        target = tmp_path / "curves.svg"
        code, _, _ = cli("figure", "cylinder-curves", "--grid=-2,-1,0,1", "--format", "svg", "--out", str(target))
        assert code == 0
        assert target.read_text(encoding="utf-8").lstrip().startswith("<?xml")


class TestCacheCommand:
    """Test cache statistics and clearing."""

    def test_stats(self, cli, tmp_path):
        """Test that stored entries are counted."""
        cli("genfun", "--kind", "periodic-even", "--size", "8")
        cli("genfun", "--kind", "reflecting-odd", "--size", "7")
        code, out, _ = cli("cache", "stats", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["columns"] == ["root", "entries", "bytes"]
        assert data["rows"][0][1] == "2"
        assert int(data["rows"][0][2]) > 0

    def test_clear(self, cli, tmp_path):
        """Test that clear removes every entry and reports how many."""
        cli("genfun", "--kind", "periodic-even", "--size", "8")
        code, out, _ = cli("cache", "clear", "--format", "csv")
        assert code == 0
        assert out.splitlines()[1].endswith(",1")
        assert not (tmp_path / "cache" / "periodic-even-L8.json").exists()
        _, out, _ = cli("cache", "stats", "--format", "csv")
        assert out.splitlines()[1].split(",")[1:] == ["0", "0"]

    def test_unknown_action(self):
        """Test that argparse rejects an unknown action."""
        with pytest.raises(SystemExit) as info:
            run(["cache", "compact"])
        assert info.value.code == 2


class TestRunConfig:
    """Test flag validation."""

    @pytest.mark.parametrize("text,value", [("1/2", Fraction(1, 2)), ("-0.9", Fraction(-9, 10)), ("3", Fraction(3))])
    def test_parse_rational(self, text, value):
        """Test exact parsing of fractions and decimals."""
        assert parse_rational(text) == value

    def test_floats_refused(self):
        """Test that binary floats are not accepted as rationals."""
        with pytest.raises(ValueError):
            parse_rational(0.1)

    def test_grid_from_string(self):
        """Test a comma separated grid."""
        config = RunConfig(command="figure", grid="-2, 1/2,0")
        assert config.grid == [Fraction(-2), Fraction(1, 2), Fraction(0)]

    def test_range(self):
        """Test the n range check."""
        with pytest.raises(ValidationError):
            RunConfig(command="fit", n_min=10, n_max=5)
