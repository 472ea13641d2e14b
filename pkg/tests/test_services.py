"""Tests for the check suites, tables and figure data."""

import io
from fractions import Fraction

import pytest

from app.asymptotics.params import Branch
from app.combinatorics import BoundaryKind
from app.core.errors import UsageError
from app.schemas.check import CheckOutcome, CheckSummary
from app.schemas.fit import CURVE_COLUMNS
from app.schemas.table import Table
from app.services.checks import check_identities, check_lemma, check_ode, check_tables, run_checks
from app.services.figures import (
    closed_form,
    cylinder_curves,
    default_grid,
    fit_rows,
    has_closed_form,
    reproduce_figure,
    write_csv,
)
from app.services.generating import GenFunService
from app.services.tables import TABLE_NAMES, build_table

PE, RE, RO = BoundaryKind.PERIODIC_EVEN, BoundaryKind.REFLECTING_EVEN, BoundaryKind.REFLECTING_ODD


class TestCheckSummary:
    """Test how failures are counted."""

    def test_conjectures_are_soft(self):
        """Test that conjecture failures only fail strict runs."""
        summary = CheckSummary(
            outcomes=[
                CheckOutcome(suite="identities", name="a", status="proved", passed=True),
                CheckOutcome(suite="identities", name="b", status="conjectured", passed=False),
            ]
        )
        assert summary.passed()
        assert not summary.passed(strict_conjectures=True)

    def test_required_failure(self):
        """Test that a proved failure always fails."""
        summary = CheckSummary(outcomes=[CheckOutcome(suite="ode", name="a", status="exact", passed=False)])
        assert not summary.passed()
        assert len(summary.required_failures) == 1


class TestCheckSuites:
    """Test the exact check suites on small ranges."""

    def test_tables(self):
        """Test the small-size tables against closed forms and the oracle up to L = 10."""
        outcomes = check_tables(max_sites=10)
        assert outcomes
        assert all(o.passed for o in outcomes), [o.name for o in outcomes if not o.passed]
        assert any("oracle" in o.name for o in outcomes)
        assert any("sum rule" in o.name for o in outcomes)

    def test_identities(self):
        """Test the identity suite at small n."""
        outcomes = check_identities(max_n=6, oracle_max_size=9)
        assert all(o.passed for o in outcomes)
        assert {o.status for o in outcomes} == {"proved", "conjectured"}

    def test_lemma(self):
        """Test the loop-count lemma up to L = 8."""
        outcomes = check_lemma(max_size=8)
        assert all(o.passed for o in outcomes), [o.name for o in outcomes if not o.passed]

    def test_ode(self):
        """Test the differential equation up to n = 12."""
        outcomes = check_ode(max_n=12)
        assert len(outcomes) == 24
        assert all(o.passed for o in outcomes)

    @pytest.mark.slow
    def test_run_all(self):
        """Test the full run with the default ranges."""
        summary = run_checks("all", max_sites=14)
        assert summary.passed()
        assert {o.suite for o in summary.outcomes} == {"tables", "identities", "lemma", "ode"}


class TestTables:
    """Test table regeneration."""

    def test_names(self):
        """Test the registered table names."""
        assert "cylinder-even" in TABLE_NAMES
        assert "cylinder-tail" in TABLE_NAMES

    @pytest.mark.parametrize("name", ["cylinder-even", "strip-even", "strip-odd"])
    def test_small_size_table(self, name):
        """Test that closed forms reproduce every reference row."""
        table = build_table(name, GenFunService())
        assert table.all_match
        assert len(table.rows) == (6 if name == "strip-odd" else 7)
        assert {row[5] for row in table.rows} == {"closed-form"}

    def test_odd_cylinder_table_respects_cap(self):
        """Test that odd cylinder rows above the cap are skipped."""
        table = build_table("cylinder-odd", GenFunService(max_sites=9))
        assert [row[0] for row in table.rows] == ["3", "5", "7", "9"]
        assert table.all_match

    def test_unknown(self):
        """Test that an unknown table is a usage error."""
        with pytest.raises(UsageError):
            build_table("no-such-table")

    def test_text_layout(self):
        """Test padded text output."""
        table = Table(name="t", columns=["a", "long"], rows=[["xyz", "1"]])
        assert table.as_text().splitlines() == ["a    long", "xyz  1"]

    def test_all_match(self):
        """Test that a single "no" fails the table."""
        table = Table(name="t", columns=["v", "match"], rows=[["1", "yes"], ["2", "no"]])
        assert not table.all_match


class TestFigures:
    """Test figure data."""

    def test_default_grids(self):
        """Test grid defaults per figure."""
        assert Fraction(-1) in default_grid("cylinder-f0")
        assert Fraction(-9, 10) in default_grid("strip-odd-g1")
        assert len(default_grid("cylinder-curves")) == 41

    def test_closed_form_branches(self):
        """Test that the off-branch closed form may be missing but the own branch is not."""
        assert closed_form(PE, "f0", Fraction(2), Branch.LOW) is not None
        assert closed_form(PE, "f0", Fraction(-2), Branch.HIGH) is not None

    def test_has_closed_form(self):
        """Test which coefficients have closed forms."""
        assert has_closed_form(PE, "f7")
        assert not has_closed_form(PE, "f8")
        assert has_closed_form(RE, "g1")
        assert not has_closed_form(RE, "g2")

    def test_curves(self):
        """Test that curves are exact reduced values in grid order."""
        rows = cylinder_curves([Fraction(0), Fraction(1)], sizes=(3,))
        assert [row.x for row in rows] == ["0", "1"]
        assert float(rows[0].value) == pytest.approx(2 / 7)
        assert float(rows[1].value) == pytest.approx(1.0)

    def test_curve_csv(self):
        """Test CSV output of curve rows."""
        rows = reproduce_figure("cylinder-curves", [Fraction(1)])
        sink = io.StringIO()
        write_csv(rows, sink, CURVE_COLUMNS)
        lines = sink.getvalue().splitlines()
        assert lines[0] == "x,n,value"
        assert len(lines) == 3

    def test_unknown_figure(self):
        """Test that an unknown figure id is a usage error."""
        with pytest.raises(UsageError):
            reproduce_figure("no-such-figure")

    def test_fit_rows(self):
        """Test a small strip fit row with both branch targets."""
        rows = fit_rows(RO, ["g0", "g1"], Fraction(2), n_min=6, n_max=30, bits=128, workers=1)
        assert [row.coeff_name for row in rows] == ["g0", "g1"]
        g0 = rows[0]
        assert g0.branch == "low"
        assert g0.target_low is not None
        assert float(g0.deviation) < 1e-2

    def test_plot_curves(self, tmp_path):
        """Test that the curve plot is written as SVG."""
        from app.services.plotting import plot_curves

        rows = cylinder_curves([Fraction(k, 2) for k in range(-4, 3)], sizes=(3, 4))
        path = plot_curves(rows, tmp_path / "plots" / "curves.svg")
        assert path.exists()
        assert "<svg" in path.read_text(encoding="utf-8")

    @pytest.mark.slow
    def test_plot_fit_rows(self, tmp_path):
        """Test a fit plot with both branch curves."""
        from app.services.plotting import plot_fit_rows

        rows = [
            *fit_rows(RE, ["g1"], Fraction(-2), n_min=6, n_max=30, bits=128, workers=1),
            *fit_rows(RE, ["g1"], Fraction(1), n_min=6, n_max=30, bits=128, workers=1),
        ]
        path = plot_fit_rows(rows, RE, tmp_path / "g1.svg")
        assert path.stat().st_size > 0


@pytest.mark.slow
class TestFitGrids:
    """Test default-protocol fits across x against the branch-correct closed forms."""

    @pytest.mark.parametrize("x", [Fraction(-2), Fraction(-1, 2), Fraction(1, 2), Fraction(5)])
    def test_cylinder_f0_f1(self, x):
        """Test f_0 and f_1 of the even cylinder on both branches."""
        rows = fit_rows(PE, ["f0", "f1"], x, workers=1)
        assert rows[0].branch == ("high" if x < -1 else "low")
        deviations = {row.coeff_name: float(row.deviation) for row in rows}
        assert deviations["f0"] < 1e-6
        assert deviations["f1"] < 1e-3

    @pytest.mark.parametrize("geometry", [RE, RO])
    @pytest.mark.parametrize(
        "x,tolerance",
        [(Fraction(0), 1e-2), (Fraction(1, 2), 1e-2), (Fraction(2), 1e-2), (Fraction(-9, 10), 2e-2), (Fraction(-2), 2e-2)],
    )
    def test_strip_g1(self, geometry, x, tolerance):
        """Test the log n coefficient of both strips."""
        (row,) = fit_rows(geometry, ["g1"], x, workers=1)
        assert float(row.deviation) < tolerance
