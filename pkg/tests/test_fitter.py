"""Tests for sample collection and the expansion fitter."""

from fractions import Fraction

import mpmath
import pytest

from app.asymptotics.precision import context, log_abs
from app.combinatorics import BoundaryKind
from app.core.errors import FitError, UsageError
from app.engine.fitter import BasisSpec, FitProtocol, coefficient_name, fit_expansion
from app.engine.sampling import Parity, Sample, SampleSeries, collect_series
from app.exact.evaluate import reduced_value
from app.services.validation import (
    CONSTANTS_TOLERANCE,
    check_initial_data,
    check_special_point_constants,
    check_tail_coefficients,
)

PE, RE, RO = BoundaryKind.PERIODIC_EVEN, BoundaryKind.REFLECTING_EVEN, BoundaryKind.REFLECTING_ODD

BITS = 256


def planted_series(
    geometry: BoundaryKind, coefficients: dict[str, str], ns: range, bits: int = BITS
) -> SampleSeries:
    """Series whose log-magnitudes are exactly the given expansion."""
    ctx = context(bits)
    basis = BasisSpec(tuple(coefficients))
    weights = [ctx.mpf(c) for c in coefficients.values()]
    series = SampleSeries(geometry=geometry, x=Fraction(2), parity=Parity.ALL, bits=bits)
    for n in ns:
        value = ctx.fsum(w * b for w, b in zip(weights, basis.row(ctx, n)))
        series.samples.append(Sample(n=n, sign=1, log_abs=value))
    return series


class TestBasisSpec:
    """Test basis parsing and defaults."""

    def test_default_cylinder(self):
        """Test the cylinder basis n, 1, n^-1, ..."""
        assert BasisSpec.default(PE, 4).terms == ("n", "1", "n^-1", "n^-2")

    def test_default_strip(self):
        """Test the strip basis with its log n term."""
        basis = BasisSpec.default(RE, 5)
        assert basis.terms == ("n", "log n", "1", "n^-1", "n^-2")
        assert basis.has_log

    def test_parse(self):
        """Test parsing a comma separated basis."""
        assert BasisSpec.parse("n, 1, n^-2").terms == ("n", "1", "n^-2")

    @pytest.mark.parametrize("terms", [("n", "n^2", "1"), ("n", "n", "1"), ("log n", "1"), ("n", "n^-0", "1")])
    def test_invalid(self, terms):
        """Test that unknown, repeated or incomplete bases are refused."""
        with pytest.raises(UsageError):
            BasisSpec(terms)

    def test_too_small_default(self):
        """Test that a strip basis needs at least three terms."""
        with pytest.raises(UsageError):
            BasisSpec.default(RE, 2)

    def test_coefficient_names(self):
        """Test f_j names on the cylinder and g_j names on the strip."""
        assert [coefficient_name(PE, t) for t in ("n", "1", "n^-1", "n^-3")] == ["f0", "f1", "f2", "f4"]
        assert [coefficient_name(RO, t) for t in ("n", "log n", "1", "n^-1")] == ["g0", "g1", "g2", "g3"]

    def test_protocol(self):
        """Test the default protocols."""
        assert FitProtocol.default(PE).parity is Parity.ODD
        assert FitProtocol.default(RE).parity is Parity.EVEN


class TestFitExpansion:
    """Test the fitter on planted expansions."""

    def test_recovers_cylinder(self):
        """Test exact recovery of a planted cylinder expansion."""
        planted = {"n": "0.3", "1": "-0.1", "n^-1": "0.05", "n^-2": "-0.02"}
        ctx = context(BITS)
        report = fit_expansion(planted_series(PE, planted, range(10, 30)), BasisSpec(tuple(planted)))
        for name, value in zip(("f0", "f1", "f2", "f3"), planted.values()):
            assert abs(report.coefficient(name).value - ctx.mpf(value)) < mpmath.mpf("1e-50")
            assert report.coefficient(name).stability < mpmath.mpf("1e-50")

    def test_recovers_strip(self):
        """Test exact recovery with a log n term."""
        planted = {"n": "-0.2", "log n": "0.125", "1": "0.7", "n^-1": "0.3"}
        ctx = context(BITS)
        report = fit_expansion(planted_series(RE, planted, range(20, 40)), BasisSpec(tuple(planted)))
        assert abs(report.coefficient("g1").value - ctx.mpf("0.125")) < mpmath.mpf("1e-50")
        assert abs(report.coefficient("g2").value - ctx.mpf("0.7")) < mpmath.mpf("1e-50")

    def test_extra_term_is_zero(self):
        """Test that an unneeded basis term fits to zero."""
        planted = {"n": "0.3", "1": "-0.1"}
        series = planted_series(PE, planted, range(10, 20))
        report = fit_expansion(series, BasisSpec(("n", "1", "n^-1")))
        assert abs(report.coefficient("f2").value) < mpmath.mpf("1e-50")

    def test_least_squares(self):
        """Test that windows longer than the basis use least squares."""
        planted = {"n": "0.3", "1": "-0.1", "n^-1": "0.05"}
        report = fit_expansion(planted_series(PE, planted, range(10, 30)), BasisSpec(tuple(planted)), window=6)
        assert report.window == 6
        assert abs(report.coefficient("f0").value - context(BITS).mpf("0.3")) < mpmath.mpf("1e-50")

    def test_recovers_at_working_precision(self):
        """Test recovery of a five-term expansion at 512 bits over n = 101..199."""
        planted = {"n": "-0.45", "1": "0.2", "n^-1": "1.5", "n^-2": "-3", "n^-3": "0.75"}
        ctx = context(512)
        series = planted_series(PE, planted, range(101, 200), bits=512)
        report = fit_expansion(series, BasisSpec(tuple(planted)))
        for name, value in zip(("f0", "f1", "f2", "f3", "f4"), planted.values()):
            assert abs(report.coefficient(name).value - ctx.mpf(value)) < mpmath.mpf("1e-20")

    def test_windows(self):
        """Test that the last three windows are reported."""
        planted = {"n": "1", "1": "2"}
        report = fit_expansion(planted_series(PE, planted, range(1, 11)), BasisSpec(tuple(planted)))
        assert report.windows == [(7, 8), (8, 9), (9, 10)]
        assert (report.n_min, report.n_max) == (9, 10)

    def test_targets(self):
        """Test that targets attach by name and give deviations."""
        planted = {"n": "0.5", "1": "0.25"}
        report = fit_expansion(planted_series(PE, planted, range(1, 8)), BasisSpec(tuple(planted)))
        ctx = context(BITS)
        report = report.with_targets({"f0": ctx.mpf("0.4")})
        assert abs(report.coefficient("f0").deviation - (ctx.mpf("0.5") - ctx.mpf("0.4"))) < mpmath.mpf("1e-50")
        assert report.coefficient("f1").deviation is None

    def test_lookup_by_term(self):
        """Test that coefficients can be looked up by basis term."""
        planted = {"n": "0.5", "1": "0.25"}
        report = fit_expansion(planted_series(PE, planted, range(1, 8)), BasisSpec(tuple(planted)))
        assert report.coefficient("n") is report.coefficient("f0")
        with pytest.raises(KeyError):
            report.coefficient("g7")

    def test_window_smaller_than_basis(self):
        """Test that an underdetermined window is refused."""
        series = planted_series(PE, {"n": "1", "1": "1"}, range(1, 10))
        with pytest.raises(UsageError):
            fit_expansion(series, BasisSpec(("n", "1", "n^-1")), window=2)

    def test_log_term_on_cylinder(self):
        """Test that the log n term is refused on the cylinder."""
        series = planted_series(PE, {"n": "1", "1": "1"}, range(1, 10))
        with pytest.raises(UsageError):
            fit_expansion(series, BasisSpec(("n", "log n", "1")))

    def test_too_few_samples(self):
        """Test that fewer than three windows is a fit error."""
        series = planted_series(PE, {"n": "1", "1": "1"}, range(1, 4))
        with pytest.raises(FitError):
            fit_expansion(series, BasisSpec(("n", "1")))

    def test_empty_series(self):
        """Test that an empty series is a fit error."""
        series = SampleSeries(geometry=PE, x=Fraction(2), parity=Parity.ALL, bits=BITS)
        with pytest.raises(FitError):
            fit_expansion(series, BasisSpec(("n", "1")))

    def test_duplicate_n(self):
        """Test that repeated n values are refused."""
        series = planted_series(PE, {"n": "1", "1": "1"}, range(1, 8))
        series.samples.append(series.samples[-1])
        with pytest.raises(FitError):
            fit_expansion(series, BasisSpec(("n", "1")))


class TestCollectSeries:
    """Test exact sample collection."""

    def test_parity_filter(self):
        """Test that only odd n are sampled."""
        series = collect_series(PE, 2, 1, 10, parity=Parity.ODD, bits=BITS, workers=1)
        assert series.ns == [1, 3, 5, 7, 9]

    def test_values_are_exact_logs(self):
        """Test that samples are log|F~| of the exact values."""
        series = collect_series(RE, Fraction(1, 3), 2, 6, bits=BITS, workers=1)
        ctx = context(BITS)
        for sample in series.samples:
            assert abs(sample.log_abs - log_abs(ctx, reduced_value(RE, sample.n, Fraction(1, 3)))) < mpmath.mpf("1e-70")

    def test_signs(self):
        """Test that the cylinder sign alternates below the crossover."""
        series = collect_series(PE, -2, 1, 6, bits=BITS, workers=1)
        assert series.signs == [1, -1, 1, -1, 1, -1]

    def test_zeros_are_excluded(self):
        """Test that exact zeros are recorded and skipped."""
        series = collect_series(RO, -1, 1, 6, parity=Parity.ODD, bits=BITS, workers=1, use_special_forms=True)
        assert len(series) == 0
        assert series.excluded == [1, 3, 5]
        with pytest.raises(FitError):
            fit_expansion(series, BasisSpec.default(RO, 3))

    def test_crossover_needs_parity(self):
        """Test that mixed parity near x = -1 is refused."""
        with pytest.raises(UsageError):
            collect_series(PE, Fraction(-99, 100), 1, 5, workers=1)

    def test_invalid_range(self):
        """Test that an empty n range is refused."""
        with pytest.raises(UsageError):
            collect_series(PE, 2, 5, 4, workers=1)

    @pytest.mark.slow
    def test_worker_pool(self):
        """Test that the process pool gives the same series."""
        serial = collect_series(RE, 2, 5, 14, bits=BITS, workers=1)
        pooled = collect_series(RE, 2, 5, 14, bits=BITS, workers=2)
        assert serial.values == pooled.values


class TestFitsOnExactData:
    """Test fits of exact data against the closed forms."""

    @pytest.mark.slow
    def test_cylinder_at_two(self):
        """Test f_0 and f_1 at x = 2 from n = 41..79."""
        from app.asymptotics.coefficients import f_coeff

        series = collect_series(PE, 2, 41, 80, parity=Parity.ODD, bits=BITS, workers=1)
        report = fit_expansion(series, BasisSpec.default(PE, 6))
        assert abs(report.coefficient("f0").value - f_coeff(0, 2, BITS)) < mpmath.mpf("1e-6")
        assert abs(report.coefficient("f1").value - f_coeff(1, 2, BITS)) < mpmath.mpf("1e-3")

    @pytest.mark.slow
    def test_strip_constants_at_zero(self):
        """Test g_0 and g_1 of the even strip at x = 0."""
        report = check_special_point_constants(RE, 0, n_min=10, n_max=40, bits=BITS, workers=1)
        assert report.coefficient("g0").deviation < 1e-3
        assert report.coefficient("g1").deviation < 5e-2

    @pytest.mark.slow
    def test_initial_data(self):
        """Test the expansions of log(A_{n-1}/A_n) and log(AV_n^2/A_n)."""
        reports = check_initial_data(n_min=21, n_max=60, bits=BITS, workers=1)
        assert set(reports) == {Fraction(0), Fraction(-1)}
        for report in reports.values():
            assert report.coefficient("f0").deviation < mpmath.mpf("1e-6")
            assert report.coefficient("f1").deviation < mpmath.mpf("1e-3")

    @pytest.mark.slow
    def test_tail_at_two(self):
        """Test the n^-1 and n^-2 coefficients of the cylinder at x = 2."""
        report = check_tail_coefficients(2, n_min=101, n_max=200, terms=3, bits=512, workers=1)
        assert report.coefficient("f2").deviation < mpmath.mpf("1e-3")
        assert report.coefficient("f3").deviation < mpmath.mpf("1e-2")

    @pytest.mark.slow
    @pytest.mark.parametrize("geometry", [RE, RO])
    @pytest.mark.parametrize("x", [Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(2)])
    def test_special_point_constants(self, geometry, x):
        """Test (g_0, g_1, g_2) at every special point with the default protocol."""
        report = check_special_point_constants(geometry, x, workers=1)
        for name, tolerance in CONSTANTS_TOLERANCE.items():
            assert report.coefficient(name).deviation < tolerance, name
