"""Small- and large-radius expansions: printed rows, oracles, remainders.

One test (the d=1 residual-decay ratio) pins a quoted decay rate that the
truncated comparison series cannot produce -- its next correction row
vanishes identically, so the residual falls a full two powers faster.  It
is kept at the quoted rate and fails; see acceptance criterion 7.
"""

import math

import mpmath
import numpy as np
import pytest

from casimir_harmonic.asymptotics import (ConformalSlopeFamily,
                                          SeriesExpansion, VChartFamily,
                                          asymptotic_match_report,
                                          large_r_expansion,
                                          small_r_expansion)
from casimir_harmonic.continuation import RSquarePoly, build_P_polynomials
from casimir_harmonic.jets import Jet, derivative, jet_lift_and_compose
from casimir_harmonic.kernels import HarmonicConfig, xi_conformal
from casimir_harmonic.specfun import EULER_GAMMA

mpmath.mp.dps = 25

PI = math.pi


def _conformal_small_r(d, comp, n_terms, tol=1e-10):
    p0, p1 = build_P_polynomials(d, comp, xi_conformal(d))
    return small_r_expansion(p0, p1 if d % 2 == 1 else None, n_terms,
                             tol=tol)


def test_small_r_d1_tt_conformal_printed_rows():
    series = _conformal_small_r(1, "tt", 3)
    printed = [-0.0153, 0.0164, -0.0796, 0.0262]
    for row, want in zip(series.rows, printed):
        assert row.coefficient == pytest.approx(want, abs=1.5e-4)
    assert [row.r_power for row in series.rows] == [0, 2, 4, 6]


def test_small_r_d3_rr_square_leading_row():
    lo = build_P_polynomials(3, "rr", xi_conformal(3))
    hi = build_P_polynomials(3, "rr", xi_conformal(3) + 0.25)

    def scaled_diff(idx):
        return RSquarePoly(
            lo[idx].degree,
            lambda t, i=idx: 4.0 * (hi[i].coefficient_values(t)
                                    - lo[i].coefficient_values(t)),
            lo[idx].lam)

    # odd d: the t0 profile carries both the plain and the ln-tau integrals
    series = small_r_expansion(scaled_diff(0), scaled_diff(1), 2, tol=1e-10)
    assert series.rows[0].coefficient == pytest.approx(0.0095, abs=1.5e-4)


def _toy_poly():
    # P = 1 carried by an explicit e^-tau damping so the tau-integrals exist
    return RSquarePoly(0, lambda t: np.exp(-t)[None, :], 0.0)


def _toy_direct(r):
    # F(r) = int_0^inf e^-tau e^(-r^2 tanh tau) dtau by an independent rule
    return float(mpmath.quad(
        lambda t: mpmath.e ** (-t) * mpmath.e ** (-r * r * mpmath.tanh(t)),
        [0, mpmath.inf]))


def test_small_r_toy_oracle():
    """Constant P with exponential damping: recipe vs direct quadrature."""
    series = small_r_expansion(_toy_poly(), None, 3, tol=1e-12)
    # series evaluation against the independent integral at r = 0.1
    assert series.evaluate(0.1) == pytest.approx(_toy_direct(0.1), abs=1e-8)
    # and coefficient-by-coefficient against a polynomial fit in r^2
    rs = np.array([0.05, 0.1, 0.15, 0.2, 0.25, 0.3])
    samples = np.array([_toy_direct(r) for r in rs])
    fitted = np.polyfit(rs ** 2, samples, 3)[::-1]
    assert fitted[0] == pytest.approx(series.rows[0].coefficient, abs=1e-8)
    # the fit's higher slots absorb the r^8 truncation; a1 is looser
    assert fitted[1] == pytest.approx(series.rows[1].coefficient, abs=1e-5)


def test_small_r_remainder_is_global():
    """|F(r) - partial sum| <= C r^(2(N+1)) at every probed r, not just
    asymptotically."""
    series = small_r_expansion(_toy_poly(), None, 3, tol=1e-12)
    c_next = series.remainder["F"]
    power = series.remainder["r_power"]
    assert c_next >= 0.0
    for r in (0.2, 0.5, 1.0, 2.0):
        diff = abs(_toy_direct(r) - series.evaluate(r))
        assert diff <= c_next * r ** power + 1e-10


def test_small_r_powers_strictly_ordered():
    series = _conformal_small_r(3, "tt", 4)
    powers = [row.r_power for row in series.rows]
    assert powers == sorted(powers)
    assert len(set(powers)) == len(powers)


def test_large_r_d1_tt_conformal_rows():
    _, limit = large_r_expansion(VChartFamily(1, "tt", 0.0))
    assert limit.coefficient(2.0, has_log=True) == pytest.approx(
        -1.0 / (8.0 * PI), rel=1e-9)
    assert limit.coefficient(2.0) == pytest.approx(
        -(EULER_GAMMA + 1.0) / (8.0 * PI), rel=1e-9)
    assert limit.coefficient(-2.0) == pytest.approx(1.0 / (8.0 * PI),
                                                    rel=1e-9)
    assert limit.coefficient(-6.0) == pytest.approx(49.0 / (120.0 * PI),
                                                    rel=1e-9)


def test_large_r_d2_tt_conformal_rows_log_free():
    _, limit = large_r_expansion(VChartFamily(2, "tt", xi_conformal(2)))
    assert limit.coefficient(3.0) == pytest.approx(-1.0 / (12.0 * PI),
                                                   rel=1e-9)
    assert limit.coefficient(-5.0) == pytest.approx(-19.0 / (2560.0 * PI),
                                                    rel=1e-9)
    for row in limit.rows:
        if row.has_log:
            assert row.coefficient == 0.0


def test_large_r_d3_rr_square_rows():
    _, limit = large_r_expansion(ConformalSlopeFamily(3, "rr"))
    assert limit.coefficient(0.0, has_log=True) == pytest.approx(
        1.0 / (4.0 * PI * PI), rel=1e-9)
    assert limit.coefficient(0.0) == pytest.approx(
        EULER_GAMMA / (4.0 * PI * PI), rel=1e-9)
    assert limit.coefficient(-4.0) == pytest.approx(1.0 / (6.0 * PI * PI),
                                                    rel=1e-9)


def test_arcth_over_v_jet():
    # the v-chart workhorse series: arcth(v)/v = 1 + v^2/3 + v^4/5 + ...
    v = Jet.variable(0.0, 6)
    ratio = jet_lift_and_compose("arcth", v).divide_by_increment()
    want = [1.0, 0.0, 1.0 / 3.0, 0.0, 1.0 / 5.0]
    for m, coeff in enumerate(want):
        assert derivative(ratio, m) / math.factorial(m) == pytest.approx(
            coeff, abs=1e-13)


def test_finite_vs_limit_tail_consistency():
    """The two forms differ by incomplete-gamma tails of size e^(-v0 r^2):
    visible at v0 r^2 = 18, below 1e-10 relative once v0 r^2 >= 25."""
    finite, limit = large_r_expansion(VChartFamily(1, "tt", 0.0), v0=0.5)
    diff_6 = abs(finite.evaluate(6.0) - limit.evaluate(6.0))
    assert diff_6 <= finite.gamma_tail_bound(6.0)
    assert diff_6 > 1e-10 * abs(limit.evaluate(6.0))  # genuinely visible
    diff_8 = abs(finite.evaluate(8.0) - limit.evaluate(8.0))
    assert diff_8 <= 1e-10 * abs(limit.evaluate(8.0))


@pytest.mark.parametrize("family", [VChartFamily(1, "tt", 0.0),
                                    VChartFamily(2, "rr", 0.125),
                                    ConformalSlopeFamily(3, "tt")])
def test_limit_rows_independent_of_v0(family):
    _, at_03 = large_r_expansion(family, v0=0.3)
    _, at_07 = large_r_expansion(family, v0=0.7)
    for row_a, row_b in zip(at_03.rows, at_07.rows):
        assert row_a.r_power == row_b.r_power
        assert row_a.has_log == row_b.has_log
        assert row_a.coefficient == pytest.approx(row_b.coefficient,
                                                  abs=1e-12, rel=1e-12)


def test_match_report_d1_quoted_ratio():
    """Quoted residual scaling r^-8 ln r^2 between r=5 and r=10, within a
    factor 3.  The computed residual falls two powers faster (the r^-8
    correction row of this family vanishes identically), so this fails."""
    cfg = HarmonicConfig(d=1, xi=0.0)
    report = asymptotic_match_report(cfg, "tt", "diamond", [5.0, 10.0])
    rows = report["rows"]
    got_ratio = abs(rows[0]["abs_diff"]) / abs(rows[1]["abs_diff"])
    theory = (10.0 / 5.0) ** 8 * math.log(25.0) / math.log(100.0)
    assert got_ratio / theory < 3.0
    assert theory / got_ratio < 3.0


def test_match_report_d2_remainder_scaling():
    cfg = HarmonicConfig(d=2, xi=xi_conformal(2))
    report = asymptotic_match_report(cfg, "tt", "diamond", [5.0, 10.0])
    rows = report["rows"]
    got_ratio = abs(rows[0]["abs_diff"]) / abs(rows[1]["abs_diff"])
    theory = (10.0 / 5.0) ** 9
    assert got_ratio / theory < 3.0
    assert theory / got_ratio < 3.0


def test_match_report_rows_within_bound():
    cfg = HarmonicConfig(d=3, xi=xi_conformal(3))
    report = asymptotic_match_report(cfg, "tt", "diamond", [5.0, 7.0, 10.0])
    assert all(row["within_bound"] for row in report["rows"])


def test_match_report_empty_probe():
    cfg = HarmonicConfig(d=1, xi=0.0)
    report = asymptotic_match_report(cfg, "tt", "diamond", [])
    assert report["rows"] == []
    assert report["slopes"] == []


def test_series_expansion_is_shared_shape():
    series = _conformal_small_r(2, "rr", 3)
    assert isinstance(series, SeriesExpansion)
    _, limit = large_r_expansion(VChartFamily(2, "rr", 0.125))
    assert isinstance(limit, SeriesExpansion)
    # large-r rows ordered from the leading power downward
    powers = [row.r_power for row in limit.rows]
    assert powers == sorted(powers, reverse=True)
