"""Small- and large-radius expansions of the stress profiles.

Small radius: the Gaussian factor is expanded about r = 0, giving a pure
power series in r^2 whose coefficients are tau-integrals; the truncation
error carries an explicit constant, so the partial sums come with a hard
inequality rather than an asymptotic promise.

Large radius: substituting v = tanh(tau) turns each profile into a
Laplace-type integral int_0^1 e^{-r^2 v} v^lam (q0(v) + ln v q1(v)) dv.
Taylor-expanding the q's at v = 0 and keeping the incomplete-gamma
truncation produces the "finite form" (exact rows at finite r); letting
the incomplete gammas run to infinity gives the "limit form", a genuine
series in inverse powers of r with ln r^2 companions.  Both remainders
are folded into constants multiplying a single power of r.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .continuation import p_constants, u_affine_ladder, weight_exponent
from .jets import Jet, jet_lift_and_compose as lift
from .kernels import COMPONENTS, HyperbolicJets, xi_conformal
from .quadrature import WeightedIntegrand, integrate_semiaxis, integrate_unit_interval
from .specfun import digamma, g_log_gamma, gamma, lower_gamma, upper_gamma


@dataclass
class Row:
    r_power: float
    has_log: bool
    coefficient: float


@dataclass
class SeriesExpansion:
    rows: list
    remainder: dict = field(default_factory=dict)

    def evaluate(self, r):
        lg = math.log(r * r)
        return sum(row.coefficient * r ** row.r_power * (lg if row.has_log else 1.0)
                   for row in self.rows)

    def coefficient(self, r_power, has_log=False):
        for row in self.rows:
            if row.has_log == has_log and abs(row.r_power - r_power) < 1e-9:
                return row.coefficient
        return 0.0

    def remainder_bound(self, r):
        """Evaluate the stored remainder envelope at r."""
        c = self.remainder
        bound = c["F"] * r ** c["r_power"]
        if "G" in c:
            bound += c["G"] * abs(math.log(r * r)) * r ** c["r_power"]
        return bound


# ---------------------------------------------------------------------------
# small radius
# ---------------------------------------------------------------------------

def small_r_expansion(poly_main, poly_log, n_terms, tol=1e-9):
    """Power series sum_i a_i r^(2i) of a profile integral, with remainder.

    poly_main/poly_log are the RSquarePoly pair multiplying 1 and ln(tau);
    poly_log may be None.  The returned remainder dict carries a constant C
    such that |profile(r) - partial sum| <= C r^(2(n_terms+1)) on the stated
    validity range.
    """
    lam = poly_main.lam
    if poly_log is not None and poly_log.lam != lam:
        raise ValueError("main and log parts must share one tau weight")
    deg = poly_main.degree

    def moment(poly, j, k, log_power):
        def smooth(t):
            return poly.coefficient_values(t)[j] * np.tanh(t) ** k
        return integrate_semiaxis(WeightedIntegrand(lam, log_power, smooth), tol)

    coeffs = []
    for i in range(n_terms + 1):
        acc, acc_err = 0.0, 0.0
        for j in range(min(i, deg) + 1):
            k = i - j
            sign = (-1.0) ** k / math.factorial(k)
            v, e = moment(poly_main, j, k, 0)
            acc += sign * v
            acc_err += abs(sign) * e
            if poly_log is not None:
                v, e = moment(poly_log, j, k, 1)
                acc += sign * v
                acc_err += abs(sign) * e
        coeffs.append((acc, acc_err))

    # remainder constant: Taylor tail of exp(-r^2 tanh) per r^2-coefficient
    big_n = n_terms
    c_rem = 0.0
    for i in range(min(big_n + 1, deg) + 1):
        k = big_n + 1 - i

        def abs_smooth(t, _i=i, _k=k):
            m = poly_main.coefficient_values(t)[_i]
            if poly_log is not None:
                m = m + np.log(t) * poly_log.coefficient_values(t)[_i]
            return np.abs(m) * np.tanh(t) ** max(_k, 0)
        v, e = integrate_semiaxis(WeightedIntegrand(lam, 0, abs_smooth), 1e-8)
        c_rem += (v + e) / math.factorial(max(k, 0))
    validity = "r > 0" if deg <= big_n + 1 else "0 < r <= 1"

    rows = [Row(2.0 * i, False, c) for i, (c, _) in enumerate(coeffs)]
    remainder = {"r_power": 2.0 * (big_n + 1), "F": c_rem, "validity": validity,
                 "coefficient_errors": [e for _, e in coeffs]}
    return SeriesExpansion(rows, remainder)


# ---------------------------------------------------------------------------
# large radius
# ---------------------------------------------------------------------------

_DEFAULT_DEPTH = {1: 3, 2: 5, 3: 4}


class VChartFamily:
    """The v-chart coefficient functions q0_i, q1_i of one profile.

    profile 0 is the scale-free part (its integrand carries ln tau, which
    splits into ln v + a regular piece here); profile 1 multiplies the
    subtraction-scale constant and has no logarithm of its own.
    """

    def __init__(self, d, comp, xi, profile=0, n=None, pipeline=None):
        if comp not in COMPONENTS:
            raise ValueError(f"unknown component {comp!r}")
        if profile not in (0, 1):
            raise ValueError("profile must be 0 or 1")
        self.d, self.comp, self.xi, self.profile = d, comp, xi, profile
        self.a_main, self.a_slope, self.b_main, self.n = p_constants(d, n, pipeline)
        self.lam = weight_exponent(d, self.n)
        self.degree = self.n + 1

    def jets(self, v_jet):
        basis = HyperbolicJets.from_tanh(v_jet)
        main, slope = u_affine_ladder(basis, self.d, self.comp, self.xi, self.n)
        one_minus = 1.0 - v_jet * v_jet
        pref = lift("pow", basis.ratio, self.lam) * \
            lift("pow", one_minus, -(1.0 + self.lam))
        ln_reg = lift("log", basis.ratio) - lift("log", one_minus)
        q0, q1 = [], []
        for i in range(self.degree + 1):
            g0 = main[i]
            g1 = slope[i] if i < len(slope) else Jet.const(np.zeros(np.shape(g0.coeffs[0])), g0.order)
            p1_i = self.b_main * g0
            if self.profile == 1:
                q0.append(pref * p1_i)
                q1.append(0.0 * p1_i)
            else:
                p0_i = self.a_main * g0 + self.a_slope * g1
                q0.append(pref * (p0_i + ln_reg * p1_i))
                q1.append(pref * p1_i)
        return q0, q1


class ConformalSlopeFamily:
    """Exact xi-slope of a family, using that the brackets are affine in xi."""

    def __init__(self, d, comp, profile=0, n=None, pipeline=None):
        xi_c = xi_conformal(d)
        self._lo = VChartFamily(d, comp, xi_c, profile, n, pipeline)
        self._hi = VChartFamily(d, comp, xi_c + 0.25, profile, n, pipeline)
        self.d, self.comp, self.profile = d, comp, profile
        self.lam = self._lo.lam
        self.degree = self._lo.degree
        self.n = self._lo.n

    def jets(self, v_jet):
        lo0, lo1 = self._lo.jets(v_jet)
        hi0, hi1 = self._hi.jets(v_jet)
        q0 = [(h - l) * 4.0 for h, l in zip(hi0, lo0)]
        q1 = [(h - l) * 4.0 for h, l in zip(hi1, lo1)]
        return q0, q1


class FiniteLargeR:
    """Large-r rows with incomplete-gamma factors kept at finite argument.

    Exact for every r > 0 up to the Taylor/tail remainder recorded in
    ``remainder``; the limit form replaces each incomplete gamma by its
    full value, and ``gamma_tail_bound`` bounds exactly that replacement.
    """

    def __init__(self, lam, v0, depth, entries, remainder):
        self.lam = lam
        self.v0 = v0
        self.depth = depth
        self.entries = entries          # (i, m, q0_im, q1_im)
        self.remainder = remainder

    def rows_at(self, r):
        z0 = self.v0 * r * r
        by_power = {}
        for i, m, q0, q1 in self.entries:
            s = m + self.lam + 1.0
            p = 2.0 * (i - m) - 2.0 * self.lam - 2.0
            lg = lower_gamma(s, z0)
            glg = g_log_gamma(s, z0)
            slot = by_power.setdefault(round(p * 2), [0.0, 0.0, p])
            slot[0] += q0 * lg + q1 * glg
            slot[1] += -q1 * lg
        rows = []
        for key in sorted(by_power, reverse=True):
            a, b, p = by_power[key]
            rows.append(Row(p, False, a))
            if b != 0.0:
                rows.append(Row(p, True, b))
        return SeriesExpansion(rows, dict(self.remainder))

    def evaluate(self, r):
        return self.rows_at(r).evaluate(r)

    def gamma_tail_bound(self, r):
        """Bound on |finite form - limit form| at r (the completed tails)."""
        z0 = self.v0 * r * r
        lg2 = abs(math.log(r * r))
        total = 0.0
        for i, m, q0, q1 in self.entries:
            s = m + self.lam + 1.0
            p = 2.0 * (i - m) - 2.0 * self.lam - 2.0
            ug = upper_gamma(s, z0)
            gtail = gamma(s) * digamma(s) - g_log_gamma(s, z0)
            total += (abs(q0) * ug + abs(q1) * (abs(gtail) + lg2 * ug)) * r ** p
        return total


def _supremum_nodes(v0):
    return np.linspace(v0 / 513.0, v0, 513)


def large_r_expansion(family, depth=None, v0=0.5, tail_tol=1e-6):
    """(finite_form, limit_form) for a v-chart family.

    depth is the number of Taylor rows kept for the i = 0 coefficient
    (row i keeps depth + i of them, so all contributions down to the
    common remainder power are present).  Validity of the remainder
    envelope: r >= 1.
    """
    if depth is None:
        depth = _DEFAULT_DEPTH[family.d]
    lam, deg = family.lam, family.degree
    order = depth + deg + family.n + 1

    taylor0, taylor1 = family.jets(Jet.variable(0.0, order))
    entries = []
    for i in range(deg + 1):
        for m in range(depth + i):
            q0 = float(taylor0[i].coeffs[m])
            q1 = float(taylor1[i].coeffs[m])
            entries.append((i, m, q0, q1))

    # Taylor-remainder suprema of the (depth+i)-th v-derivatives on (0, v0]
    nodes = _supremum_nodes(v0)
    samp0, samp1 = family.jets(Jet.variable(nodes, order))
    f_const, g_const = 0.0, 0.0
    for i in range(deg + 1):
        mi = depth + i            # first dropped Taylor index
        s0 = math.factorial(mi) * 1.1 * float(np.max(np.abs(samp0[i].coeffs[mi])))
        s1 = math.factorial(mi) * 1.1 * float(np.max(np.abs(samp1[i].coeffs[mi])))
        sigma = mi + lam + 1.0
        f_const += s0 * gamma(sigma) / math.factorial(mi)
        f_const += s1 / (math.factorial(mi) * sigma * sigma)
        g_const += s1 * gamma(sigma) / math.factorial(mi)
        # integral tail past v0, folded with e^(-z) <= (p/(e z))^p
        t_i = _tail_integral(family, i, v0, tail_tol)
        f_const += t_i * (sigma / (math.e * v0)) ** sigma

    remainder = {"r_power": -2.0 * (depth + lam + 1.0), "F": f_const, "G": g_const,
                 "validity": "r >= 1"}
    finite = FiniteLargeR(lam, v0, depth, entries, remainder)

    by_power = {}
    for i, m, q0, q1 in entries:
        s = m + lam + 1.0
        p = 2.0 * (i - m) - 2.0 * lam - 2.0
        gs = gamma(s)
        slot = by_power.setdefault(round(p * 2), [0.0, 0.0, p])
        slot[0] += gs * (q0 + digamma(s) * q1)
        slot[1] += -gs * q1
    rows = []
    for key in sorted(by_power, reverse=True):
        a, b, p = by_power[key]
        rows.append(Row(p, False, a))
        if b != 0.0:
            rows.append(Row(p, True, b))
    limit = SeriesExpansion(rows, dict(remainder))
    return finite, limit


def _tail_integral(family, i, v0, tol):
    """int_{v0}^{1} v^lam (|q0_i| + |ln v| |q1_i|) dv, an upper estimate."""
    lam = family.lam

    def f(x):
        x = np.maximum(np.asarray(x, dtype=float), 1e-12)
        v = 1.0 - (1.0 - v0) * x
        q0, q1 = family.jets(Jet.variable(v, family.n + 1))
        a = np.abs(np.asarray(q0[i].coeffs[0]))
        b = np.abs(np.asarray(q1[i].coeffs[0]))
        return v ** lam * (a - np.log(v) * b) * (1.0 - v0)

    value, err = integrate_unit_interval(f, 0.0, tol)
    return (value + err) * 1.001


_REPORT_DEPTH = {1: 3, 2: 4, 3: 3}


def asymptotic_match_report(cfg, comp, part, r_values, v0=0.5, tol=1e-10):
    """Numeric-vs-series comparison table for one conformal part.

    The comparison object is the limit form truncated at the displayed
    row depth per dimension (slightly shallower than the default
    expansion depth), so the slope column shows the decay of the first
    surviving omitted row.  Note the inverse powers advance in steps of
    four, so that row sits two powers below the last kept one; a slope
    steeper than the remainder-order power of the kept truncation is
    expected, not a defect.  Empty r_values gives an empty table.
    """
    from .stress import conformal_split, stress_profiles

    d = cfg.d
    depth = _REPORT_DEPTH[d]
    if part == "diamond":
        fam = VChartFamily(d, comp, xi_conformal(d))
    elif part == "square":
        fam = ConformalSlopeFamily(d, comp)
    elif part == "raw":
        fam = VChartFamily(d, comp, cfg.xi)
    else:
        raise ValueError("part must be 'diamond', 'square', or 'raw'")
    finite, limit = large_r_expansion(fam, depth=depth, v0=v0)

    rows = []
    for r in r_values:
        r = float(r)
        if part == "raw":
            numeric = stress_profiles(cfg, comp, r, tol)[0]
        else:
            numeric = conformal_split(cfg, comp, r, tol)[part].t0
        series = limit.evaluate(r)
        diff = abs(numeric - series)
        bound = limit.remainder_bound(r) + finite.gamma_tail_bound(r)
        rows.append({"r": r, "numeric": numeric, "series": series,
                     "finite_series": finite.evaluate(r),
                     "abs_diff": diff, "bound": bound,
                     "within_bound": diff <= bound})
    slopes = []
    for lo, hi in zip(rows, rows[1:]):
        if lo["abs_diff"] > 0.0 and hi["abs_diff"] > 0.0:
            slopes.append(math.log(hi["abs_diff"] / lo["abs_diff"])
                          / math.log(hi["r"] / lo["r"]))
        else:
            slopes.append(math.nan)
    return {"component": comp, "part": part, "depth": depth,
            "remainder_power": limit.remainder["r_power"],
            "rows": rows, "slopes": slopes}
