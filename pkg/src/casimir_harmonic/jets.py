"""Truncated Taylor-jet arithmetic.

A ``Jet`` stores the Taylor coefficients (not derivatives) of a function
about ``base_point`` up to a chosen order.  ``coeffs[m]`` may be a scalar
or an ndarray, so a single jet can carry the expansion at a whole grid of
base points at once; all operations broadcast over that trailing shape.

Elementary functions are applied through ``jet_lift_and_compose`` using
the standard power-series recurrences; ``tanh`` and ``arcth`` are built
from the exp/log lifts rather than bespoke recurrences.
"""

import math

import numpy as np


class Jet:
    __slots__ = ("base_point", "order", "coeffs")

    def __init__(self, base_point, coeffs):
        coeffs = np.asarray(coeffs, dtype=float)
        self.base_point = base_point
        self.coeffs = coeffs
        self.order = coeffs.shape[0] - 1

    # -- construction -------------------------------------------------

    @staticmethod
    def variable(base_point, order):
        """The identity function as a jet: value base_point, slope 1."""
        base = np.asarray(base_point, dtype=float)
        coeffs = np.zeros((order + 1,) + base.shape)
        coeffs[0] = base
        if order >= 1:
            coeffs[1] = 1.0
        return Jet(base_point, coeffs)

    @staticmethod
    def const(value, order, base_point=0.0):
        value = np.asarray(value, dtype=float)
        coeffs = np.zeros((order + 1,) + value.shape)
        coeffs[0] = value
        return Jet(base_point, coeffs)

    # -- ring operations ----------------------------------------------

    def _aligned(self, other):
        k = min(self.order, other.order)
        return self.coeffs[: k + 1], other.coeffs[: k + 1], k

    def __add__(self, other):
        if isinstance(other, Jet):
            a, b, k = self._aligned(other)
            return Jet(self.base_point, a + b)
        c = self.coeffs.copy()
        c[0] = c[0] + other
        return Jet(self.base_point, c)

    __radd__ = __add__

    def __neg__(self):
        return Jet(self.base_point, -self.coeffs)

    def __sub__(self, other):
        return self + (-other if isinstance(other, Jet) else -np.asarray(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Jet):
            a, b, k = self._aligned(other)
            shape = np.broadcast_shapes(a.shape[1:], b.shape[1:])
            out = np.zeros((k + 1,) + shape)
            for m in range(k + 1):
                for j in range(m + 1):
                    out[m] += a[j] * b[m - j]
            return Jet(self.base_point, out)
        return Jet(self.base_point, self.coeffs * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return self * jet_lift_and_compose("reciprocal", other)
        return Jet(self.base_point, self.coeffs / other)

    def __rtruediv__(self, other):
        return jet_lift_and_compose("reciprocal", self) * other

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("integer powers only; use the pow lift otherwise")
        out = Jet.const(np.ones(np.shape(self.coeffs[0])), self.order)
        for _ in range(n):
            out = out * self
        return out

    # -- calculus ------------------------------------------------------

    def derivative_jet(self):
        """d/dx of this jet, one order lower."""
        if self.order < 1:
            raise ValueError("cannot differentiate an order-0 jet")
        m = np.arange(1, self.order + 1).reshape((-1,) + (1,) * (self.coeffs.ndim - 1))
        return Jet(self.base_point, self.coeffs[1:] * m)

    def divide_by_increment(self):
        """Divide by (x - base_point); requires a vanishing constant term."""
        if np.any(np.abs(self.coeffs[0]) > 1e-14):
            raise ValueError("divide_by_increment needs coeffs[0] == 0")
        return Jet(self.base_point, self.coeffs[1:].copy())

    def value(self):
        return self.coeffs[0]


def derivative(jet, m):
    """m-th derivative of the underlying function at the base point."""
    if m > jet.order:
        raise ValueError(f"jet of order {jet.order} cannot give derivative {m}")
    return math.factorial(m) * jet.coeffs[m]


def _lift_exp(a):
    k = a.shape[0] - 1
    c = np.zeros_like(a)
    c[0] = np.exp(a[0])
    for m in range(1, k + 1):
        for j in range(1, m + 1):
            c[m] += j * a[j] * c[m - j]
        c[m] /= m
    return c


def _lift_log(a):
    k = a.shape[0] - 1
    c = np.zeros_like(a)
    c[0] = np.log(a[0])
    for m in range(1, k + 1):
        acc = m * a[m].copy()
        for j in range(1, m):
            acc -= j * c[j] * a[m - j]
        c[m] = acc / (m * a[0])
    return c


def _lift_pow(a, alpha):
    k = a.shape[0] - 1
    c = np.zeros_like(a)
    c[0] = a[0] ** alpha
    for m in range(1, k + 1):
        acc = np.zeros_like(a[0])
        for j in range(m):
            acc += (alpha * (m - j) - j) * a[m - j] * c[j]
        c[m] = acc / (m * a[0])
    return c


def _lift_reciprocal(a):
    k = a.shape[0] - 1
    c = np.zeros_like(a)
    c[0] = 1.0 / a[0]
    for m in range(1, k + 1):
        acc = np.zeros_like(a[0])
        for j in range(m):
            acc += c[j] * a[m - j]
        c[m] = -acc / a[0]
    return c


def _lift_sinh_cosh(a):
    k = a.shape[0] - 1
    s = np.zeros_like(a)
    c = np.zeros_like(a)
    s[0] = np.sinh(a[0])
    c[0] = np.cosh(a[0])
    for m in range(1, k + 1):
        for j in range(1, m + 1):
            s[m] += j * a[j] * c[m - j]
            c[m] += j * a[j] * s[m - j]
        s[m] /= m
        c[m] /= m
    return s, c


def _compose_about_value(inner, fcoeffs):
    """Jet of f composed with inner, given f's Taylor coeffs at inner's value."""
    k = inner.order
    dxc = inner.coeffs.copy()
    dxc[0] = np.zeros_like(dxc[0])
    dx = Jet(inner.base_point, dxc)
    out = Jet.const(fcoeffs[k], k, inner.base_point)
    for m in range(k - 1, -1, -1):
        out = out * dx + fcoeffs[m]
    return out


def sinhc_jet(inner, scale=1.0):
    """Jet of sinh(s*t)/(s*t) as a function of t, elementwise stable.

    Dividing a sinh jet by the variable goes through intermediate
    coefficients of size ~ 1/t^m, which overflow at the double-
    exponentially small nodes the unit-interval quadrature produces.
    Wherever |s*t| < 1 the (entire) even Taylor series of the function
    itself is used instead; the two branches are merged per node.
    """
    k = inner.order
    t0 = np.asarray(inner.coeffs[0], dtype=float)
    small = np.abs(scale * t0) < 1.0

    t_ser = np.where(small, t0, 0.0)
    fc = np.zeros((k + 1,) + t_ser.shape)
    for m in range(k + 1):
        acc = np.zeros_like(t_ser)
        for j in range((m + 1) // 2, 35):
            c = scale ** (2 * j) * math.comb(2 * j, m) / math.factorial(2 * j + 1)
            acc += c * t_ser ** (2 * j - m)
        fc[m] = acc
    ser = _compose_about_value(inner, fc)

    safec = inner.coeffs.copy()
    safec[0] = np.where(small, 1.0 / scale, t0)
    u = Jet(inner.base_point, safec) * scale
    big = jet_lift_and_compose("sinh", u) * jet_lift_and_compose("reciprocal", u)

    merged = np.where(small, ser.coeffs, big.coeffs)
    return Jet(inner.base_point, merged)


def jet_lift_and_compose(tag, inner, exponent=None):
    """Apply an elementary function to a jet.

    tag is one of ``exp``, ``log``, ``sinh``, ``cosh``, ``tanh``,
    ``arcth``, ``sqrt``, ``reciprocal``, or ``pow`` (with ``exponent``).
    """
    a = inner.coeffs
    if tag == "exp":
        return Jet(inner.base_point, _lift_exp(a))
    if tag == "log":
        return Jet(inner.base_point, _lift_log(a))
    if tag == "pow":
        if exponent is None:
            raise ValueError("pow lift needs an exponent")
        return Jet(inner.base_point, _lift_pow(a, exponent))
    if tag == "sqrt":
        return Jet(inner.base_point, _lift_pow(a, 0.5))
    if tag == "reciprocal":
        return Jet(inner.base_point, _lift_reciprocal(a))
    if tag == "sinh":
        return Jet(inner.base_point, _lift_sinh_cosh(a)[0])
    if tag == "cosh":
        return Jet(inner.base_point, _lift_sinh_cosh(a)[1])
    if tag == "tanh":
        # tanh(x) = sgn * (1 - E)/(1 + E), E = exp(-2 sgn x): the argument of
        # exp is kept non-positive so huge base points underflow gracefully.
        sgn = np.where(np.asarray(a[0]) >= 0.0, 1.0, -1.0)
        b = inner * sgn
        e = jet_lift_and_compose("exp", b * (-2.0))
        t = (1.0 - e) / (1.0 + e)
        return t * sgn
    if tag == "arcth":
        half = jet_lift_and_compose("log", 1.0 + inner) - jet_lift_and_compose("log", 1.0 - inner)
        return half * 0.5
    raise ValueError(f"unknown lift tag: {tag}")
