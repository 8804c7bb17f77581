"""Semi-linear normal ordering and operator-exponential identities.

An operator D = q(x) d/dx + v(x) (coefficients may carry the parameter y)
satisfies exp(mu*D) f(x) = g(mu; x) * f(T(mu; x)), where the substitution
function T and the prefactor g solve the formal initial value problem

    dT/dmu = q(T),        T(0; x) = x,
    d(ln g)/dmu = v(T),   g(0; x) = 1.

The IVP is solved degree by degree in mu -- polynomial right-hand sides
always have a unique formal solution.  `apply_exp_op` computes both the
direct operator exponential and the (g, T) route and insists they agree,
making the module a self-testing witness for the normal-ordering theorem.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .hermite import fact
from .series import BivarPoly, LambdaSeries, series_exp


class ConsistencyError(AssertionError):
    """The two independent routes of apply_exp_op disagreed."""


@dataclass(frozen=True)
class SemiLinearOp:
    """D = q(x) d/dx + v(x) with polynomial q, v."""

    q: BivarPoly
    v: BivarPoly

    def apply(self, f: BivarPoly) -> BivarPoly:
        return self.q * f.diff_x() + self.v * f


@dataclass(frozen=True)
class NormalOrderResult:
    """Truncated mu-series for the substitution function T and prefactor g."""

    T_series: LambdaSeries
    g_series: LambdaSeries
    order: int


def compose(p: BivarPoly, series: LambdaSeries) -> LambdaSeries:
    """Substitute the series for x in p (y passes through unchanged)."""
    by_xpow: dict[int, BivarPoly] = {}
    for (a, b), c in p.terms.items():
        by_xpow[a] = by_xpow.get(a, BivarPoly.zero()) + BivarPoly.monomial(c, 0, b)
    out = LambdaSeries.zero(series.order)
    power = LambdaSeries.one(series.order)
    max_pow = max(by_xpow, default=0)
    for a in range(max_pow + 1):
        if a > 0:
            power = power * series
        coeff = by_xpow.get(a)
        if coeff is not None:
            out = out + power * coeff
    return out


def normal_order(op: SemiLinearOp, order: int) -> NormalOrderResult:
    """Solve the (T, g) initial value problem term by term in mu."""
    if order < 0:
        raise ValueError("order must be >= 0")
    t_coeffs = [BivarPoly.x()]
    for k in range(order):
        rhs = compose(op.q, LambdaSeries(k, t_coeffs[: k + 1]))
        t_coeffs.append(rhs.coeffs[k] * Fraction(1, k + 1))
    T = LambdaSeries(order, t_coeffs)
    vT = compose(op.v, T)
    log_g = LambdaSeries.zero(order)
    for j in range(order):
        log_g.coeffs[j + 1] = vT.coeffs[j] * Fraction(1, j + 1)
    g = series_exp(log_g)
    return NormalOrderResult(T_series=T, g_series=g, order=order)


def apply_exp_op(op: SemiLinearOp, order: int, f: BivarPoly) -> LambdaSeries:
    """exp(mu*D) f via direct iteration, cross-checked against g * f(T).

    Raises ConsistencyError if the two routes disagree (an implementation
    bug, never a property of valid inputs).
    """
    direct = LambdaSeries.zero(order)
    u = f
    for k in range(order + 1):
        direct.coeffs[k] = u * Fraction(1, fact(k))
        if k < order:
            u = op.apply(u)
    nr = normal_order(op, order)
    factored = nr.g_series * compose(f, nr.T_series)
    if direct != factored:
        raise ConsistencyError(
            "direct operator exponential disagrees with the (g, T) factorization"
        )
    return direct


def _exp_deriv_op(c: Fraction, m: int, h: BivarPoly, order: int) -> LambdaSeries:
    """exp(c * mu * d^m/dx^m) h as a truncated mu-series (finite per coefficient)."""
    out = LambdaSeries.zero(order)
    u = h
    for k in range(order + 1):
        out.coeffs[k] = u * (c**k * Fraction(1, fact(k)))
        if u.is_zero():
            break
        u = u.diff_x(m)
    return out


def crofton_check(m: int, y_coef, f: BivarPoly, g: BivarPoly, order: int) -> bool:
    """Check the operator identity
    exp(c mu d^m) (f(x) g(x)) == f(x + m c mu d^(m-1)) exp(c mu d^m) g(x).

    Both sides are expanded as truncated mu-series of polynomials by direct
    operator application; c is the scalar multiplying the derivative operator.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    c = Fraction(y_coef)
    lhs = _exp_deriv_op(c, m, f * g, order)

    # right side: apply f(x + m*c*mu*d^(m-1)) to the series exp(c mu d^m) g
    base = _exp_deriv_op(c, m, g, order)

    def x_op(series: LambdaSeries) -> LambdaSeries:
        # (x + m*c*mu*d^(m-1)) acting on a mu-series of polynomials
        out = series * BivarPoly.x()
        deriv = LambdaSeries(
            series.order, [p.diff_x(m - 1) * (m * c) for p in series.coeffs]
        )
        return out + deriv.shifted(1)

    by_xpow: dict[int, BivarPoly] = {}
    for (a, b), coeff in f.terms.items():
        by_xpow[a] = by_xpow.get(a, BivarPoly.zero()) + BivarPoly.monomial(coeff, 0, b)
    rhs = LambdaSeries.zero(order)
    powered = base
    max_pow = max(by_xpow, default=0)
    for a in range(max_pow + 1):
        if a > 0:
            powered = x_op(powered)
        coeff = by_xpow.get(a)
        if coeff is not None:
            rhs = rhs + powered * coeff
    return lhs == rhs
