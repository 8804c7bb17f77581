"""Closed-form lacunary generating functions of the two-variable Hermite polynomials.

For K >= 2 the K-tuple generating function is a finite list of branches,
each a lambda-shifted sum over s of

    prefactor(s; x, y) * pFq(upper(s); lower; monomial argument),

where the prefactor carries the Hermite expansion-coefficient factorial
ratio (K(s+d))! / ((K(s+d)-2b)! b!) and a monomial x-power.  Even K uses a
(K-1)F(T-1) block with argument lambda*(2Ky)^T; odd K uses a (2K-2)F(K-1)
block with argument lambda^2*(4Ky)^K/4.  The L-shifted variants replace
each prefactor x-power x^P by the Leibniz sum

    sum_q q! C(L,q) C(P,q) H_{L-q}(x,y) x^(P-q) (2y)^q.

Everything is materialized only as truncated exact series: each branch's
minimum lambda-power grows with s, so the s-cut is exact.

The roots-of-unity evaluation (a different, non-lacunary generating
function) lives on a separate numeric path using mpmath.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import mpmath

from .hermite import fact, hermite_egf, hermite_poly
from .hypergeom import DomainError, HypergeomSpec, pfq_series
from .operators import shift
from .series import BivarPoly, LambdaSeries


@dataclass(frozen=True)
class ClosedFormBranch:
    """One branch of the closed form: lambda-shift, y-power, and pFq data."""

    lambda_shift: int           # d in lambda^(s+d)/(s+d)!
    y_power: int                # b: prefactor carries y^b and the factorial ratio
    upper_s_coef: Fraction      # upper parameters are s_coef*s + const
    upper_consts: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    arg_coef: Fraction
    arg_lpow: int
    arg_ypow: int

    def x_power(self, K: int, s: int) -> int:
        return K * (s + self.lambda_shift) - 2 * self.y_power

    def factorial_ratio(self, K: int, s: int) -> Fraction:
        n = K * (s + self.lambda_shift)
        return Fraction(fact(n), fact(n - 2 * self.y_power) * fact(self.y_power))

    def pfq_spec(self, s: int) -> HypergeomSpec:
        upper = tuple(self.upper_s_coef * s + c for c in self.upper_consts)
        return HypergeomSpec(upper, self.lower, self.arg_coef,
                             self.arg_lpow, 0, self.arg_ypow)

    def to_json(self) -> dict:
        sc = self.upper_s_coef
        s_str = "s" if sc == 1 else f"{sc}*s"
        return {
            "lambda_shift": self.lambda_shift,
            "y_power": self.y_power,
            "upper": [f"{s_str} + {c}" for c in self.upper_consts],
            "lower": [str(b) for b in self.lower],
            "arg": {
                "coef": f"{self.arg_coef.numerator}/{self.arg_coef.denominator}",
                "lp": self.arg_lpow,
                "xp": 0,
                "yp": self.arg_ypow,
            },
        }


@dataclass(frozen=True)
class ClosedFormPlan:
    K: int
    branches: tuple[ClosedFormBranch, ...]

    def to_json(self) -> dict:
        return {"K": self.K, "branches": [b.to_json() for b in self.branches]}


def closed_form_plan(K: int) -> ClosedFormPlan:
    """Branch structure of the K-tuple closed form (K >= 2)."""
    if K < 2:
        raise ValueError("closed-form plan requires K >= 2")
    T = K // 2
    branches = []
    if K % 2 == 0:
        # argument lambda * (2Ky)^T; block (K-1)F(T-1)
        arg_coef = Fraction(2 * K) ** T
        consts = tuple(Fraction(j + 1, K) for j in range(K - 1))
        main_lower = tuple(Fraction(l + 1, T) for l in range(T - 1))
        branches.append(ClosedFormBranch(0, 0, Fraction(1), consts,
                                         main_lower, arg_coef, 1, T))
        for b in range(1, T):
            lower = tuple(Fraction(b + l + 1, T) for l in range(T)
                          if l != T - 1 - b)
            branches.append(ClosedFormBranch(
                1, b, Fraction(1), tuple(1 + c for c in consts),
                lower, arg_coef, 1, T))
    else:
        # argument lambda^2 * (4Ky)^K / 4; block (2K-2)F(K-1)
        arg_coef = Fraction(4 * K) ** K / 4
        consts = tuple(Fraction(j + 1, 2 * K) for j in range(2 * K - 1)
                       if j != K - 1)
        half = Fraction(1, 2)
        main_lower = tuple(Fraction(l + 1, K) for l in range(K - 1))
        branches.append(ClosedFormBranch(0, 0, half, consts,
                                         main_lower, arg_coef, 2, K))
        for b in range(1, T + 1):
            lower = tuple(Fraction(b + l + 1, K) for l in range(K)
                          if l != K - 1 - b)
            branches.append(ClosedFormBranch(
                1, b, half, tuple(half + c for c in consts),
                lower, arg_coef, 2, K))
        for b in range(1, T + 1):
            lower = tuple(Fraction(T + b + l + 1, K) for l in range(K)
                          if l != T - b)
            branches.append(ClosedFormBranch(
                2, T + b, half, tuple(1 + c for c in consts),
                lower, arg_coef, 2, K))
    return ClosedFormPlan(K, tuple(branches))


def _leibniz_prefactor(P: int, L: int, extra_ypow: int) -> BivarPoly:
    """The mu-derivative expansion of x^P: sum_q q! C(L,q) C(P,q) H_{L-q} x^(P-q) (2y)^q."""
    if L == 0:
        return BivarPoly.monomial(1, P, extra_ypow)
    out = BivarPoly.zero()
    for q in range(min(L, P) + 1):
        c = Fraction(fact(q) * comb(L, q) * comb(P, q) * 2**q)
        out = out + hermite_poly(L - q) * BivarPoly.monomial(c, P - q, q + extra_ypow)
    return out


def _evaluate_plan(plan: ClosedFormPlan, L: int, order: int) -> LambdaSeries:
    K = plan.K
    out = LambdaSeries.zero(order)
    for br in plan.branches:
        for s in range(order + 1 - br.lambda_shift):
            p0 = s + br.lambda_shift
            P = br.x_power(K, s)
            pref_poly = _leibniz_prefactor(P, L, br.y_power)
            pref = pref_poly * (br.factorial_ratio(K, s) / fact(p0))
            block = pfq_series(br.pfq_spec(s), order - p0)
            for i, c in enumerate(block.coeffs):
                if not c.is_zero():
                    out.coeffs[p0 + i] = out.coeffs[p0 + i] + c * pref
    return out


def closed_form_HK0(K: int, order: int) -> LambdaSeries:
    """K-tuple lacunary generating function: n! [lambda^n] = H_(nK)(x, y).

    K=1 is the plain EGF and is delegated to :func:`hermite_egf`.
    """
    if K < 1:
        raise ValueError("K must be >= 1")
    if K == 1:
        return hermite_egf(order)
    return _evaluate_plan(closed_form_plan(K), 0, order)


def closed_form_HKL(K: int, L: int, order: int) -> LambdaSeries:
    """K-tuple L-shifted closed form: n! [lambda^n] = H_(nK+L)(x, y)."""
    if K < 1:
        raise ValueError("K must be >= 1")
    if L < 0:
        raise ValueError("L must be >= 0")
    if K == 1:
        return shift(hermite_egf(order + L), L)
    return _evaluate_plan(closed_form_plan(K), L, order)


@dataclass(frozen=True)
class RkSeries:
    """Bivariate series in (mu, lambda): the EGF of all L-shifted closed forms.

    Equals exp(mu*x + mu^2*y) times the K-tuple closed form with x replaced
    by x + 2*mu*y; L! times the mu^L coefficient recovers the L-shifted
    generating function.
    """

    K: int
    mu_order: int
    lambda_order: int
    mu_coeffs: tuple[LambdaSeries, ...]

    def mu_coefficient(self, L: int) -> LambdaSeries:
        return self.mu_coeffs[L]

    def hkl(self, L: int) -> LambdaSeries:
        """L! * [mu^L], the L-shifted lacunary generating function."""
        return self.mu_coefficient(L) * Fraction(fact(L))


def rk_series(K: int, mu_order: int, lambda_order: int) -> RkSeries:
    """Assemble the (mu, lambda) series from the K-tuple closed form."""
    if mu_order < 0 or lambda_order < 0:
        raise ValueError("orders must be >= 0")
    base = closed_form_HK0(K, lambda_order)
    # substitute x -> x + 2*mu*y, collecting by mu-power
    sub = [LambdaSeries.zero(lambda_order) for _ in range(mu_order + 1)]
    for n, poly in enumerate(base.coeffs):
        for (a, b), c in poly.terms.items():
            for i in range(min(a, mu_order) + 1):
                term = BivarPoly.monomial(c * comb(a, i) * 2**i, a - i, b + i)
                sub[i].coeffs[n] = sub[i].coeffs[n] + term
    # multiply by the mu-EGF exp(mu*x + mu^2*y)
    egf_mu = [hermite_poly(j) * Fraction(1, fact(j)) for j in range(mu_order + 1)]
    mu_coeffs = []
    for Lp in range(mu_order + 1):
        acc = LambdaSeries.zero(lambda_order)
        for j in range(Lp + 1):
            acc = acc + sub[Lp - j] * egf_mu[j]
        mu_coeffs.append(acc)
    return RkSeries(K, mu_order, lambda_order, tuple(mu_coeffs))


def nieto_truax(K: int, L: int, lam, x, y, precision_bits: int = 256):
    """Roots-of-unity evaluation of the K-strided, L-offset exponential sum.

    Returns an mpmath complex number whose imaginary part vanishes up to
    roundoff; the real part equals sum_n lam^(nK+L) H_(nK+L)(x,y)/(nK+L)!.
    """
    if K < 1:
        raise DomainError("K must be >= 1")
    if not 0 <= L < K:
        raise DomainError("require 0 <= L < K")
    if precision_bits < 64:
        raise DomainError("precision_bits must be >= 64")

    def to_mpf(v):
        if isinstance(v, Fraction):
            return mpmath.mpf(v.numerator) / v.denominator
        return mpmath.mpf(v)

    with mpmath.workprec(precision_bits):
        lam_, x_, y_ = to_mpf(lam), to_mpf(x), to_mpf(y)
        total = mpmath.mpc(0)
        for ell in range(1, K + 1):
            root = mpmath.expjpi(mpmath.mpf(2 * ell) / K)
            tau = lam_ * root
            phase = mpmath.expjpi(mpmath.mpf(2 * ell * L) / K)
            total += mpmath.exp(x_ * tau + y_ * tau**2) / phase
        return total / K


def nieto_truax_partial_sum(K: int, L: int, lam, x, y, n_terms: int = 30) -> Fraction:
    """Exact-rational direct partial sum: the independent oracle for nieto_truax."""
    if not 0 <= L < K:
        raise DomainError("require 0 <= L < K")
    lam, x, y = Fraction(lam), Fraction(x), Fraction(y)
    total = Fraction(0)
    for n in range(n_terms + 1):
        idx = n * K + L
        total += lam**idx * hermite_poly(idx).evaluate(x, y) / fact(idx)
    return total
