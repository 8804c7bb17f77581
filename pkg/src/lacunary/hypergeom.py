"""Pochhammer symbols, truncated pFq blocks, and the multiplication-formula check.

Every hypergeometric block used by the closed forms has a *monomial*
argument c * lambda^lp * x^xp * y^yp with lp >= 1, so extracting the
coefficient of a fixed lambda-power is a finite computation.  Gamma
functions never appear: all identities are cast as exact rational
Pochhammer / factorial identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .hermite import fact
from .series import BivarPoly, LambdaSeries


class PoleError(ZeroDivisionError):
    """A lower pFq parameter hit a non-positive integer within the term range."""


class DomainError(ValueError):
    """Arguments outside the validity domain of an identity."""


def pochhammer(a, b: int) -> Fraction:
    """Rising factorial (a)_b = a (a+1) ... (a+b-1), exact."""
    if b < 0:
        raise ValueError("pochhammer index must be non-negative")
    a = Fraction(a)
    result = Fraction(1)
    for k in range(b):
        result *= a + k
    return result


@dataclass(frozen=True)
class HypergeomSpec:
    """One pFq block with a monomial argument in (lambda, x, y)."""

    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    arg_coef: Fraction
    arg_lpow: int
    arg_xpow: int = 0
    arg_ypow: int = 0

    @classmethod
    def make(cls, upper, lower, arg_coef, arg_lpow, arg_xpow=0, arg_ypow=0):
        return cls(
            tuple(Fraction(a) for a in upper),
            tuple(Fraction(b) for b in lower),
            Fraction(arg_coef),
            arg_lpow,
            arg_xpow,
            arg_ypow,
        )

    def to_json(self) -> dict:
        return {
            "upper": [str(a) for a in self.upper],
            "lower": [str(b) for b in self.lower],
            "arg": {
                "coef": f"{self.arg_coef.numerator}/{self.arg_coef.denominator}",
                "lp": self.arg_lpow,
                "xp": self.arg_xpow,
                "yp": self.arg_ypow,
            },
        }

    @classmethod
    def from_json(cls, data: dict) -> "HypergeomSpec":
        arg = data["arg"]
        return cls.make(
            [Fraction(a) for a in data["upper"]],
            [Fraction(b) for b in data["lower"]],
            Fraction(arg["coef"]),
            arg["lp"],
            arg.get("xp", 0),
            arg.get("yp", 0),
        )


def _check_pole(b: Fraction, s: int, term: int):
    if b.denominator == 1 and b <= 0 and -b < s:
        raise PoleError(
            f"lower parameter {b} is a pole at term {term} (index reaches 0)"
        )


def pfq_series(spec: HypergeomSpec, order: int) -> LambdaSeries:
    """Truncated pFq block: sum over s with s * arg_lpow <= order."""
    if spec.arg_lpow < 1:
        raise DomainError("argument must carry a positive lambda-power")
    out = LambdaSeries.zero(order)
    s = 0
    while s * spec.arg_lpow <= order:
        num = Fraction(1)
        for a in spec.upper:
            num *= pochhammer(a, s)
        den = Fraction(fact(s))
        for b in spec.lower:
            _check_pole(b, s, s)
            den *= pochhammer(b, s)
        c = spec.arg_coef**s * num / den
        if c != 0:
            out.coeffs[s * spec.arg_lpow] = BivarPoly.monomial(
                c, s * spec.arg_xpow, s * spec.arg_ypow
            )
        s += 1
    return out


def gmfc_check(n: int, s: int, x) -> bool:
    """Exact rational form of the Gamma multiplication identity.

    Verifies prod_{k=0}^{ns-1} (n*x + k) == n^(s*n) * prod_{j=0}^{n-1} (x + j/n)_s.
    """
    x = Fraction(x)
    if n < 2:
        raise DomainError("n must be >= 2")
    if s < 0:
        raise DomainError("s must be >= 0")
    if x <= 0:
        raise DomainError("x must be a positive rational")
    lhs = Fraction(1)
    for k in range(n * s):
        lhs *= n * x + k
    rhs = Fraction(n) ** (s * n)
    for j in range(n):
        rhs *= pochhammer(x + Fraction(j, n), s)
    return lhs == rhs
