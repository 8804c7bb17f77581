"""Two-variable Hermite polynomials, their EGF, and the expansion coefficient table.

The polynomials are

    H_n(x, y) = n! * sum_k x^(n-2k) y^k / ((n-2k)! k!),   0 <= k <= n//2,

with exponential generating function exp(lambda*x + lambda^2*y).  Expanding
that EGF first in x and then in lambda yields the double-expansion
coefficients g_{r,m}(y), which vanish for odd m and equal
(r+2m)! y^m / (r! m!) at even second index 2m.  These coefficients are the
sole input of the generic resummation algorithm in :mod:`lacunary.operators`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable

from .series import BivarPoly, LambdaSeries


@lru_cache(maxsize=None)
def fact(n: int) -> int:
    """Exact factorial, memoized (lru_cache is safe for concurrent readers)."""
    return factorial(n)


@dataclass(frozen=True)
class CoeffTable:
    """EGF double-expansion coefficients (r, m) -> polynomial in y.

    ``generator`` computes entries on demand; ``support`` is a predicate on
    the second index m selecting the residue classes where entries may be
    non-zero (even m for the Hermite table).
    """

    generator: Callable[[int, int], BivarPoly]
    support: Callable[[int], bool] = field(default=lambda m: True)
    name: str = "table"

    def __call__(self, r: int, m: int) -> BivarPoly:
        if r < 0 or m < 0:
            raise ValueError("table indices must be non-negative")
        if not self.support(m):
            return BivarPoly.zero()
        return self.generator(r, m)


def hermite_poly(n: int) -> BivarPoly:
    """H_n(x, y) as an exact sparse polynomial; x-degree equals n."""
    if n < 0:
        raise ValueError("Hermite index must be non-negative")
    nf = fact(n)
    terms = {
        (n - 2 * k, k): Fraction(nf, fact(n - 2 * k) * fact(k))
        for k in range(n // 2 + 1)
    }
    return BivarPoly(terms)


def hermite_egf(order: int) -> LambdaSeries:
    """Truncated EGF: coefficient of lambda^n is H_n(x, y) / n!."""
    coeffs = [hermite_poly(n) * Fraction(1, fact(n)) for n in range(order + 1)]
    return LambdaSeries(order, coeffs)


def _hermite_entry(r: int, m: int) -> BivarPoly:
    if m % 2 != 0:
        return BivarPoly.zero()
    half = m // 2
    return BivarPoly.monomial(Fraction(fact(r + m), fact(r) * fact(half)), 0, half)


def hermite_coeff_table() -> CoeffTable:
    """The Hermite EGF expansion table: zero off even m, (r+2m)! y^m/(r! m!) on it."""
    return CoeffTable(generator=_hermite_entry, support=lambda m: m % 2 == 0,
                      name="hermite")


def table_egf(table: CoeffTable, order: int) -> LambdaSeries:
    """Reconstruct the EGF sum_r x^r sum_m lambda^(r+m)/(r+m)! g_{r,m}(y)."""
    out = LambdaSeries.zero(order)
    for r in range(order + 1):
        for m in range(order + 1 - r):
            g = table(r, m)
            if g.is_zero():
                continue
            n = r + m
            out.coeffs[n] = out.coeffs[n] + g * BivarPoly.monomial(
                Fraction(1, fact(n)), r, 0
            )
    return out
