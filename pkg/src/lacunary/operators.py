"""Lacunary shift and dilatation operators, plus the generic resummation.

The dilatation operator acts monomial by monomial,

    lambda^n  ->  0                       if n mod K != 0,
                  (n!/(n/K)!) lambda^(n/K) otherwise,

turning an EGF into its K-tuple lacunary EGF; the shift operator is L-fold
differentiation in lambda.  The resummation replaces the brute-force
substitution by explicit summand families over the coefficient table:
every family contributes terms x^r * lambda^((r+m)/K) / ((r+m)/K)! * g_{r,m}(y)
with r and m running over fixed residue classes mod K.  The parity-split
variant separates the families by the parity of the second index m.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .hermite import CoeffTable, fact
from .series import BivarPoly, LambdaSeries, TruncationUnderflowError


def dilate_bruteforce(series: LambdaSeries, K: int,
                      out_order: int | None = None) -> LambdaSeries:
    """Apply the K-fold dilatation rule literally to a truncated series.

    The input must carry K times the truncation budget of the output: to
    obtain `out_order` exact coefficients the input order must be at least
    K * out_order.  With `out_order` unset, the output order is
    floor(input order / K).
    """
    if K < 1:
        raise ValueError("dilatation multiple K must be >= 1")
    max_out = series.order // K
    if out_order is None:
        out_order = max_out
    elif out_order > max_out:
        raise TruncationUnderflowError(
            f"output order {out_order} needs input order >= {K * out_order}, "
            f"got {series.order}"
        )
    coeffs = [
        series.coeffs[n * K] * Fraction(fact(n * K), fact(n))
        for n in range(out_order + 1)
    ]
    return LambdaSeries(out_order, coeffs)


def shift(series: LambdaSeries, L: int) -> LambdaSeries:
    """L-fold lambda-derivative; for the Hermite EGF this shifts H_n to H_(n+L)."""
    if L < 0:
        raise ValueError("shift L must be >= 0")
    return series.diff_lambda(L)


@dataclass(frozen=True)
class Branch:
    """One summand family of the resummed dilatation.

    The family runs over s, t >= 0 with first index r = K*s + x_offset and
    second index m = m_step*t + m_offset; the resulting lambda-power is
    (r + m) / K, which the construction guarantees to be integral.
    """

    x_offset: int
    m_step: int
    m_offset: int

    def indices(self, K: int, s: int, t: int) -> tuple[int, int]:
        return K * s + self.x_offset, self.m_step * t + self.m_offset

    def m_parity(self) -> int:
        """Parity of the second index; well-defined when m_step is even."""
        if self.m_step % 2 != 0:
            raise ValueError("branch has mixed second-index parity")
        return self.m_offset % 2


@dataclass(frozen=True)
class ResummedSeries:
    """A dilatation expressed as summand families over a coefficient table."""

    K: int
    table: CoeffTable
    branches: tuple[Branch, ...]

    def evaluate(self, order: int) -> LambdaSeries:
        out = LambdaSeries.zero(order)
        for br in self.branches:
            for s in range(order + 1):
                r = self.K * s + br.x_offset
                # smallest lambda-power of this s-slice
                if (r + br.m_offset) // self.K > order:
                    break
                t = 0
                while True:
                    m = br.m_step * t + br.m_offset
                    p = (r + m) // self.K
                    if p > order:
                        break
                    g = self.table(r, m)
                    if not g.is_zero():
                        out.coeffs[p] = out.coeffs[p] + g * BivarPoly.monomial(
                            Fraction(1, fact(p)), r, 0
                        )
                    t += 1
        return out


def lemma1_branches(K: int) -> tuple[Branch, ...]:
    """Summand families of the generic resummation (alpha-sum empty for K=1)."""
    branches = [Branch(x_offset=0, m_step=K, m_offset=0)]
    for alpha in range(1, K):
        branches.append(Branch(x_offset=K - alpha, m_step=K, m_offset=alpha))
    return tuple(branches)


def parity_split_branches(K: int) -> tuple[tuple[Branch, ...], tuple[Branch, ...]]:
    """Families regrouped by the parity of the second index m.

    Returns (even_families, odd_families).  Their union re-sums to the
    lemma1 families; for tables supported on even m the odd families
    contribute nothing.  K=1 is the degenerate case where only the r = s*K
    family survives, split into even and odd t.
    """
    if K < 1:
        raise ValueError("K must be >= 1")
    if K == 1:
        even = (Branch(0, 2, 0),)
        odd = (Branch(0, 2, 1),)
        return even, odd
    T = K // 2
    if K % 2 == 0:
        even = [Branch(0, K, 0)]
        even += [Branch(K - 2 * b, K, 2 * b) for b in range(1, T)]
        odd = [Branch(K - 2 * b + 1, K, 2 * b - 1) for b in range(1, T + 1)]
        return tuple(even), tuple(odd)
    # odd K = 2T+1: second-index strides are 2K so each family has fixed parity
    even = [Branch(0, 2 * K, 0)]
    even += [Branch(K - 2 * b, 2 * K, 2 * b) for b in range(1, T + 1)]
    even += [Branch(K - 2 * b + 1, 2 * K, K + 2 * b - 1) for b in range(1, T + 1)]
    odd = [Branch(0, 2 * K, K)]
    odd += [Branch(K - 2 * b + 1, 2 * K, 2 * b - 1) for b in range(1, T + 1)]
    odd += [Branch(K - 2 * b, 2 * K, K + 2 * b) for b in range(1, T + 1)]
    return tuple(even), tuple(odd)


def resum_lemma1(table: CoeffTable, K: int, order: int) -> LambdaSeries:
    """Resummed K-fold dilatation of the table's EGF, truncated at `order`."""
    if K < 1:
        raise ValueError("K must be >= 1")
    return ResummedSeries(K, table, lemma1_branches(K)).evaluate(order)


def resum_corollary1(table: CoeffTable, K: int,
                     order: int) -> tuple[LambdaSeries, LambdaSeries]:
    """Parity-split resummation: (even second-index part, odd part).

    The two parts sum to the resum_lemma1 result for any table; for a
    table supported on even m the odd part is the zero series.
    """
    even_br, odd_br = parity_split_branches(K)
    even = ResummedSeries(K, table, even_br).evaluate(order)
    odd = ResummedSeries(K, table, odd_br).evaluate(order)
    return even, odd
