"""Hermite polynomials, their EGF, and the expansion coefficient table."""

from fractions import Fraction

from lacunary import (
    BivarPoly,
    LambdaSeries,
    fact,
    hermite_coeff_table,
    hermite_egf,
    hermite_poly,
    series_mul,
    table_egf,
)


def classical_hermite(n):
    """One-variable physicists' Hermite polynomials via the recurrence.

    Returns coefficients of x^k as a dict; independent of hermite_poly.
    """
    prev = {0: Fraction(1)}
    if n == 0:
        return prev
    cur = {1: Fraction(2)}
    for k in range(1, n):
        nxt = {}
        for p, c in cur.items():
            nxt[p + 1] = nxt.get(p + 1, Fraction(0)) + 2 * c
        for p, c in prev.items():
            nxt[p] = nxt.get(p, Fraction(0)) - 2 * k * c
        prev, cur = cur, {p: c for p, c in nxt.items() if c != 0}
    return cur


class TestHermitePoly:
    def test_h0_is_one(self):
        assert hermite_poly(0) == BivarPoly.constant(1)

    def test_h2(self):
        assert hermite_poly(2) == BivarPoly({(2, 0): 1, (0, 1): 2})

    def test_h3(self):
        assert hermite_poly(3) == BivarPoly({(3, 0): 1, (1, 1): 6})

    def test_classical_specialization(self):
        # H_n(2x, -1) must match the classical recurrence, n <= 12
        for n in range(13):
            expected = classical_hermite(n)
            got = {}
            for (xp, yp), c in hermite_poly(n).terms.items():
                got[xp] = got.get(xp, Fraction(0)) + c * 2**xp * Fraction(-1) ** yp
            got = {p: c for p, c in got.items() if c != 0}
            assert got == expected, n

    def test_degree_and_y0_specialization(self):
        for n in range(20):
            h = hermite_poly(n)
            assert h.degree_x() == n
            assert h.coefficient(n, 0) == 1
            # H_n(x, 0) = x^n: y-free part is the single monomial x^n
            y_free = {k: c for k, c in h.terms.items() if k[1] == 0}
            assert y_free == {(n, 0): Fraction(1)}

    def test_recurrence(self):
        # H_(n+1) = x H_n + 2 y n H_(n-1), derived from the EGF
        x, y = BivarPoly.x(), BivarPoly.y()
        for n in range(1, 41):
            assert hermite_poly(n + 1) == x * hermite_poly(n) + y * (
                2 * n
            ) * hermite_poly(n - 1)


class TestHermiteEgf:
    def test_constant_term(self):
        assert hermite_egf(3).coeffs[0] == BivarPoly.constant(1)

    def test_second_coefficient(self):
        assert hermite_egf(3).coeffs[2] * fact(2) == hermite_poly(2)

    def test_equals_product_of_exponentials(self):
        # exp(lambda x) * exp(lambda^2 y), both truncated at order 8
        order = 8
        ex = LambdaSeries(
            order,
            [BivarPoly.monomial(Fraction(1, fact(k)), k, 0) for k in range(order + 1)],
        )
        ey = LambdaSeries.zero(order)
        for m in range(order // 2 + 1):
            ey.coeffs[2 * m] = BivarPoly.monomial(Fraction(1, fact(m)), 0, m)
        assert series_mul(ex, ey) == hermite_egf(order)


class TestCoeffTable:
    def test_odd_second_index_vanishes(self):
        table = hermite_coeff_table()
        assert table(3, 1).is_zero()
        assert table(0, 5).is_zero()

    def test_small_entries(self):
        table = hermite_coeff_table()
        assert table(0, 2) == BivarPoly.monomial(2, 0, 1)
        assert table(2, 4) == BivarPoly.monomial(180, 0, 2)

    def test_reconstructs_egf(self):
        table = hermite_coeff_table()
        for order in (5, 12, 20):
            assert table_egf(table, order) == hermite_egf(order)
