"""Exact-arithmetic substrate: sparse bivariate polynomials and truncated series.

Coefficients are ``fractions.Fraction`` throughout -- no floating point
enters this module.  A :class:`BivarPoly` is a sparse polynomial in the
variables ``x`` and ``y``; a :class:`LambdaSeries` is a formal power series
in a third variable (written ``lambda`` in most of the package, ``mu`` in
the normal-ordering code) truncated at an explicit inclusive order, with
``BivarPoly`` coefficients.

Truncation semantics: binary operations on two series combine orders with
``min`` and silently truncate -- the result is exact for every coefficient
it retains.  Differentiation decreases the order and raises
:class:`TruncationUnderflowError` when asked to drop below order 0.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial


class TruncationUnderflowError(ValueError):
    """Requested more differentiations than the truncation order supports."""


Rational = Fraction | int


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


class BivarPoly:
    """Sparse exact polynomial in x and y.

    Terms are stored as a dict ``(x_power, y_power) -> Fraction`` with no
    zero coefficients.  Instances are immutable by convention; all
    operations return new polynomials.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (xp, yp), c in terms.items():
                c = _frac(c)
                if c != 0:
                    if xp < 0 or yp < 0:
                        raise ValueError(f"negative exponent in term ({xp},{yp})")
                    clean[(xp, yp)] = clean.get((xp, yp), Fraction(0)) + c
            clean = {k: v for k, v in clean.items() if v != 0}
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "BivarPoly":
        return cls()

    @classmethod
    def constant(cls, c) -> "BivarPoly":
        return cls({(0, 0): _frac(c)})

    @classmethod
    def monomial(cls, c, xp: int, yp: int) -> "BivarPoly":
        return cls({(xp, yp): _frac(c)})

    @classmethod
    def x(cls) -> "BivarPoly":
        return cls({(1, 0): Fraction(1)})

    @classmethod
    def y(cls) -> "BivarPoly":
        return cls({(0, 1): Fraction(1)})

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        if isinstance(other, (Fraction, int)):
            other = BivarPoly.constant(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = terms.get(k, Fraction(0)) + c
            if s == 0:
                terms.pop(k, None)
            else:
                terms[k] = s
        out = BivarPoly.__new__(BivarPoly)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = BivarPoly.__new__(BivarPoly)
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (Fraction, int)):
            other = BivarPoly.constant(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (Fraction, int)):
            c = _frac(other)
            if c == 0:
                return BivarPoly.zero()
            out = BivarPoly.__new__(BivarPoly)
            out.terms = {k: v * c for k, v in self.terms.items()}
            return out
        if not isinstance(other, BivarPoly):
            return NotImplemented
        terms = {}
        for (ax, ay), ac in self.terms.items():
            for (bx, by), bc in other.terms.items():
                k = (ax + bx, ay + by)
                s = terms.get(k, Fraction(0)) + ac * bc
                if s == 0:
                    terms.pop(k, None)
                else:
                    terms[k] = s
        out = BivarPoly.__new__(BivarPoly)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = BivarPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (Fraction, int)):
            other = BivarPoly.constant(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree_x(self) -> int:
        """Degree in x; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(xp for xp, _ in self.terms)

    def coefficient(self, xp: int, yp: int) -> Fraction:
        return self.terms.get((xp, yp), Fraction(0))

    def diff_x(self, times: int = 1) -> "BivarPoly":
        p = self
        for _ in range(times):
            terms = {}
            for (xp, yp), c in p.terms.items():
                if xp >= 1:
                    terms[(xp - 1, yp)] = c * xp
            p = BivarPoly(terms)
        return p

    def evaluate(self, xv, yv) -> Fraction:
        xv, yv = _frac(xv), _frac(yv)
        total = Fraction(0)
        for (xp, yp), c in self.terms.items():
            total += c * xv**xp * yv**yp
        return total

    def sorted_terms(self):
        """Canonical ordering: x-power descending, then y-power ascending."""
        return sorted(self.terms.items(), key=lambda kv: (-kv[0][0], kv[0][1]))

    # -- serialization ----------------------------------------------------

    def to_json(self) -> list:
        return [
            {"xp": xp, "yp": yp, "num": str(c.numerator), "den": str(c.denominator)}
            for (xp, yp), c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: list) -> "BivarPoly":
        return cls(
            {
                (t["xp"], t["yp"]): Fraction(int(t["num"]), int(t["den"]))
                for t in data
            }
        )

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (xp, yp), c in self.sorted_terms():
            factors = [str(c)]
            if xp:
                factors.append(f"x^{xp}" if xp != 1 else "x")
            if yp:
                factors.append(f"y^{yp}" if yp != 1 else "y")
            parts.append(" * ".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"BivarPoly({self})"


class LambdaSeries:
    """Truncated formal power series with BivarPoly coefficients.

    ``order`` is the inclusive truncation bound; ``coeffs`` has exactly
    ``order + 1`` entries.  Binary operations return a series of the
    minimum of the two orders.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=None):
        if order < 0:
            raise ValueError("series order must be non-negative")
        if coeffs is None:
            coeffs = [BivarPoly.zero()] * (order + 1)
        else:
            coeffs = list(coeffs)
            if len(coeffs) != order + 1:
                raise ValueError(
                    f"expected {order + 1} coefficients, got {len(coeffs)}"
                )
            coeffs = [
                c if isinstance(c, BivarPoly) else BivarPoly.constant(c)
                for c in coeffs
            ]
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def zero(cls, order: int) -> "LambdaSeries":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "LambdaSeries":
        coeffs = [BivarPoly.zero()] * (order + 1)
        coeffs[0] = BivarPoly.constant(1)
        return cls(order, coeffs)

    @classmethod
    def monomial(cls, order: int, power: int, coeff) -> "LambdaSeries":
        """Single term coeff * lambda^power, truncated at `order`."""
        s = cls(order)
        if power <= order:
            if not isinstance(coeff, BivarPoly):
                coeff = BivarPoly.constant(coeff)
            s.coeffs[power] = coeff
        return s

    def coefficient(self, n: int) -> BivarPoly:
        if n > self.order:
            raise TruncationUnderflowError(
                f"coefficient {n} beyond truncation order {self.order}"
            )
        return self.coeffs[n]

    def truncate(self, order: int) -> "LambdaSeries":
        if order >= self.order:
            return self
        return LambdaSeries(order, self.coeffs[: order + 1])

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LambdaSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return LambdaSeries(
            n, [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)]
        )

    def __sub__(self, other):
        if not isinstance(other, LambdaSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return LambdaSeries(
            n, [self.coeffs[i] - other.coeffs[i] for i in range(n + 1)]
        )

    def __neg__(self):
        return LambdaSeries(self.order, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (Fraction, int, BivarPoly)):
            return LambdaSeries(self.order, [c * other for c in self.coeffs])
        if not isinstance(other, LambdaSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out = [BivarPoly.zero() for _ in range(n + 1)]
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return LambdaSeries(n, out)

    __rmul__ = __mul__

    def shifted(self, k: int) -> "LambdaSeries":
        """Multiply by lambda^k, keeping the truncation order."""
        if k == 0:
            return self
        coeffs = [BivarPoly.zero()] * (self.order + 1)
        for n in range(self.order + 1 - k):
            coeffs[n + k] = self.coeffs[n]
        return LambdaSeries(self.order, coeffs)

    def diff_lambda(self, times: int = 1) -> "LambdaSeries":
        """times-fold derivative; the order drops by `times`."""
        if times < 0:
            raise ValueError("negative differentiation count")
        if times > self.order:
            raise TruncationUnderflowError(
                f"cannot differentiate {times} times at order {self.order}"
            )
        new_order = self.order - times
        coeffs = [
            self.coeffs[n + times] * Fraction(factorial(n + times), factorial(n))
            for n in range(new_order + 1)
        ]
        return LambdaSeries(new_order, coeffs)

    def __eq__(self, other):
        if not isinstance(other, LambdaSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "LambdaSeries":
        return cls(
            data["order"], [BivarPoly.from_json(c) for c in data["coeffs"]]
        )

    def __str__(self):
        parts = []
        for n, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if n == 0:
                parts.append(str(c) if len(c.terms) == 1 else f"({c})")
            else:
                lam = "λ" if n == 1 else f"λ^{n}"
                body = str(c) if len(c.terms) == 1 else f"({c})"
                parts.append(f"{lam}·{body}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"LambdaSeries(order={self.order}, {self})"


def series_add(a: LambdaSeries, b: LambdaSeries) -> LambdaSeries:
    """Coefficientwise sum at the minimum of the two orders."""
    return a + b


def series_mul(a: LambdaSeries, b: LambdaSeries) -> LambdaSeries:
    """Cauchy product truncated at the minimum of the two orders."""
    return a * b


def series_diff_lambda(a: LambdaSeries, times: int) -> LambdaSeries:
    """times-fold derivative in the series variable; order drops by `times`."""
    return a.diff_lambda(times)


def series_exp(a: LambdaSeries) -> LambdaSeries:
    """exp of a series with vanishing constant term, truncated exactly."""
    if not a.coeffs[0].is_zero():
        raise ValueError("series_exp requires zero constant term")
    result = LambdaSeries.one(a.order)
    power = LambdaSeries.one(a.order)
    for j in range(1, a.order + 1):
        power = power * a
        if power.is_zero():
            break
        result = result + power * Fraction(1, factorial(j))
    return result
