"""Closed-form-vs-oracle verification sweeps and machine-readable reports.

The central check: for each (K, L, n) in range, n! times the lambda^n
coefficient of the closed form must equal the brute-force Hermite
polynomial H_(nK+L)(x, y) as an exact polynomial identity.  Each K also
gets a resummation-vs-brute-force check and a parity-split consistency
check (on the Hermite table and on a seeded dense table with no parity
constraint).  On failure a report pinpoints the first differing monomial.
"""

from __future__ import annotations

import json
import os
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .closed_forms import closed_form_HKL
from .hermite import CoeffTable, fact, hermite_coeff_table, hermite_egf, hermite_poly
from .operators import dilate_bruteforce, resum_corollary1, resum_lemma1
from .series import BivarPoly, LambdaSeries

DEFAULT_CAP = 60


def factorial_cap() -> int:
    """Largest Hermite index the sweep may touch; LACUNAE_CAP overrides."""
    return int(os.environ.get("LACUNAE_CAP", DEFAULT_CAP))


@dataclass
class VerifyConfig:
    k_min: int = 2
    k_max: int = 6
    l_min: int = 0
    l_max: int = 3
    n_max: int = 6
    seed: int = 0
    output_path: str | None = None

    def __post_init__(self):
        if not (1 <= self.k_min <= self.k_max <= 12):
            raise ValueError("K range must lie within [1, 12]")
        if self.l_min < 0 or self.l_min > self.l_max:
            raise ValueError("invalid L range")
        cap = factorial_cap()
        worst = self.n_max * self.k_max + self.l_max
        if worst > cap:
            raise ValueError(
                f"n_max*k_max+l_max = {worst} exceeds cap {cap} "
                "(set LACUNAE_CAP to raise)"
            )


@dataclass
class VerifyCase:
    K: int
    L: int | None
    n: int | None
    passed: bool
    diff_term: dict | None = None
    check: str = "closed_form"

    def to_json(self) -> dict:
        return {
            "K": self.K,
            "L": self.L,
            "n": self.n,
            "pass": self.passed,
            "diff_term": self.diff_term,
            "check": self.check,
        }

    @classmethod
    def from_json(cls, data: dict) -> "VerifyCase":
        return cls(
            K=data["K"],
            L=data["L"],
            n=data["n"],
            passed=data["pass"],
            diff_term=data["diff_term"],
            check=data.get("check", "closed_form"),
        )


@dataclass
class VerifyReport:
    cases: list[VerifyCase] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> int:
        return sum(1 for c in self.cases if c.passed)

    @property
    def failed(self) -> int:
        return sum(1 for c in self.cases if not c.passed)

    def to_json(self) -> dict:
        return {
            "cases": [c.to_json() for c in self.cases],
            "passed": self.passed,
            "failed": self.failed,
            "elapsed_ms": self.elapsed_ms,
        }

    @classmethod
    def from_json(cls, data: dict) -> "VerifyReport":
        return cls(
            cases=[VerifyCase.from_json(c) for c in data["cases"]],
            elapsed_ms=data["elapsed_ms"],
        )


def first_diff_poly(diff: BivarPoly, lam_power: int) -> dict | None:
    if diff.is_zero():
        return None
    (xp, yp), c = diff.sorted_terms()[0]
    return {
        "lp": lam_power,
        "xp": xp,
        "yp": yp,
        "num": str(c.numerator),
        "den": str(c.denominator),
    }


def first_diff_series(a: LambdaSeries, b: LambdaSeries) -> dict | None:
    for n in range(min(a.order, b.order) + 1):
        d = first_diff_poly(a.coeffs[n] - b.coeffs[n], n)
        if d is not None:
            return d
    return None


def random_dense_table(seed: int) -> CoeffTable:
    """A full-support table with deterministic pseudo-random entries."""

    def gen(r: int, m: int) -> BivarPoly:
        rng = random.Random(f"{seed}:{r}:{m}")
        num = rng.randint(-9, 9)
        if num == 0:
            return BivarPoly.zero()
        den = rng.randint(1, 6)
        yp = rng.randint(0, 2)
        return BivarPoly.monomial(Fraction(num, den), 0, yp)

    return CoeffTable(generator=gen, name=f"dense-seed{seed}")


def coefficient_cases(K: int, L: int, n_max: int) -> list[VerifyCase]:
    """n! [lambda^n] of the closed form against hermite_poly(nK+L), n = 0..n_max."""
    series = closed_form_HKL(K, L, n_max)
    cases = []
    for n in range(n_max + 1):
        diff = series.coeffs[n] * Fraction(fact(n)) - hermite_poly(n * K + L)
        cases.append(
            VerifyCase(K=K, L=L, n=n, passed=diff.is_zero(),
                       diff_term=first_diff_poly(diff, n))
        )
    return cases


def resummation_cases(K: int, seed: int, order: int = 5) -> list[VerifyCase]:
    """Lemma-vs-brute-force and parity-split checks for a single K."""
    table = hermite_coeff_table()
    resummed = resum_lemma1(table, K, order)
    oracle = dilate_bruteforce(hermite_egf(K * order), K)
    diff = first_diff_series(resummed, oracle)
    cases = [VerifyCase(K=K, L=None, n=order, passed=diff is None,
                        diff_term=diff, check="lemma1_oracle")]
    for tab in (table, random_dense_table(seed)):
        even, odd = resum_corollary1(tab, K, order)
        split_diff = first_diff_series(even + odd, resum_lemma1(tab, K, order))
        cases.append(
            VerifyCase(K=K, L=None, n=order, passed=split_diff is None,
                       diff_term=split_diff, check=f"parity_split:{tab.name}")
        )
    return cases


def run_verification(cfg: VerifyConfig) -> VerifyReport:
    """The full sweep over the configured (K, L, n) ranges."""
    start = time.perf_counter()
    report = VerifyReport()
    for K in range(cfg.k_min, cfg.k_max + 1):
        for L in range(cfg.l_min, cfg.l_max + 1):
            report.cases.extend(coefficient_cases(K, L, cfg.n_max))
        report.cases.extend(resummation_cases(K, cfg.seed))
    report.elapsed_ms = (time.perf_counter() - start) * 1000.0
    _maybe_write(report, cfg.output_path)
    return report


def run_appendix_sweep(output_path: str | None = None) -> VerifyReport:
    """The default sweep: K=3 and K=4 up to n=16, K=5 up to n=15, all L=0."""
    start = time.perf_counter()
    report = VerifyReport()
    for K, n_max in ((3, 16), (4, 16), (5, 15)):
        # n=0 is trivially H_0; the reference runs start at n=1 but it costs nothing
        report.cases.extend(coefficient_cases(K, 0, n_max))
        report.cases.extend(resummation_cases(K, seed=0))
    report.elapsed_ms = (time.perf_counter() - start) * 1000.0
    _maybe_write(report, output_path)
    return report


def _maybe_write(report: VerifyReport, path: str | None):
    if path:
        with open(path, "w") as fh:
            json.dump(report.to_json(), fh, indent=2)
