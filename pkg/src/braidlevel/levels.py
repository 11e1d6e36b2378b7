"""Counting regions by level: convolutions, generating functions, closed forms.

Conventions: ``r_0(B_0) = 1``; ``r_l(B_n) = 0`` when ``l > n`` or when
``l = 0 < n``; ``r_1(B_1) = 1``.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable, Optional, Sequence, Union

from braidlevel.arrangement import ArrangementSpec
from braidlevel.charpoly import charpoly, zaslavsky_counts
from braidlevel.combinat import (
    binomial,
    compositions,
    eulerian,
    multinomial,
    stirling_first_unsigned,
    stirling_second,
)
from braidlevel.digraph import LevelCensus, enumerate_census
from braidlevel.polyalg import RatPoly

FAMILIES = ("linial", "shi", "catalan")


class LevelsError(ValueError):
    pass


@dataclass(frozen=True)
class R1Table:
    """``r_1(B_n^A)`` for ``n = 1..N``; ``values[n - 1]`` is the entry for ``n``."""
    values: tuple[int, ...]
    label: str = ""

    @property
    def N(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        if n < 1 or n > self.N:
            raise LevelsError(f"R1 table covers 1..{self.N}, asked for {n}")
        return self.values[n - 1]


def r1_table(spec: ArrangementSpec, N: int, method: str = "finite_field") -> R1Table:
    """Level-1 counts of ``spec`` for ``n = 1..N`` read off ``chi(1)``."""
    vals = tuple(zaslavsky_counts(charpoly(spec.with_n(n), method))[1] for n in range(1, N + 1))
    return R1Table(vals, spec.label())


def census_family(spec: ArrangementSpec, N: int) -> list[LevelCensus]:
    """Digraph censuses of ``spec`` for ``n = 0..N``."""
    return [enumerate_census(spec.with_n(n)) for n in range(N + 1)]


def rl_from_r1(n: int, l: int, table: R1Table) -> int:
    """``sum over compositions of n into l parts of multinomial * prod r_1``."""
    if n > table.N:
        raise LevelsError(f"R1 table covers 1..{table.N}, need {n}")
    total = 0
    for parts in compositions(n, l):
        prod = multinomial(parts)
        for p in parts:
            prod *= table[p]
        total += prod
    return total


def _r(censuses: Sequence[LevelCensus], n: int, l: int) -> int:
    return censuses[n][l] if l >= 0 else 0


def convolution_identity_check(n: int, l: int, k: int, censuses: Sequence[LevelCensus]) -> bool:
    """``r_l(n) == sum_i C(n,i) r_k(i) r_{l-k}(n-i)`` with censuses indexed by ``n``."""
    if not 0 <= k <= l:
        raise LevelsError("need 0 <= k <= l")
    if len(censuses) <= n:
        raise LevelsError(f"censuses for 0..{n} are required")
    rhs = sum(comb(n, i) * _r(censuses, i, k) * _r(censuses, n - i, l - k) for i in range(n + 1))
    return _r(censuses, n, l) == rhs


# ---------------------------------------------------------------- EGFs

def egf_product(f: Sequence, g: Sequence, N: int) -> list:
    """Product of two exponential series, truncated after ``x^N / N!``."""
    out = []
    for n in range(N + 1):
        s = 0
        for i in range(n + 1):
            if i < len(f) and n - i < len(g):
                s += comb(n, i) * f[i] * g[n - i]
        out.append(s)
    return out


def egf_truncated(l: int, N: int, table: R1Table) -> list[int]:
    """Coefficients of ``x^n / n!`` (``n <= N``) in ``R_1(x)^l``."""
    if N > table.N:
        raise LevelsError(f"R1 table covers 1..{table.N}, need {N}")
    r1 = [0] + [table[n] for n in range(1, N + 1)]
    result = [1] + [0] * N
    for _ in range(l):
        result = egf_product(result, r1, N)
    return result


def census_egf(censuses: Sequence[LevelCensus], l: int) -> list[int]:
    """``R_l`` read directly off censuses for ``n = 0..N``."""
    return [c[l] for c in censuses]


def _series_mul(f: list[RatPoly], g: list[RatPoly], N: int) -> list[RatPoly]:
    out = []
    for n in range(N + 1):
        acc = RatPoly()
        for i in range(n + 1):
            acc = acc + f[i] * g[n - i]
        out.append(acc)
    return out


def esa_check(spec: ArrangementSpec, N: int = 4, method: str = "finite_field") -> bool:
    """``sum chi_n(t) x^n/n!  ==  (sum (-1)^n r(B_n) x^n/n!)^(-t)`` up to ``x^N``.

    The power is taken as ``exp(-t log F)`` over truncated series whose
    coefficients are polynomials in ``t``.
    """
    chis = [charpoly(spec.with_n(n), method).poly for n in range(N + 1)]
    totals = [zaslavsky_counts(charpoly(spec.with_n(n), method))[0] for n in range(N + 1)]
    # F = 1 + G, ordinary coefficients of x^n
    G = [RatPoly()] + [RatPoly([Fraction((-1) ** n * totals[n], factorial(n))]) for n in range(1, N + 1)]
    log_f = [RatPoly() for _ in range(N + 1)]
    power = [RatPoly([1])] + [RatPoly()] * N
    for k in range(1, N + 1):
        power = _series_mul(power, G, N)
        sign = Fraction(1 if k % 2 else -1, k)
        log_f = [a + b * sign for a, b in zip(log_f, power)]
    t = RatPoly.t()
    H = [c * (-t) for c in log_f]
    exp_h = [RatPoly([1])] + [RatPoly()] * N
    term = [RatPoly([1])] + [RatPoly()] * N
    for k in range(1, N + 1):
        term = [c * Fraction(1, k) for c in _series_mul(term, H, N)]
        exp_h = [a + b for a, b in zip(exp_h, term)]
    return all(exp_h[n] == chis[n] * Fraction(1, factorial(n)) for n in range(N + 1))


# ---------------------------------------------------------------- closed forms

def _conventional(n: int, l: int) -> Optional[int]:
    """Values fixed by convention before any formula is consulted."""
    if n <= 1:
        return 1 if l == n else 0
    if l <= 0 or l > n:
        return 0
    return None


def _as_count(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise LevelsError(f"{what} produced the non-integer {x}")
    return int(x)


def rl_closed_ab(n: int, l: int, a: int, b: int) -> int:
    """Regions of level ``l`` in ``B_n^[-a, b]`` from the Eulerian/Stirling triple sum."""
    if a < 0 or b < 0:
        raise LevelsError("a and b must be non-negative")
    if a > b:
        raise LevelsError(f"need a <= b (got a={a}, b={b})")
    fixed = _conventional(n, l)
    if fixed is not None:
        return fixed
    total = Fraction(0)
    for k in range(1, n):
        shift = a * (n - k) + b * k + 1
        ank = eulerian(n - 1, k)
        for j in range(n):
            sjl = stirling_second(j + 1, l)
            if not sjl:
                continue
            for i in range(j, n):
                sign = -1 if (l - 1 - j) % 2 else 1
                total += sign * binomial(i, j) * ank * sjl * stirling_first_unsigned(n - 1, i) * shift ** (i - j)
    total = total * factorial(l) / factorial(n - 1)
    return _as_count(total, "rl_closed_ab")


def _linial(n: int, l: int, b: int, strict: bool) -> Fraction:
    total = Fraction(0)
    for j in range(n):
        sjl = stirling_second(j + 1, l)
        if not sjl:
            continue
        sign = -1 if (l - 1 - j) % 2 else 1
        inner = sum(comb(n, i) * ((b - 1) * n + i) ** (n - j - 1) for i in range(n + 1))
        weight = 1 if strict else comb(n - 1, j)
        total += sign * weight * sjl * inner
    return total * factorial(l) / 2**n


def rl_family(family: str, n: int, l: int, b: int, strict: bool = False) -> Union[int, Fraction]:
    """Level counts for the extended Linial, Shi and Catalan families.

    ``linial`` uses the corrected sum with the ``C(n-1, j)`` factor; pass
    ``strict=True`` for the formula without that factor, which can return
    a non-integer ``Fraction``.
    """
    if b < 1:
        raise LevelsError("family formulas need b >= 1")
    if family not in FAMILIES:
        raise LevelsError(f"unknown family {family!r}")
    if n == 0:
        return 1 if l == 0 else 0
    if l <= 0 or l > n:
        return 0
    if family == "shi":
        val = l * sum((-1) ** i * comb(l - 1, i) * (b * n - i - 1) ** (n - 1) for i in range(l))
        return val
    if family == "catalan":
        top = (b + 1) * n - l
        return _as_count(Fraction(factorial(n) * b * l, top) * comb(top, b * n), "catalan formula")
    val = _linial(n, l, b, strict)
    if strict:
        return val
    return _as_count(val, "linial formula")


def family_interval(family: str, b: int) -> tuple[int, int]:
    """``(a, b)`` such that the family is ``[-a, b]``."""
    return {"shi": (b - 1, b), "catalan": (b, b), "linial": (b - 2, b)}[family]


# ---------------------------------------------------------------- tables

def level_table(rows: Iterable[tuple[int, int, int, str]]) -> str:
    """CSV with columns ``n, l, value, method``."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "l", "value", "method"])
    for row in rows:
        w.writerow(row)
    return buf.getvalue()


def level_rows(n: int, compute: Callable[[int, int], int], method: str) -> list[tuple[int, int, int, str]]:
    return [(n, l, compute(n, l), method) for l in range(n + 1)]
