"""Characteristic polynomial of ``B_n^A`` by four independent routes.

* ``finite_field``: count points of ``(Z_q)^n`` off the arrangement for
  ``n + 1`` large primes, interpolate, confirm on one more prime.
* ``whitney``: signed sum over central subarrangements.
* ``closed_ab``: Eulerian-number closed form for ``A = [-a, b]``, carried
  over to ``A = [1, b]`` by a shift of the reduced polynomial.
* ``from_census``: binomial-basis expansion with the level counts.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np

from braidlevel._runtime import check_cap, resolve_cap, run_jobs
from braidlevel.arrangement import ArrangementSpec, make_preset, make_spec, normalize_integer
from braidlevel.combinat import eulerian
from braidlevel.digraph import SCHEMA, LevelCensus, enumerate_census
from braidlevel.polyalg import BasisCoeffs, RatPoly, binomial_poly, from_basis, lagrange_interpolate, to_strings

METHODS = ("finite_field", "whitney", "closed_ab", "from_census")
DEFAULT_FF_CAP = 10**8
DEFAULT_WHITNEY_CAP = 2**22
T = RatPoly.t()


class CharPolyError(ValueError):
    pass


@dataclass(frozen=True)
class CharPolyResult:
    poly: RatPoly
    method: str
    spec: Optional[ArrangementSpec] = None

    @property
    def n(self) -> int:
        return self.poly.degree

    def invariant_violations(self) -> list[str]:
        """Monic of degree n, divisible by t for n >= 1, alternating integer coefficients."""
        p = self.poly
        problems = []
        n = self.spec.n if self.spec is not None else p.degree
        if p.degree != n or p.lead != 1:
            problems.append("not monic of degree n")
        if n >= 1 and p.coeff(0) != 0:
            problems.append("constant term is not zero")
        if not p.is_integral():
            problems.append("non-integer coefficient")
        for i, c in enumerate(p.coeffs):
            if (-1) ** (n - i) * c < 0:
                problems.append(f"coefficient of t^{i} has the wrong sign")
        return problems

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "n": self.n,
            "method": self.method,
            "coeffs": to_strings(self.poly),
            "basis": "power",
        }


# ---------------------------------------------------------------- finite field

def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    for p in range(2, math.isqrt(q) + 1):
        if q % p == 0:
            return False
    return True


def primes_above(bound: int, count: int) -> list[int]:
    out = []
    q = bound + 1
    while len(out) < count:
        if _is_prime(q):
            out.append(q)
        q += 1
    return out


def prime_bound(spec: ArrangementSpec) -> int:
    """Primes above ``n * (2 * max|a| + 2) + 1`` are used for counting."""
    amax = max((abs(int(a)) for a in spec.offsets), default=0)
    return spec.n * (2 * amax + 2) + 1


_CHUNK = 1 << 15


def count_points(spec: ArrangementSpec, q: int) -> int:
    """Points of ``(Z_q)^n`` with ``x_i - x_j`` outside ``A`` mod ``q`` for all ``i < j``.

    Requires integer offsets.  The count is translation invariant, so
    ``x_1 = 0`` is fixed and the total multiplied by ``q``; the last
    coordinate is counted in bulk rather than enumerated.
    """
    n = spec.n
    if n == 0:
        return 1
    if not spec.is_integral():
        raise CharPolyError("count_points needs integer offsets; use normalize_integer")
    if n == 1:
        return q
    offs = np.array(sorted({int(a) % q for a in spec.offsets}), dtype=np.int64)
    bad = np.zeros(q, dtype=bool)
    bad[offs] = True
    ys = np.arange(q, dtype=np.int64)
    rows = np.zeros((1, 1), dtype=np.int64)
    # grow x_2 .. x_{n-1}
    for _ in range(n - 2):
        grown = []
        for start in range(0, len(rows), _CHUNK):
            block = rows[start:start + _CHUNK]
            diffs = (block[:, :, None] - ys[None, None, :]) % q
            ok = ~bad[diffs].any(axis=1)
            r_idx, y_idx = np.nonzero(ok)
            grown.append(np.concatenate([block[r_idx], y_idx[:, None]], axis=1))
        rows = np.concatenate(grown) if grown else np.zeros((0, rows.shape[1] + 1), dtype=np.int64)
        if len(rows) == 0:
            return 0
    # the last coordinate must avoid the union of x_i - A over all earlier i
    total = 0
    k = len(offs)
    for start in range(0, len(rows), _CHUNK):
        block = rows[start:start + _CHUNK]
        forb = ((block[:, :, None] - offs[None, None, :]) % q).reshape(len(block), -1)
        forb.sort(axis=1)
        distinct = 1 + np.count_nonzero(np.diff(forb, axis=1), axis=1) if k else np.zeros(len(block), dtype=np.int64)
        total += int((q - distinct).sum())
    return q * total


def _count_task(task) -> int:
    spec, q = task
    return count_points(spec, q)


def charpoly_finite_field(spec: ArrangementSpec, cap: Optional[int] = None, jobs: int = 1) -> CharPolyResult:
    ispec, _ = normalize_integer(spec)
    n = ispec.n
    if n == 0:
        return CharPolyResult(RatPoly([1]), "finite_field", spec)
    primes = primes_above(prime_bound(ispec), n + 2)
    check_cap(
        primes[-1] ** max(n - 2, 0),
        resolve_cap(cap, DEFAULT_FF_CAP),
        "charpoly_finite_field",
        "use the whitney or closed_ab method instead",
    )
    counts = run_jobs(_count_task, [(ispec, q) for q in primes], jobs)
    poly = lagrange_interpolate(list(zip(primes[:-1], counts[:-1])))
    if poly(primes[-1]) != counts[-1]:
        raise CharPolyError(
            f"verification prime {primes[-1]} disagrees: count {counts[-1]}, "
            f"interpolated {poly(primes[-1])}"
        )
    return CharPolyResult(poly, "finite_field", spec)


# ---------------------------------------------------------------- Whitney

def _reduce(basis: dict[int, tuple[list[Fraction], Fraction]], row: list[Fraction], rhs: Fraction):
    """Reduce ``row . x = rhs`` against an echelon basis keyed by pivot column."""
    row = list(row)
    for col, (brow, brhs) in basis.items():
        c = row[col]
        if c:
            row = [a - c * b for a, b in zip(row, brow)]
            rhs -= c * brhs
    return row, rhs


def charpoly_whitney(spec: ArrangementSpec, cap: Optional[int] = None) -> CharPolyResult:
    """Sum ``(-1)^|B| t^dim(cap B)`` over subsets ``B`` with non-empty intersection.

    Two hyperplanes on the same pair are parallel, so only subsets using
    at most one offset per pair can meet; the walk visits exactly those and
    prunes inconsistent ones by exact Gaussian elimination.
    """
    n = spec.n
    if n == 0:
        return CharPolyResult(RatPoly([1]), "whitney", spec)
    npairs = math.comb(n, 2)
    check_cap((spec.m + 1) ** npairs, resolve_cap(cap, DEFAULT_WHITNEY_CAP), "charpoly_whitney")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    offsets = [Fraction(a) for a in spec.offsets]
    # signed[r] accumulates (-1)^|B| over consistent subsets of rank r
    signed = [0] * (n + 1)

    def rec(depth: int, basis: dict, size: int):
        if depth == npairs:
            signed[len(basis)] += -1 if size % 2 else 1
            return
        rec(depth + 1, basis, size)
        i, j = pairs[depth]
        unit = [Fraction(0)] * n
        unit[i], unit[j] = Fraction(1), Fraction(-1)
        for a in offsets:
            row, rhs = _reduce(basis, unit, a)
            piv = next((c for c, v in enumerate(row) if v), None)
            if piv is None:
                if rhs != 0:
                    continue  # empty intersection
                rec(depth + 1, basis, size + 1)
                continue
            inv = 1 / row[piv]
            row = [v * inv for v in row]
            rhs *= inv
            nb = {}
            for col, (brow, brhs) in basis.items():
                c = brow[piv]
                if c:
                    brow = [x - c * y for x, y in zip(brow, row)]
                    brhs = brhs - c * rhs
                nb[col] = (brow, brhs)
            nb[piv] = (row, rhs)
            rec(depth + 1, nb, size + 1)

    rec(0, {}, 0)
    coeffs = [0] * (n + 1)
    for rank, s in enumerate(signed):
        coeffs[n - rank] += s
    return CharPolyResult(RatPoly(coeffs), "whitney", spec)


# ---------------------------------------------------------------- closed forms

def charpoly_closed_ab(n: int, a: int, b: int) -> CharPolyResult:
    """``t * sum_k A(n-1,k) C(t - a(n-k) - bk - 1, n-1)`` for ``A = [-a, b]``."""
    if a < 0 or b < 0:
        raise CharPolyError("closed form needs non-negative a and b")
    if a > b:
        raise CharPolyError(f"closed form needs a <= b (got a={a}, b={b})")
    spec = make_preset("interval", n, a, b)
    if n == 0:
        return CharPolyResult(RatPoly([1]), "closed_ab", spec)
    if n == 1:
        return CharPolyResult(T, "closed_ab", spec)
    acc = RatPoly()
    for k in range(1, n):
        acc = acc + binomial_poly(n - 1, a * (n - k) + b * k + 1) * eulerian(n - 1, k)
    return CharPolyResult(T * acc, "closed_ab", spec)


def single_offset_param(spec: ArrangementSpec) -> Optional[int]:
    """``b`` when the offsets are exactly ``1, 2, .., b``."""
    offs = spec.offsets
    if offs and all(a == k + 1 for k, a in enumerate(offs)):
        return len(offs)
    return None


def charpoly_closed_single_offset(n: int, b: int) -> CharPolyResult:
    """``A = [1, b]`` through ``chi~[1,b](t) = chi~[0,b+1](t + n)``."""
    if b < 1:
        raise CharPolyError("the offset set [1, b] needs b >= 1")
    spec = make_spec(n, range(1, b + 1))
    if n <= 1:
        return CharPolyResult(charpoly_closed_ab(n, 0, b + 1).poly, "closed_ab", spec)
    red = reduced(charpoly_closed_ab(n, 0, b + 1).poly).shift(n)
    return CharPolyResult(T * red, "closed_ab", spec)


def charpoly_from_census(census: LevelCensus) -> CharPolyResult:
    """``sum_l (-1)^(n-l) r_l C(t, l)``."""
    n = census.n
    coeffs = [(-1) ** (n - l) * census[l] for l in range(n + 1)]
    poly = from_basis(BasisCoeffs("binomial", coeffs))
    spec = make_spec(n, census.offsets) if census.offsets or n < 2 else None
    return CharPolyResult(poly, "from_census", spec)


@lru_cache(maxsize=512)
def charpoly(spec: ArrangementSpec, method: str = "finite_field") -> CharPolyResult:
    """Dispatch by method name (results cached per spec and method)."""
    if method == "finite_field":
        return charpoly_finite_field(spec)
    if method == "whitney":
        return charpoly_whitney(spec)
    if method == "closed_ab":
        ab = spec.interval_params()
        if ab is not None:
            return CharPolyResult(charpoly_closed_ab(spec.n, *ab).poly, "closed_ab", spec)
        b = single_offset_param(spec)
        if b is None:
            raise CharPolyError(f"{spec} is neither [-a, b] with 0 <= a <= b nor [1, b]")
        return CharPolyResult(charpoly_closed_single_offset(spec.n, b).poly, "closed_ab", spec)
    if method == "from_census":
        res = charpoly_from_census(enumerate_census(spec))
        return CharPolyResult(res.poly, "from_census", spec)
    raise CharPolyError(f"unknown method {method!r}; choose from {METHODS}")


def reduced(p: RatPoly) -> RatPoly:
    """``p(t) / t``; raises unless ``t`` divides ``p``."""
    q, r = p.divmod(T)
    if not r.is_zero():
        raise CharPolyError("t does not divide the polynomial")
    return q


def interval_spec(n: int, lo: int, hi: int) -> ArrangementSpec:
    return make_spec(n, range(lo, hi + 1))


def shift_identity_check(
    n: int,
    a: int,
    b: int,
    linial: bool = False,
    left: str = "finite_field",
    right: str = "whitney",
) -> bool:
    """Check the reduced-polynomial shift identities exactly.

    Default: ``chi~[-a,b](t) == chi~[0,b-a](t - a n)``.  With ``linial``:
    ``chi~[1,b](t) == chi~[0,b+1](t + n)``.  The two sides come from
    different methods (``left`` and ``right``).
    """
    if n < 1:
        raise CharPolyError("shift identities need n >= 1")
    if linial:
        if b < 1:
            raise CharPolyError("the offset set [1, b] needs b >= 1")
        lhs = reduced(charpoly(interval_spec(n, 1, b), left).poly)
        rhs = reduced(charpoly(interval_spec(n, 0, b + 1), right).poly).shift(n)
        return lhs == rhs
    if not 0 <= a <= b:
        raise CharPolyError("shift identity needs 0 <= a <= b")
    lhs = reduced(charpoly(interval_spec(n, -a, b), left).poly)
    rhs = reduced(charpoly(interval_spec(n, 0, b - a), right).poly).shift(-a * n)
    return lhs == rhs


def zaslavsky_counts(c: CharPolyResult) -> tuple[int, int]:
    """``(r, r_1) = ((-1)^n chi(-1), (-1)^(n-1) chi(1))``."""
    p = c.poly
    n = p.degree
    r = (-1) ** n * p(-1)
    r1 = (-1) ** (n - 1) * p(1) if n >= 1 else Fraction(0)
    return int(r), int(r1)
