"""Geometric cross-check of the digraph model.

Regions are treated as open polyhedra ``lower < x_i - x_j < upper`` and
decided with Fourier-Motzkin elimination in exact integer arithmetic,
tracking strictness symbolically.  The level of a region is taken to be
the dimension of its recession cone.  None of this reuses the cycle or
strong-component code in :mod:`braidlevel.digraph`.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from braidlevel._runtime import check_cap, resolve_cap, run_jobs
from braidlevel.arrangement import ArrangementSpec
from braidlevel.digraph import LevelCensus, WeightedDigraph, pairs_of

DEFAULT_GEOMETRIC_CAP = 10**6

Bound = Optional[Fraction]


class InfeasibleSystem(ValueError):
    pass


@dataclass(frozen=True)
class StrictSystem:
    """``lower < x_i - x_j < upper`` for each listed pair (1-based, ``i < j``)."""
    n: int
    constraints: tuple[tuple[int, int, Bound, Bound], ...]

    def __post_init__(self):
        for i, j, lo, hi in self.constraints:
            if not 1 <= i < j <= self.n:
                raise ValueError(f"bad pair ({i}, {j})")
            if lo is not None and hi is not None and not lo < hi:
                raise ValueError(f"empty interval for pair ({i}, {j})")


def system_of(d: WeightedDigraph) -> StrictSystem:
    pos = {v: k + 1 for k, v in enumerate(d.vertices)}
    return StrictSystem(d.n, tuple((pos[i], pos[j], lo, hi) for i, j, lo, hi in d.bounds()))


def system_from_choices(spec: ArrangementSpec, choices: Sequence[int]) -> StrictSystem:
    offs = spec.offsets
    m = len(offs)
    cons = []
    for (i, j), k in zip(pairs_of(range(1, spec.n + 1)), choices):
        cons.append((i, j, offs[k - 1] if k > 0 else None, offs[k] if k < m else None))
    return StrictSystem(spec.n, tuple(cons))


# A row (coeffs, rhs, strict) reads  sum(c * x) > rhs  or  sum(c * x) >= rhs.
Row = tuple[tuple[int, ...], int, bool]


def _difference_row(n: int, i: int, j: int, sign: int, bound: Fraction, strict: bool) -> Row:
    den = bound.denominator
    coeffs = [0] * n
    coeffs[i - 1] = sign * den
    coeffs[j - 1] = -sign * den
    return tuple(coeffs), sign * bound.numerator, strict


def _rows(s: StrictSystem) -> list[Row]:
    rows = []
    for i, j, lo, hi in s.constraints:
        if lo is not None:
            rows.append(_difference_row(s.n, i, j, 1, lo, True))
        if hi is not None:
            rows.append(_difference_row(s.n, i, j, -1, hi, True))
    return rows


def _contradiction(rhs: int, strict: bool) -> bool:
    # 0 > rhs or 0 >= rhs
    return rhs >= 0 if strict else rhs > 0


def _add(store: dict, coeffs: tuple[int, ...], rhs: int, strict: bool) -> bool:
    """Insert a row keeping only the strongest per left-hand side; False on contradiction."""
    if not any(coeffs):
        return not _contradiction(rhs, strict)
    g = math.gcd(*coeffs, rhs)
    if g > 1:
        coeffs = tuple(c // g for c in coeffs)
        rhs //= g
    old = store.get(coeffs)
    if old is None or rhs > old[0] or (rhs == old[0] and strict and not old[1]):
        store[coeffs] = (rhs, strict)
    return True


def fm_feasible_rows(n: int, rows: Iterable[Row], order: Optional[Sequence[int]] = None) -> bool:
    """Decide solvability of a mixed strict/non-strict system by Fourier-Motzkin."""
    store: dict[tuple[int, ...], tuple[int, bool]] = {}
    for coeffs, rhs, strict in rows:
        if not _add(store, coeffs, rhs, strict):
            return False
    for v in (order if order is not None else range(n)):
        pos, neg, nxt = [], [], {}
        for coeffs, (rhs, strict) in store.items():
            c = coeffs[v]
            if c > 0:
                pos.append((coeffs, rhs, strict))
            elif c < 0:
                neg.append((coeffs, rhs, strict))
            else:
                nxt[coeffs] = (rhs, strict)
        for pc, pr, ps in pos:
            alpha = pc[v]
            for nc, nr, ns in neg:
                beta = -nc[v]
                coeffs = tuple(beta * a + alpha * b for a, b in zip(pc, nc))
                if not _add(nxt, coeffs, beta * pr + alpha * nr, ps or ns):
                    return False
        store = nxt
    return True


def fm_feasible(s: StrictSystem, order: Optional[Sequence[int]] = None) -> bool:
    """True iff the open polyhedron of ``s`` is non-empty."""
    return fm_feasible_rows(s.n, _rows(s), order)


def _cone_rows(s: StrictSystem) -> frozenset[tuple[int, ...]]:
    rows = set()
    for i, j, lo, hi in s.constraints:
        if lo is not None:
            rows.add(_difference_row(s.n, i, j, 1, Fraction(1), False)[0])
        if hi is not None:
            rows.add(_difference_row(s.n, i, j, -1, Fraction(1), False)[0])
    return frozenset(rows)


def _rank(rows: Sequence[Sequence[int]], n: int) -> int:
    mat = [[Fraction(c) for c in r] for r in rows]
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                f = mat[r][col] / mat[rank][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank


@lru_cache(maxsize=None)
def _cone_dim(n: int, cone: frozenset[tuple[int, ...]]) -> int:
    base = [(g, 0, False) for g in cone]
    implicit = []
    for g in sorted(cone):
        # g is an implicit equality of the cone iff g > 0 is impossible on it
        if not fm_feasible_rows(n, base + [(g, 0, True)]):
            implicit.append(g)
    return n - _rank(implicit, n)


def recession_cone_dim(s: StrictSystem) -> int:
    """Dimension of ``{v : v_i - v_j >= 0 per finite lower bound, <= 0 per finite upper}``."""
    if not fm_feasible(s):
        raise InfeasibleSystem("recession cone of an empty region is undefined")
    return _cone_dim(s.n, _cone_rows(s))


def _geometric_chunk(task) -> list[int]:
    spec, first = task
    n, m = spec.n, spec.m
    npairs = math.comb(n, 2)
    counts = [0] * (n + 1)
    heads = [first] if first is not None else list(range(m + 1))
    for head in heads:
        for tail in itertools.product(range(m + 1), repeat=npairs - 1):
            s = system_from_choices(spec, (head,) + tail)
            if fm_feasible(s):
                counts[_cone_dim(n, _cone_rows(s))] += 1
    return counts


def geometric_census(spec: ArrangementSpec, cap: Optional[int] = None, jobs: int = 1) -> LevelCensus:
    """Region census by brute force over all pair choices, levels from recession cones."""
    n = spec.n
    check_cap((spec.m + 1) ** math.comb(n, 2), resolve_cap(cap, DEFAULT_GEOMETRIC_CAP), "geometric_census")
    if n == 0:
        return LevelCensus(0, (1,), "geometric", spec.offsets)
    if n == 1:
        # the only region is all of R^1
        return LevelCensus(1, (0, 1), "geometric", spec.offsets)
    if spec.m == 0:
        raise ValueError("offset set must be non-empty for n >= 2")
    tasks = [(spec, k) for k in range(spec.m + 1)]
    counts = [0] * (n + 1)
    for part in run_jobs(_geometric_chunk, tasks, jobs):
        counts = [a + b for a, b in zip(counts, part)]
    return LevelCensus(n, tuple(counts), "geometric", spec.offsets)
