"""Exact combinatorial numbers: binomials, Eulerian and Stirling numbers.

Everything here is plain Python integers, so values never overflow.
Tables are filled by recurrence and memoized with ``functools.lru_cache``.

Eulerian numbers use the 1-based convention: ``eulerian(n, k)`` counts
permutations of ``n`` letters with exactly ``k - 1`` descents, so the
non-zero range is ``1 <= k <= n``.  This is *not* the 0-based
``<n, k>`` convention common in the literature.
"""
from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterator, Sequence


def binomial(n: int, k: int) -> int:
    """C(n, k) for natural ``n`` and ``k``; zero when ``k > n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(parts: Sequence[int]) -> int:
    """(n1 + ... + nl)! / (n1! ... nl!)."""
    total = 0
    result = 1
    for p in parts:
        total += p
        result *= math.comb(total, p)
    return result


@lru_cache(maxsize=None)
def eulerian(n: int, k: int) -> int:
    """Permutations of [n] with exactly ``k - 1`` descents (1-based ``k``)."""
    if n < 1 or k < 1 or k > n:
        return 0
    if n == 1:
        return 1
    # 0-based recurrence E(n,d) = (d+1)E(n-1,d) + (n-d)E(n-1,d-1), with d = k-1
    return k * eulerian(n - 1, k) + (n - k + 1) * eulerian(n - 1, k - 1)


@lru_cache(maxsize=None)
def stirling_first_unsigned(n: int, k: int) -> int:
    """c(n, k): permutations of [n] with exactly ``k`` cycles."""
    if n < 0 or k < 0:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    return stirling_first_unsigned(n - 1, k - 1) + (n - 1) * stirling_first_unsigned(n - 1, k)


def stirling_first(n: int, k: int) -> int:
    """Signed Stirling number of the first kind, s(n,k) = (-1)^(n-k) c(n,k)."""
    c = stirling_first_unsigned(n, k)
    return -c if (n - k) % 2 else c


@lru_cache(maxsize=None)
def stirling_second(n: int, k: int) -> int:
    """S(n, k): partitions of an n-set into k non-empty blocks."""
    if n < 0 or k < 0:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    return stirling_second(n - 1, k - 1) + k * stirling_second(n - 1, k)


def compositions(n: int, l: int) -> Iterator[tuple[int, ...]]:
    """Yield the compositions of ``n`` into ``l`` positive parts, lexicographically."""
    if l == 0:
        if n == 0:
            yield ()
        return
    if l > n:
        return
    if l == 1:
        yield (n,)
        return
    for first in range(1, n - l + 2):
        for rest in compositions(n - first, l - 1):
            yield (first,) + rest
