from __future__ import annotations

import itertools
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from braidlevel.combinat import (
    binomial,
    compositions,
    eulerian,
    multinomial,
    stirling_first,
    stirling_first_unsigned,
    stirling_second,
)


def _descents(perm) -> int:
    return sum(1 for a, b in zip(perm, perm[1:]) if a > b)


def _cycles(perm) -> int:
    seen, count = set(), 0
    for start in range(len(perm)):
        if start in seen:
            continue
        count += 1
        v = start
        while v not in seen:
            seen.add(v)
            v = perm[v]
    return count


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


@pytest.mark.parametrize("n,k,expected", [(0, 0, 1), (3, 2, 3), (5, 7, 0)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


@given(st.integers(0, 40), st.integers(0, 45))
def test_binomial_matches_math_comb(n, k):
    assert binomial(n, k) == comb(n, k)


@pytest.mark.parametrize("n,k,expected", [(1, 1, 1), (3, 2, 4), (2, 1, 1), (2, 2, 1), (3, 0, 0), (3, 4, 0)])
def test_eulerian_examples(n, k, expected):
    assert eulerian(n, k) == expected


@pytest.mark.parametrize("n", range(1, 7))
def test_eulerian_counts_descents(n):
    counts = [0] * (n + 1)
    for perm in itertools.permutations(range(n)):
        counts[_descents(perm) + 1] += 1
    assert [eulerian(n, k) for k in range(1, n + 1)] == counts[1:]


@pytest.mark.parametrize("n", range(1, 12))
def test_eulerian_row_sum_and_symmetry(n):
    row = [eulerian(n, k) for k in range(1, n + 1)]
    assert sum(row) == factorial(n)
    assert row == row[::-1]


@pytest.mark.parametrize("n,k,expected", [(0, 0, 1), (3, 2, 3), (2, 0, 0)])
def test_stirling_first_examples(n, k, expected):
    assert stirling_first_unsigned(n, k) == expected


@pytest.mark.parametrize("n", range(0, 7))
def test_stirling_first_counts_cycles(n):
    counts = [0] * (n + 1)
    for perm in itertools.permutations(range(n)):
        counts[_cycles(perm)] += 1
    assert [stirling_first_unsigned(n, k) for k in range(n + 1)] == counts
    assert [stirling_first(n, k) for k in range(n + 1)] == [(-1) ** (n - k) * c for k, c in enumerate(counts)]


@pytest.mark.parametrize("n,k,expected", [(1, 1, 1), (3, 2, 3), (2, 3, 0), (0, 0, 1)])
def test_stirling_second_examples(n, k, expected):
    assert stirling_second(n, k) == expected


@pytest.mark.parametrize("n", range(0, 8))
def test_stirling_second_counts_partitions(n):
    counts = [0] * (n + 1)
    for part in _set_partitions(list(range(n))):
        counts[len(part)] += 1
    assert [stirling_second(n, k) for k in range(n + 1)] == counts


def test_big_values_are_exact():
    explicit = sum((-1) ** j * comb(30, j) * (30 - j) ** 60 for j in range(31)) // factorial(30)
    assert stirling_second(60, 30) == explicit
    assert eulerian(40, 20) == eulerian(40, 21)
    assert sum(stirling_first_unsigned(30, k) for k in range(31)) == factorial(30)


@pytest.mark.parametrize("n,l,expected", [
    (3, 2, [(1, 2), (2, 1)]),
    (2, 2, [(1, 1)]),
    (1, 2, []),
    (0, 0, [()]),
    (3, 0, []),
])
def test_compositions_examples(n, l, expected):
    assert list(compositions(n, l)) == expected


def _compositions_by_cuts(n, l):
    if l == 0:
        return [()] if n == 0 else []
    if n < l:
        return []
    out = []
    for cuts in itertools.combinations(range(1, n), l - 1):
        edges = (0, *cuts, n)
        out.append(tuple(b - a for a, b in zip(edges, edges[1:])))
    return sorted(out)


@given(st.integers(0, 12), st.integers(0, 12))
def test_compositions_oracle(n, l):
    got = list(compositions(n, l))
    brute = _compositions_by_cuts(n, l)
    assert got == brute
    if n >= 1 and l >= 1:
        assert len(got) == comb(n - 1, l - 1)


def test_multinomial():
    assert multinomial((1, 2)) == 3
    assert multinomial((2, 2, 1)) == 30
    assert multinomial(()) == 1
