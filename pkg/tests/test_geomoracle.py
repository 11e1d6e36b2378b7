from __future__ import annotations

import itertools
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.optimize import linprog

from braidlevel._runtime import CapExceeded
from braidlevel.arrangement import make_preset, make_spec
from braidlevel.digraph import enumerate_census
from braidlevel.geomoracle import (
    InfeasibleSystem,
    StrictSystem,
    fm_feasible,
    fm_feasible_rows,
    geometric_census,
    recession_cone_dim,
    system_from_choices,
)

F = Fraction
EX = make_spec(3, [1, 2])


def _lp_strict_feasible(n, rows):
    """max s subject to c.x - s >= rhs on strict rows, c.x >= rhs otherwise, s <= 1."""
    A_ub, b_ub = [], []
    for coeffs, rhs, strict in rows:
        A_ub.append([-c for c in coeffs] + ([1] if strict else [0]))
        b_ub.append(-rhs)
    res = linprog(c=[0] * n + [-1], A_ub=A_ub or None, b_ub=b_ub or None,
                  bounds=[(None, None)] * n + [(None, 1)], method="highs")
    return res.status == 0 and -res.fun > 1e-9


def _lp_cone_dim(s: StrictSystem):
    rows = []
    for i, j, lo, hi in s.constraints:
        e = np.zeros(s.n)
        e[i - 1], e[j - 1] = 1, -1
        if lo is not None:
            rows.append(e)
        if hi is not None:
            rows.append(-e)
    implicit = []
    for g in rows:
        res = linprog(-g, A_ub=-np.array(rows), b_ub=np.zeros(len(rows)), bounds=[(-1, 1)] * s.n, method="highs")
        if -res.fun < 1e-9:
            implicit.append(g)
    rank = np.linalg.matrix_rank(np.array(implicit)) if implicit else 0
    return s.n - rank


def test_feasibility_examples():
    assert fm_feasible(StrictSystem(2, ((1, 2, F(1), None),)))
    assert not fm_feasible_rows(2, [((1, -1), 1, True), ((-1, 1), 1, True)])
    feasible = sum(fm_feasible(system_from_choices(EX, ch)) for ch in itertools.product(range(3), repeat=3))
    assert feasible == 18


def test_strictness_is_tracked():
    # x > 0 and -x >= 0 is empty; x >= 0 and -x >= 0 is the point 0
    assert not fm_feasible_rows(1, [((1,), 0, True), ((-1,), 0, False)])
    assert fm_feasible_rows(1, [((1,), 0, False), ((-1,), 0, False)])
    assert not fm_feasible_rows(2, [((1, 0), 0, False), ((0, 1), 0, False), ((-1, -1), 0, True)])


def test_system_validation():
    with pytest.raises(ValueError):
        StrictSystem(2, ((2, 1, None, F(1)),))
    with pytest.raises(ValueError):
        StrictSystem(2, ((1, 2, F(1), F(1)),))


rows_strategy = st.lists(
    st.tuples(st.tuples(*[st.integers(-3, 3)] * 3), st.integers(-4, 4), st.booleans()),
    min_size=1, max_size=7,
)


@given(rows_strategy)
def test_fm_matches_linear_programming(rows):
    assert fm_feasible_rows(3, rows) == _lp_strict_feasible(3, rows)


@given(rows_strategy, st.permutations(range(3)))
def test_elimination_order_invariance(rows, order):
    assert fm_feasible_rows(3, rows, order) == fm_feasible_rows(3, rows)


@pytest.mark.parametrize("A", [(1, 2), (-1, 0, 1), (-2, 0, 1)])
def test_elimination_order_on_regions(A):
    spec = make_spec(4, A)
    rng = random.Random(len(A))
    for ch in itertools.product(range(spec.m + 1), repeat=6):
        s = system_from_choices(spec, ch)
        order = rng.sample(range(4), 4)
        assert fm_feasible(s, order) == fm_feasible(s)


def test_cone_dim_examples():
    assert recession_cone_dim(StrictSystem(2, ((1, 2, F(0), F(1)),))) == 1
    assert recession_cone_dim(StrictSystem(2, ((1, 2, F(1), None),))) == 2
    dims = sorted(recession_cone_dim(system_from_choices(EX, ch))
                  for ch in itertools.product(range(3), repeat=3)
                  if fm_feasible(system_from_choices(EX, ch)))
    assert dims == [1] * 6 + [2] * 6 + [3] * 6


def test_cone_dim_rejects_empty_region():
    with pytest.raises(InfeasibleSystem):
        recession_cone_dim(StrictSystem(3, ((1, 2, F(1), None), (2, 3, F(1), None), (1, 3, None, F(0)))))


@pytest.mark.parametrize("A", [(1, 2), (-1, 0, 1), (F(1, 2), 3)])
def test_cone_dim_matches_linear_programming(A):
    spec = make_spec(4, A)
    for ch in itertools.product(range(spec.m + 1), repeat=6):
        s = system_from_choices(spec, ch)
        if fm_feasible(s):
            d = recession_cone_dim(s)
            assert 1 <= d <= 4
            assert d == _lp_cone_dim(s)


@pytest.mark.parametrize("spec,expected", [
    (EX, (0, 6, 6, 6)),
    (make_preset("catalan", 2, b=1), (0, 2, 2)),
    (make_spec(1, [3]), (0, 1)),
    (make_spec(0, [3]), (1,)),
])
def test_geometric_census_examples(spec, expected):
    c = geometric_census(spec)
    assert c.counts == expected
    assert c.method == "geometric"


@pytest.mark.parametrize("A", [(0, 1), (-2, 0, 1), (F(-1, 2), 1), (1, 2, 3)])
def test_geometric_matches_digraph(A):
    spec = make_spec(4, A)
    assert geometric_census(spec, jobs=2).counts == enumerate_census(spec).counts


def test_geometric_cap():
    with pytest.raises(CapExceeded, match="geometric_census"):
        geometric_census(make_spec(6, [0, 1]))
    with pytest.raises(CapExceeded, match="cap 10"):
        geometric_census(EX, cap=10)
