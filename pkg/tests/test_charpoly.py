from __future__ import annotations

import itertools
import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from braidlevel._runtime import CapExceeded
from braidlevel.arrangement import hyperplanes, make_preset, make_spec
from braidlevel.charpoly import (
    CharPolyError,
    CharPolyResult,
    charpoly,
    charpoly_closed_ab,
    charpoly_finite_field,
    charpoly_from_census,
    charpoly_whitney,
    count_points,
    interval_spec,
    primes_above,
    reduced,
    shift_identity_check,
    single_offset_param,
    zaslavsky_counts,
)
from braidlevel.digraph import LevelCensus, enumerate_census
from braidlevel.polyalg import RatPoly

F = Fraction
t = RatPoly.t()
CHI = RatPoly([0, 11, -6, 1])
EX = make_spec(3, [1, 2])


def _count_brute(spec, q):
    offs = {int(a) % q for a in spec.offsets}
    return sum(
        all((x[i] - x[j]) % q not in offs for i in range(spec.n) for j in range(i + 1, spec.n))
        for x in itertools.product(range(q), repeat=spec.n)
    )


def _whitney_brute(spec):
    """Every subset of hyperplanes; rank and consistency from numpy on small integer systems."""
    hs = hyperplanes(spec)
    n = spec.n
    coeffs = [0] * (n + 1)
    for size in range(len(hs) + 1):
        for sub in itertools.combinations(hs, size):
            M = np.zeros((size, n))
            rhs = np.zeros((size, 1))
            for r, h in enumerate(sub):
                M[r, h.i - 1], M[r, h.j - 1], rhs[r, 0] = 1, -1, float(h.offset)
            rank = np.linalg.matrix_rank(M) if size else 0
            if size and np.linalg.matrix_rank(np.hstack([M, rhs])) > rank:
                continue
            coeffs[n - rank] += (-1) ** size
    return RatPoly(coeffs)


@pytest.mark.parametrize("A,q", [((0, 1), 5), ((1, 2), 7), ((-1, 0, 1), 11), ((-2, 3), 13), ((0,), 3)])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_count_points_brute_force(A, q, n):
    spec = make_spec(n, A)
    assert count_points(spec, q) == _count_brute(spec, q)


def test_count_points_example():
    assert count_points(make_spec(2, [0, 1]), 5) == 15
    assert count_points(make_spec(0, [1]), 5) == 1
    with pytest.raises(CharPolyError):
        count_points(make_spec(2, [F(1, 2)]), 5)


def test_primes_above():
    assert primes_above(10, 4) == [11, 13, 17, 19]


@pytest.mark.parametrize("method", ["finite_field", "whitney", "from_census"])
def test_worked_example_all_routes(method):
    assert charpoly(EX, method).poly == CHI


@pytest.mark.parametrize("spec,expected", [
    (make_spec(2, [0, 1]), t * t - 2 * t),
    (make_spec(2, [1]), t * t - t),
    (make_preset("catalan", 2, b=1), t * t - 3 * t),
    (make_spec(0, [1]), RatPoly([1])),
    (make_spec(1, [4]), t),
])
@pytest.mark.parametrize("method", ["finite_field", "whitney", "from_census"])
def test_small_examples(spec, expected, method):
    assert charpoly(spec, method).poly == expected


@pytest.mark.parametrize("n,a,b,expected", [
    (3, 0, 1, t * (t - 3) ** 2),
    (2, 1, 1, t * t - 3 * t),
    (3, 0, 2, t * (t * t - 9 * t + 21)),
    (0, 0, 3, RatPoly([1])),
    (1, 2, 3, t),
])
def test_closed_ab_examples(n, a, b, expected):
    assert charpoly_closed_ab(n, a, b).poly == expected


def test_closed_ab_rejects_bad_interval():
    with pytest.raises(CharPolyError):
        charpoly_closed_ab(3, 2, 1)
    with pytest.raises(CharPolyError):
        charpoly(make_spec(3, [1, 3]), "closed_ab")
    with pytest.raises(CharPolyError):
        charpoly(make_spec(3, [2, 3]), "closed_ab")


@pytest.mark.parametrize("b", [1, 2, 3])
@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_closed_form_single_offset(n, b):
    spec = make_spec(n, range(1, b + 1))
    assert single_offset_param(spec) == b
    assert charpoly(spec, "closed_ab").poly == charpoly(spec, "whitney").poly


def test_from_census_examples():
    assert charpoly_from_census(LevelCensus(3, (0, 6, 6, 6), "digraph")).poly == CHI
    assert charpoly_from_census(LevelCensus(2, (0, 0, 2), "digraph")).poly == t * t - t
    assert charpoly_from_census(LevelCensus(1, (0, 1), "digraph")).poly == t


@pytest.mark.parametrize("A", [(0, 1), (1, 2), (-1, 1), (-2, 0, 1), (1, 3), (F(1, 2), 1)])
@pytest.mark.parametrize("n", [2, 3])
def test_whitney_matches_subset_brute_force(A, n):
    spec = make_spec(n, A)
    assert charpoly_whitney(spec).poly == _whitney_brute(spec)


@pytest.mark.parametrize("A", [(0, 1), (1, 2), (-1, 1)])
def test_whitney_brute_force_n4(A):
    spec = make_spec(4, A)
    assert charpoly_whitney(spec).poly == _whitney_brute(spec)


@pytest.mark.parametrize("A", [(0, 1), (1, 2), (-1, 0, 1), (-2, 1, 3), (F(-1, 3), F(1, 2))])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_finite_field_values_are_point_counts(A, n):
    spec = make_spec(n, A)
    p = charpoly_finite_field(spec).poly
    scaled = make_spec(n, [a * 6 for a in spec.offsets])
    for q in primes_above(n * (2 * 18 + 2) + 1, 2):
        assert p(q) == count_points(scaled, q)


@settings(max_examples=25)
@given(st.lists(st.integers(-3, 3), min_size=1, max_size=4, unique=True), st.integers(1, 4))
def test_methods_agree_random(A, n):
    spec = make_spec(n, A)
    ff = charpoly(spec, "finite_field").poly
    assert charpoly(spec, "whitney").poly == ff
    assert charpoly(spec, "from_census").poly == ff
    ab = spec.interval_params()
    if ab is not None:
        assert charpoly(spec, "closed_ab").poly == ff


@pytest.mark.parametrize("a,b", [(a, b) for b in range(4) for a in range(b + 1)])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_closed_form_matches_finite_field(n, a, b):
    spec = interval_spec(n, -a, b)
    assert charpoly(spec, "closed_ab").poly == charpoly(spec, "finite_field").poly


def test_invariants():
    assert CharPolyResult(CHI, "x", EX).invariant_violations() == []
    bad = CharPolyResult(RatPoly([1, 11, 6, 2]), "x", EX).invariant_violations()
    assert any("monic" in b for b in bad)
    assert any("constant" in b for b in bad)
    assert any("sign" in b for b in bad)
    assert CharPolyResult(RatPoly([0, F(1, 2), 1]), "x", make_spec(2, [0])).invariant_violations()


@pytest.mark.parametrize("A", [(0, 1), (1, 2), (-2, -1, 0, 1, 2), (F(1, 3), 2)])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_outputs_satisfy_invariants(A, n):
    for method in ("finite_field", "whitney", "from_census"):
        assert charpoly(make_spec(n, A), method).invariant_violations() == []


def test_caps():
    with pytest.raises(CapExceeded, match="whitney"):
        charpoly_whitney(make_preset("catalan", 5, b=2))
    with pytest.raises(CapExceeded, match="whitney or closed_ab"):
        charpoly_finite_field(make_preset("shi", 6, b=1), cap=1000)


def test_unknown_method():
    with pytest.raises(CharPolyError, match="unknown method"):
        charpoly(EX, "tutte")


@pytest.mark.parametrize("poly,expected", [
    (CHI, (18, 6)),
    (t * t - 2 * t, (3, 1)),
    (t, (1, 1)),
])
def test_zaslavsky_examples(poly, expected):
    assert zaslavsky_counts(CharPolyResult(poly, "x")) == expected


@pytest.mark.parametrize("n,a,b", [(2, 1, 1), (2, 1, 2), (2, 0, 1), (3, 1, 3), (4, 2, 2)])
def test_shift_identity_examples(n, a, b):
    assert shift_identity_check(n, a, b)


def test_shift_identity_values():
    assert reduced(charpoly(interval_spec(2, -1, 1), "whitney").poly) == t - 3
    assert reduced(charpoly(interval_spec(2, -1, 2), "whitney").poly) == t - 4
    assert reduced(charpoly(interval_spec(2, 0, 1), "whitney").poly).shift(-2) == t - 4


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("b", [1, 2, 3])
def test_single_offset_shift(n, b):
    assert shift_identity_check(n, 0, b, linial=True)
    assert shift_identity_check(n, 0, b, linial=True, left="whitney", right="finite_field")


def test_shift_identity_detects_mismatch():
    # a wrong shift direction must not pass
    lhs = reduced(charpoly(interval_spec(3, -1, 2), "finite_field").poly)
    rhs = reduced(charpoly(interval_spec(3, 0, 1), "whitney").poly)
    assert lhs == rhs.shift(-3)
    assert lhs != rhs.shift(3)


def test_reduced_requires_factor_t():
    with pytest.raises(CharPolyError):
        reduced(t + 1)


def test_result_json():
    data = charpoly(EX, "finite_field").to_dict()
    assert data == {"schema": "braidlevel/1", "n": 3, "method": "finite_field",
                    "coeffs": ["0", "11", "-6", "1"], "basis": "power"}
    assert RatPoly([F(c) for c in json.loads(json.dumps(data))["coeffs"]]) == CHI


def test_parallel_counting_matches_serial():
    spec = make_preset("catalan", 4, b=1)
    assert charpoly_finite_field(spec, jobs=3).poly == charpoly_finite_field(spec).poly


def test_from_census_round_trip():
    for spec in (EX, make_preset("shi", 4, b=1), make_spec(4, [-2, 1])):
        c = enumerate_census(spec)
        assert charpoly_from_census(c).poly == charpoly(spec, "whitney").poly
