"""Cross-method invariant suite used by ``braidlevel verify``."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from braidlevel._runtime import CapExceeded
from braidlevel.arrangement import ArrangementSpec, make_spec
from braidlevel.charpoly import charpoly, single_offset_param, zaslavsky_counts
from braidlevel.digraph import enumerate_census
from braidlevel.geomoracle import geometric_census
from braidlevel.levels import (
    R1Table,
    census_family,
    convolution_identity_check,
    egf_truncated,
    esa_check,
    rl_from_r1,
)
from braidlevel.polyalg import to_basis


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""
    skipped: bool = False

    def line(self) -> str:
        status = "SKIP" if self.skipped else ("PASS" if self.passed else "FAIL")
        return f"{status} {self.name}" + (f" ({self.detail})" if self.detail else "")


def _guard(name: str, fn) -> Check:
    try:
        ok = fn()
    except CapExceeded as exc:
        return Check(name, True, str(exc), skipped=True)
    if isinstance(ok, Check):
        return ok
    return Check(name, bool(ok))


def check_spec(spec: ArrangementSpec, cap: Optional[int] = None, jobs: int = 1) -> Iterator[Check]:
    """Every invariant that applies to a single ``(n, A)``."""
    tag = spec.label()
    census = enumerate_census(spec, cap=cap, jobs=jobs)
    polys = {}
    for method in ("finite_field", "whitney", "from_census"):
        try:
            polys[method] = charpoly(spec, method).poly
        except CapExceeded:
            pass
    if spec.interval_params() is not None or single_offset_param(spec) is not None:
        polys["closed_ab"] = charpoly(spec, "closed_ab").poly
    ref = next(iter(polys.values()))
    yield Check(f"{tag} charpoly methods agree", all(p == ref for p in polys.values()), ",".join(polys))
    res = charpoly(spec, "from_census")
    problems = res.invariant_violations()
    yield Check(f"{tag} charpoly invariants", not problems, "; ".join(problems))
    r, r1 = zaslavsky_counts(res)
    yield Check(f"{tag} zaslavsky total", r == census.total, f"{r} vs {census.total}")
    if spec.n >= 1:
        yield Check(f"{tag} zaslavsky level 1", r1 == census[1], f"{r1} vs {census[1]}")
    signed = [(-1) ** (spec.n - l) * census[l] for l in range(spec.n + 1)]
    yield Check(
        f"{tag} binomial coefficients = signed census",
        list(to_basis(ref, "binomial").coeffs) == signed,
    )
    yield _guard(
        f"{tag} digraph census = geometric census",
        lambda: geometric_census(spec, cap=cap, jobs=jobs).counts == census.counts,
    )
    yield Check(
        f"{tag} census invariant under A -> -A",
        enumerate_census(spec.negated(), cap=cap, jobs=jobs).counts == census.counts,
    )


def check_family(spec: ArrangementSpec, N: int, cap: Optional[int] = None) -> Iterator[Check]:
    """Identities that tie together ``B_0^A .. B_N^A``."""
    tag = f"A={{{','.join(str(a) for a in spec.offsets)}}} N={N}"
    cens = census_family(spec, N)
    table = R1Table(tuple(c[1] for c in cens[1:]), tag)
    conv = all(
        convolution_identity_check(n, l, k, cens)
        for n in range(N + 1) for l in range(n + 1) for k in range(l + 1)
    )
    yield Check(f"{tag} R_l = R_k R_(l-k)", conv)
    yield Check(
        f"{tag} r_l = multinomial convolution of r_1",
        all(rl_from_r1(n, l, table) == cens[n][l] for n in range(1, N + 1) for l in range(n + 1)),
    )
    yield Check(
        f"{tag} R_l = R_1^l",
        all(egf_truncated(l, N, table) == [c[l] for c in cens] for l in range(N + 1)),
    )
    yield Check(f"{tag} exponential-sequence identity", esa_check(spec, N, "from_census"))


def offset_sets(lo: int, hi: int, max_size: int) -> Iterator[tuple[int, ...]]:
    values = range(lo, hi + 1)
    for size in range(1, max_size + 1):
        yield from itertools.combinations(values, size)


def sweep(max_n: int = 4, max_size: int = 4, lo: int = -3, hi: int = 3,
          cap: Optional[int] = None, jobs: int = 1) -> Iterator[Check]:
    for offs in offset_sets(lo, hi, max_size):
        for n in range(1, max_n + 1):
            yield from check_spec(make_spec(n, offs), cap=cap, jobs=jobs)
        yield from check_family(make_spec(1, offs), max_n, cap=cap)


def run_checks(checks: Iterable[Check], emit=print) -> bool:
    ok = True
    for c in checks:
        emit(c.line())
        ok = ok and c.passed
    return ok
