"""Exact real-root analysis of characteristic polynomials with Sturm sequences."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from braidlevel.charpoly import charpoly, interval_spec, reduced
from braidlevel.digraph import SCHEMA
from braidlevel.polyalg import RatPoly, frac_str, to_strings

FAMILIES = ("interval", "single_offset")


def poly_gcd(p: RatPoly, q: RatPoly) -> RatPoly:
    while not q.is_zero():
        p, q = q, p % q
    return p.monic()


def squarefree(p: RatPoly) -> RatPoly:
    if p.is_zero():
        raise ValueError("zero polynomial")
    g = poly_gcd(p, p.derivative())
    return (p // g).monic()


def sturm_sequence(p: RatPoly) -> list[RatPoly]:
    seq = [squarefree(p)]
    seq.append(seq[0].derivative())
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    return seq[:-1]


def _sign_at(p: RatPoly, x: Optional[Fraction], at_plus: bool) -> int:
    """Sign of ``p`` at ``x``; ``x=None`` means the infinity selected by ``at_plus``."""
    if x is None:
        if p.is_zero():
            return 0
        lead = 1 if p.lead > 0 else -1
        if not at_plus and p.degree % 2:
            lead = -lead
        return lead
    v = p(x)
    return (v > 0) - (v < 0)


def _variations(seq: list[RatPoly], x: Optional[Fraction], at_plus: bool) -> int:
    signs = [s for s in (_sign_at(q, x, at_plus) for q in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p: RatPoly, lo: Optional[Fraction] = None, hi: Optional[Fraction] = None) -> int:
    """Distinct real roots of ``p`` in ``(lo, hi]``; ``None`` stands for -inf / +inf."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    seq = sturm_sequence(p)
    lo_f = None if lo is None else Fraction(lo)
    hi_f = None if hi is None else Fraction(hi)
    return _variations(seq, lo_f, False) - _variations(seq, hi_f, True)


def multiplicity(p: RatPoly, root: Fraction) -> int:
    """Exponent of ``(t - root)`` in ``p``, by repeated exact division."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    lin = RatPoly([-Fraction(root), 1])
    k = 0
    while True:
        q, r = p.divmod(lin)
        if not r.is_zero():
            return k
        p = q
        k += 1


def _bound_str(x: Optional[Fraction], plus: bool) -> str:
    if x is None:
        return "+inf" if plus else "-inf"
    return frac_str(x)


@dataclass
class RootReport:
    poly: RatPoly
    real_root_count: int
    certified_roots: list[tuple[Fraction, int]]
    interval_counts: list[tuple[tuple[Optional[Fraction], Optional[Fraction]], int]]
    verdict: Optional[bool] = None
    within_hypotheses: bool = True
    note: str = ""
    params: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "params": self.params,
            "coeffs": to_strings(self.poly),
            "real_root_count": str(self.real_root_count),
            "certified_roots": [
                {"root": frac_str(r), "multiplicity": str(k)} for r, k in self.certified_roots
            ],
            "interval_counts": [
                {"lo": _bound_str(lo, False), "hi": _bound_str(hi, True), "count": str(c)}
                for (lo, hi), c in self.interval_counts
            ],
            "within_hypotheses": self.within_hypotheses,
            "verdict": self.verdict,
            "note": self.note,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def root_report(p: RatPoly, candidates: list[Fraction]) -> RootReport:
    """Sturm facts for ``p`` plus multiplicities of the given rational candidates."""
    certified = [(c, multiplicity(p, c)) for c in sorted(set(candidates))]
    certified = [(c, k) for c, k in certified if k]
    cuts = sorted(set(candidates))
    bounds = [None, *cuts, None]
    intervals = [((bounds[i], bounds[i + 1]), sturm_count(p, bounds[i], bounds[i + 1])) for i in range(len(bounds) - 1)]
    return RootReport(p, sturm_count(p), certified, intervals)


def verify_root_structure(
    n: int,
    a: int,
    b: int,
    family: str = "interval",
    method: Optional[str] = None,
) -> RootReport:
    """Check the predicted real roots of ``chi`` for ``[-a, b]`` or ``[1, b]``.

    ``interval``: ``A = [-a, b]`` with ``b - a >= n - 1``; the real roots
    should be 0, plus ``n(a+b+1)/2`` when ``n`` is even, all simple.
    ``single_offset``: ``A = [1, b]`` (``a`` ignored) with ``b >= n - 2``;
    the second root for even ``n`` is ``nb/2``.
    """
    if n < 2:
        raise ValueError("root structure is stated for n >= 2")
    if family == "interval":
        if a < 0 or b < a:
            raise ValueError("interval family needs 0 <= a <= b")
        spec = interval_spec(n, -a, b)
        center = Fraction(n * (a + b + 1), 2)
        ok_hyp = b - a >= n - 1
        method = method or "closed_ab"
    elif family == "single_offset":
        if b < 1:
            raise ValueError("single_offset family needs b >= 1")
        spec = interval_spec(n, 1, b)
        center = Fraction(n * b, 2)
        ok_hyp = b >= n - 2
        method = method or "finite_field"
    else:
        raise ValueError(f"unknown family {family!r}")
    p = charpoly(spec, method).poly
    report = root_report(p, [Fraction(0), center])
    report.params = {"n": n, "a": a, "b": b, "family": family, "method": method}
    expected = [Fraction(0)] if n % 2 else [Fraction(0), center]
    rest = p
    simple = True
    for r in expected:
        if multiplicity(p, r) != 1:
            simple = False
            break
        rest = rest // RatPoly([-r, 1])
    verdict = simple and report.real_root_count == len(expected) and sturm_count(rest) == 0
    report.within_hypotheses = ok_hyp
    if ok_hyp:
        report.verdict = verdict
    else:
        report.note = "outside theorem hypotheses"
    return report


def symmetry_identity_check(n: int, b: int, method: str = "closed_ab") -> bool:
    """``chi~[0,b](n(b+1) - t) == (-1)^(n-1) chi~[0,b](t)`` exactly."""
    if n < 2:
        raise ValueError("symmetry identity is stated for n >= 2")
    red = reduced(charpoly(interval_spec(n, 0, b), method).poly)
    mirrored = red.compose(RatPoly([n * (b + 1), -1]))
    return mirrored == red * (-1) ** (n - 1)
