"""Deformed braid arrangements ``x_i - x_j = a`` for ``a`` in a finite offset set.

An :class:`ArrangementSpec` is the pair ``(n, A)``; every pair ``i < j`` of
coordinates receives one hyperplane per offset.  Offsets are exact
rationals kept in strictly increasing order.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

PRESETS = ("braid", "shi", "catalan", "semiorder", "linial", "interval")


class SpecError(ValueError):
    """Malformed or inconsistent arrangement specification."""


@dataclass(frozen=True)
class ArrangementSpec:
    n: int
    offsets: tuple[Fraction, ...]
    preset: Optional[str] = None
    params: tuple[tuple[str, int], ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise SpecError("n must be a natural number")
        offs = tuple(Fraction(a) for a in self.offsets)
        if len(set(offs)) != len(offs):
            dup = next(a for a in offs if offs.count(a) > 1)
            raise SpecError(f"duplicate offset {dup}")
        object.__setattr__(self, "offsets", tuple(sorted(offs)))

    @property
    def m(self) -> int:
        return len(self.offsets)

    @property
    def A(self) -> tuple[Fraction, ...]:
        return self.offsets

    def with_n(self, n: int) -> "ArrangementSpec":
        return ArrangementSpec(n, self.offsets, self.preset, self.params)

    def negated(self) -> "ArrangementSpec":
        return ArrangementSpec(self.n, tuple(-a for a in self.offsets))

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.offsets)

    def interval_params(self) -> Optional[tuple[int, int]]:
        """``(a, b)`` with non-negative ``a <= b`` when the offsets are ``[-a, b]``."""
        if not self.offsets or not self.is_integral():
            return None
        lo, hi = int(self.offsets[0]), int(self.offsets[-1])
        if len(self.offsets) != hi - lo + 1:
            return None
        a, b = -lo, hi
        if a < 0 or a > b:
            return None
        return a, b

    def label(self) -> str:
        body = ",".join(_fmt(a) for a in self.offsets)
        return f"n={self.n};A={{{body}}}"

    def __str__(self) -> str:
        return self.label()


@dataclass(frozen=True)
class Hyperplane:
    """``x_i - x_j = offset`` with 1-based ``i < j``."""
    i: int
    j: int
    offset: Fraction

    def value(self, x: Sequence[Fraction]) -> Fraction:
        return x[self.i - 1] - x[self.j - 1] - self.offset

    def __str__(self) -> str:
        return f"x{self.i} - x{self.j} = {_fmt(self.offset)}"


def _fmt(a: Fraction) -> str:
    return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


def make_spec(n: int, offsets: Iterable) -> ArrangementSpec:
    return ArrangementSpec(n, tuple(Fraction(a) for a in offsets))


def make_preset(name: str, n: int, a: Optional[int] = None, b: Optional[int] = None) -> ArrangementSpec:
    """Named families.

    ``interval(a, b)`` is ``[-a, b]``; ``shi(b)`` is ``[-b+1, b]``;
    ``catalan(b)`` is ``[-b, b]``; ``linial(b)`` is ``[-b+2, b]``;
    ``semiorder(b)`` is ``{-b..-1} U {1..b}``; ``braid`` is ``{0}``.
    """
    def need(val, pname):
        if val is None:
            raise SpecError(f"preset {name!r} requires parameter {pname}")
        if val < 0:
            raise SpecError(f"parameter {pname} must be non-negative")
        return val

    if name == "braid":
        offs = [0]
        params = ()
    elif name == "interval":
        a, b = need(a, "a"), need(b, "b")
        if a > b:
            raise SpecError(f"interval requires a <= b (got a={a}, b={b})")
        offs = range(-a, b + 1)
        params = (("a", a), ("b", b))
    elif name in ("shi", "catalan", "linial", "semiorder"):
        b = need(b, "b")
        if b < 1:
            raise SpecError(f"preset {name!r} requires b >= 1")
        if name == "shi":
            offs = range(-b + 1, b + 1)
        elif name == "catalan":
            offs = range(-b, b + 1)
        elif name == "linial":
            offs = range(-b + 2, b + 1)
        else:
            offs = [*range(-b, 0), *range(1, b + 1)]
        params = (("b", b),)
    else:
        raise SpecError(f"unknown preset {name!r}")
    return ArrangementSpec(n, tuple(Fraction(x) for x in offs), name, params)


def hyperplanes(spec: ArrangementSpec) -> list[Hyperplane]:
    return [
        Hyperplane(i, j, a)
        for i in range(1, spec.n + 1)
        for j in range(i + 1, spec.n + 1)
        for a in spec.offsets
    ]


def normalize_integer(spec: ArrangementSpec) -> tuple[ArrangementSpec, Fraction]:
    """Scale the offsets by the lcm of their denominators.

    ``x -> scale * x`` maps the arrangement onto the scaled one, so region
    counts, levels and the characteristic polynomial are unchanged.
    """
    scale = 1
    for a in spec.offsets:
        scale = scale * a.denominator // math.gcd(scale, a.denominator)
    if scale == 1:
        return spec, Fraction(1)
    scaled = ArrangementSpec(spec.n, tuple(a * scale for a in spec.offsets))
    return scaled, Fraction(scale)


_NUM = r"-?\d+(?:/\d+)?"


def parse_spec(text: str) -> ArrangementSpec:
    """Parse ``n=3;A={1,2}`` or ``n=4;preset=shi;b=2``.  Whitespace is ignored."""
    src = re.sub(r"\s+", "", text)
    m = re.match(r"n=(\d+);", src)
    if not m:
        raise SpecError("syntax error at position 0: expected 'n=<natural>;'")
    n = int(m.group(1))
    pos = m.end()
    rest = src[pos:]
    if rest.startswith("A={"):
        body_start = pos + 3
        close = src.find("}", body_start)
        if close < 0:
            raise SpecError(f"syntax error at position {len(src)}: missing '}}'")
        if close != len(src) - 1:
            raise SpecError(f"syntax error at position {close + 1}: trailing input")
        body = src[body_start:close]
        items = body.split(",")
        offsets = []
        at = body_start
        for item in items:
            if not re.fullmatch(_NUM, item):
                raise SpecError(f"syntax error at position {at}: bad offset {item!r}")
            val = Fraction(item)
            if val in offsets:
                raise SpecError(f"duplicate offset {item}")
            offsets.append(val)
            at += len(item) + 1
        return ArrangementSpec(n, tuple(offsets))
    if rest.startswith("preset="):
        pm = re.match(r"preset=([a-z]+)((?:;[ab]=\d+)*)$", rest)
        if not pm:
            raise SpecError(f"syntax error at position {pos}: bad preset clause")
        name = pm.group(1)
        if name not in PRESETS:
            raise SpecError(f"syntax error at position {pos + 7}: unknown preset {name!r}")
        params = dict(re.findall(r";([ab])=(\d+)", pm.group(2)))
        a = int(params["a"]) if "a" in params else None
        b = int(params["b"]) if "b" in params else None
        return make_preset(name, n, a, b)
    raise SpecError(f"syntax error at position {pos}: expected 'A={{' or 'preset='")


def format_spec(spec: ArrangementSpec) -> str:
    if spec.preset:
        extra = "".join(f";{k}={v}" for k, v in spec.params)
        return f"n={spec.n};preset={spec.preset}{extra}"
    return spec.label()
