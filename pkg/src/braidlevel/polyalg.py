"""Dense univariate polynomials over the rationals.

``RatPoly`` stores power-basis coefficients (index ``i`` is the coefficient
of ``t**i``) as ``Fraction`` values with trailing zeros stripped.  The
falling-factorial basis ``(t)_k = t(t-1)...(t-k+1)`` and the binomial basis
``C(t, k) = (t)_k / k!`` are reached through Stirling-number tables.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Literal, Sequence, Union

from braidlevel.combinat import stirling_first, stirling_second

Rational = Union[int, Fraction]
Basis = Literal["power", "falling", "binomial"]
BASES = ("power", "falling", "binomial")


def _strip(coeffs: Iterable[Rational]) -> tuple[Fraction, ...]:
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class RatPoly:
    coeffs: tuple[Fraction, ...] = ()

    def __init__(self, coeffs: Iterable[Rational] = ()):
        object.__setattr__(self, "coeffs", _strip(coeffs))

    @classmethod
    def constant(cls, c: Rational) -> "RatPoly":
        return cls([c])

    @classmethod
    def monomial(cls, deg: int, c: Rational = 1) -> "RatPoly":
        return cls([0] * deg + [c])

    @classmethod
    def t(cls) -> "RatPoly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "RatPoly | Rational") -> "RatPoly":
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "RatPoly":
        return RatPoly(-c for c in self.coeffs)

    def __sub__(self, other: "RatPoly | Rational") -> "RatPoly":
        return self + (-_lift(other))

    def __rsub__(self, other: Rational) -> "RatPoly":
        return _lift(other) - self

    def __mul__(self, other: "RatPoly | Rational") -> "RatPoly":
        other = _lift(other)
        if not self.coeffs or not other.coeffs:
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "RatPoly":
        result = RatPoly([1])
        for _ in range(e):
            result = result * self
        return result

    def __call__(self, x):
        """Horner evaluation; exact for rational ``x``."""
        acc = Fraction(0) if not isinstance(x, RatPoly) else RatPoly()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        lead = other.lead
        for shift in range(len(rem) - dq - 1, -1, -1):
            c = rem[shift + dq] / lead
            quot[shift] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[shift + j] -= c * b
        return RatPoly(quot), RatPoly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other: "RatPoly") -> "RatPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "RatPoly") -> "RatPoly":
        return self.divmod(other)[1]

    def derivative(self) -> "RatPoly":
        return RatPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> "RatPoly":
        if self.is_zero():
            return self
        return RatPoly(c / self.lead for c in self.coeffs)

    def shift(self, c: Rational) -> "RatPoly":
        """Return ``p(t + c)``."""
        return self(RatPoly([c, 1]))

    def compose(self, q: "RatPoly") -> "RatPoly":
        """Return ``p(q(t))``."""
        return self(q)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_json(self) -> str:
        return json.dumps(to_strings(self))

    @classmethod
    def from_json(cls, text: str) -> "RatPoly":
        return from_strings(json.loads(text))

    def __repr__(self) -> str:
        return f"RatPoly({format_poly(self)})"


def _lift(x: "RatPoly | Rational") -> RatPoly:
    return x if isinstance(x, RatPoly) else RatPoly([x])


def frac_str(x: Rational) -> str:
    """``"num/den"`` with the denominator omitted when it is 1."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def to_strings(p: RatPoly) -> list[str]:
    return [frac_str(c) for c in p.coeffs]


def from_strings(items: Sequence[str]) -> RatPoly:
    return RatPoly(Fraction(s) for s in items)


def format_poly(p: RatPoly, var: str = "t") -> str:
    if p.is_zero():
        return "0"
    terms = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = frac_str(mag)
        else:
            power = var if i == 1 else f"{var}^{i}"
            body = power if mag == 1 else f"{frac_str(mag)}*{power}"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def poly_arith(p: RatPoly, q: RatPoly, op: str) -> RatPoly:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def poly_eval(p: RatPoly, x: Rational) -> Fraction:
    return p(Fraction(x))


def falling_factorial(n: int, shift: Rational = 0) -> RatPoly:
    """``(t - shift)_n``, i.e. ``(t-shift)(t-shift-1)...(t-shift-n+1)``."""
    result = RatPoly([1])
    for i in range(n):
        result = result * RatPoly([-Fraction(shift) - i, 1])
    return result


def binomial_poly(n: int, shift: Rational = 0) -> RatPoly:
    """``C(t - shift, n)`` as a polynomial in ``t``."""
    return falling_factorial(n, shift) * Fraction(1, factorial(n))


@dataclass(frozen=True)
class BasisCoeffs:
    basis: str
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))


def to_basis(p: RatPoly, basis: str) -> BasisCoeffs:
    """Coefficients of ``p`` in the requested basis (length ``deg + 1``)."""
    if basis == "power":
        return BasisCoeffs("power", p.coeffs)
    # t^i = sum_k S(i,k) (t)_k
    falling = [Fraction(0)] * len(p.coeffs)
    for i, c in enumerate(p.coeffs):
        if c:
            for k in range(i + 1):
                falling[k] += c * stirling_second(i, k)
    if basis == "falling":
        return BasisCoeffs("falling", falling)
    if basis == "binomial":
        return BasisCoeffs("binomial", [c * factorial(k) for k, c in enumerate(falling)])
    raise ValueError(f"unknown basis {basis!r}")


def from_basis(c: BasisCoeffs) -> RatPoly:
    if c.basis == "power":
        return RatPoly(c.coeffs)
    if c.basis == "binomial":
        falling = [x / factorial(k) for k, x in enumerate(c.coeffs)]
    else:
        falling = list(c.coeffs)
    # (t)_k = sum_i s(k,i) t^i
    out = [Fraction(0)] * len(falling)
    for k, x in enumerate(falling):
        if x:
            for i in range(k + 1):
                out[i] += x * stirling_first(k, i)
    return RatPoly(out)


def lagrange_interpolate(points: Sequence[tuple[Rational, Rational]]) -> RatPoly:
    """Unique polynomial of degree < len(points) through ``points``."""
    if not points:
        raise ValueError("at least one interpolation node is required")
    xs = [Fraction(x) for x, _ in points]
    ys = [Fraction(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise ValueError("degenerate interpolation node")
    # Newton divided differences
    n = len(xs)
    dd = list(ys)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    result = RatPoly([dd[-1]])
    for i in range(n - 2, -1, -1):
        result = result * RatPoly([-xs[i], 1]) + dd[i]
    return result


def poly_compose_shift(p: RatPoly, a: Rational, s: str = "+") -> RatPoly:
    """``p(t + a)`` for ``s == "+"`` and ``p(t - a)`` for ``s == "-"``."""
    if s not in ("+", "-"):
        raise ValueError("shift sign must be '+' or '-'")
    return p.shift(a if s == "+" else -Fraction(a))
