"""Exact scalars: rationals and truncated polynomial rings Q[t]/(t^m).

Rationals are plain :class:`fractions.Fraction` values.  Elements of a
truncated ring interoperate with them, so matrices may mix both kinds of
entries freely.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

Scalar = Fraction

_SCALAR_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_scalar(text) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; the sign lives on the numerator only."""
    if isinstance(text, bool):
        raise ValueError(f"not a scalar: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"not a scalar: {text!r}")
    m = _SCALAR_RE.match(text)
    if m is None:
        raise ValueError(f"not a scalar: {text!r}")
    num, den = m.groups()
    den = int(den) if den is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), den)


def format_scalar(x) -> str:
    if isinstance(x, Trunc):
        return str(x)
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class TruncatedRing:
    """The local ring Q[t]/(t^m); its maximal ideal is generated by t."""

    __slots__ = ("m",)

    def __init__(self, m: int):
        if m < 1:
            raise ValueError("truncation order must be >= 1")
        self.m = m

    def __eq__(self, other):
        return isinstance(other, TruncatedRing) and other.m == self.m

    def __hash__(self):
        return hash(("TruncatedRing", self.m))

    def __repr__(self):
        return f"TruncatedRing({self.m})"

    def __call__(self, *coeffs) -> "Trunc":
        return Trunc(self.m, coeffs)

    def constant(self, c) -> "Trunc":
        return Trunc(self.m, (c,))

    @property
    def t(self) -> "Trunc":
        return Trunc(self.m, (0, 1))

    def zero(self) -> "Trunc":
        return Trunc(self.m, ())

    def one(self) -> "Trunc":
        return Trunc(self.m, (1,))


class Trunc:
    """An element c_0 + c_1 t + ... + c_{m-1} t^{m-1} of Q[t]/(t^m)."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs=()):
        cs = [Fraction(c) for c in coeffs][:m]
        cs += [Fraction(0)] * (m - len(cs))
        self.m = m
        self.coeffs = tuple(cs)

    @property
    def ring(self) -> TruncatedRing:
        return TruncatedRing(self.m)

    def constant_term(self) -> Fraction:
        return self.coeffs[0]

    def in_ideal(self) -> bool:
        return self.coeffs[0] == 0

    def _coerce(self, other):
        if isinstance(other, Trunc):
            if other.m != self.m:
                raise ValueError(
                    f"cannot mix Q[t]/(t^{self.m}) with Q[t]/(t^{other.m})")
            return other
        if isinstance(other, (int, Rational)):
            return Trunc(self.m, (other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Trunc(self.m, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Trunc(self.m, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Trunc(self.m, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, Trunc):
            return Trunc(self.m, [a * other for a in self.coeffs])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = [Fraction(0)] * self.m
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(self.m - i):
                b = o.coeffs[j]
                if b:
                    out[i + j] += a * b
        return Trunc(self.m, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if all(c == 0 for c in self.coeffs[1:]):
            return hash(self.coeffs[0])
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"Trunc({self.m}, {[format_scalar(c) for c in self.coeffs]})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and c == 1:
                parts.append(mono)
            elif mono and c == -1:
                parts.append("-" + mono)
            else:
                parts.append(format_scalar(c) + (("*" + mono) if mono else ""))
        return " + ".join(parts) if parts else "0"


def constant_part(x) -> Fraction:
    """Reduce modulo the maximal ideal."""
    if isinstance(x, Trunc):
        return x.constant_term()
    return Fraction(x)


def in_maximal_ideal(x) -> bool:
    if isinstance(x, Trunc):
        return x.in_ideal()
    return x == 0
