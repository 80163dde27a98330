"""Exact real quadratic surds a + b*sqrt(d) with rational a, b.

Values with different radicands can still be compared exactly; arithmetic
between two surds needs a common radicand (or one of them rational).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Union

Rat = Union[int, Fraction]


def _squarefree_split(d: int) -> tuple[int, int]:
    """d = s*s*r with r squarefree; returns (s, r)."""
    if d <= 0:
        raise ValueError("radicand must be positive")
    s, r = 1, 1
    p = 2
    while p * p <= d:
        e = 0
        while d % p == 0:
            d //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            r *= p
        p += 1
    return s, r * d


def _sgn(v) -> int:
    return (v > 0) - (v < 0)


def _sign_a_b_sqrt(a: Fraction, b: Fraction, d: int) -> int:
    """Sign of a + b*sqrt(d), d > 0."""
    sa, sb = _sgn(a), _sgn(b)
    if sb == 0 or d == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: compare a^2 with b^2 d
    return sa * _sgn(a * a - b * b * d)


@dataclass(frozen=True)
class QuadSurd:
    """a + b*sqrt(d); d is squarefree, and d == 1 forces b == 0."""

    a: Fraction
    b: Fraction = Fraction(0)
    d: int = 1

    @classmethod
    def make(cls, a: Rat = 0, b: Rat = 0, d: int = 1) -> "QuadSurd":
        a, b = Fraction(a), Fraction(b)
        if b == 0 or d == 0:
            return cls(a, Fraction(0), 1)
        s, r = _squarefree_split(d)
        b *= s
        if r == 1:
            return cls(a + b, Fraction(0), 1)
        return cls(a, b, r)

    @classmethod
    def sqrt(cls, d: int) -> "QuadSurd":
        return cls.make(0, 1, d)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def _common(self, other) -> tuple["QuadSurd", "QuadSurd", int]:
        other = _as_surd(other)
        if self.b == 0:
            return QuadSurd(self.a, Fraction(0), other.d), other, other.d
        if other.b == 0:
            return self, QuadSurd(other.a, Fraction(0), self.d), self.d
        if self.d != other.d:
            raise ValueError(f"incompatible radicands {self.d} and {other.d}")
        return self, other, self.d

    def __add__(self, other):
        x, y, d = self._common(other)
        return QuadSurd.make(x.a + y.a, x.b + y.b, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadSurd(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-_as_surd(other))

    def __rsub__(self, other):
        return _as_surd(other) - self

    def __mul__(self, other):
        x, y, d = self._common(other)
        return QuadSurd.make(x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a, d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadSurd":
        return QuadSurd(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def __truediv__(self, other):
        other = _as_surd(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero surd")
        num = self * other.conjugate()
        return QuadSurd.make(num.a / n, num.b / n, num.d)

    def __rtruediv__(self, other):
        return _as_surd(other) / self

    def __pow__(self, e: int):
        out = QuadSurd.make(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def sign(self) -> int:
        return _sign_a_b_sqrt(self.a, self.b, self.d)

    def __eq__(self, other):
        try:
            return compare(self, other) == 0
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __lt__(self, other):
        return compare(self, other) < 0

    def __le__(self, other):
        return compare(self, other) <= 0

    def __gt__(self, other):
        return compare(self, other) > 0

    def __ge__(self, other):
        return compare(self, other) >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * self.d**0.5

    def floor(self) -> int:
        """Exact floor."""
        if self.b == 0:
            return self.a.numerator // self.a.denominator
        m = self.a.denominator * self.b.denominator
        n1 = int(self.a * m)
        n2 = int(self.b * m)
        # n2*sqrt(d) is irrational here, so floor((n1 + n2*sqrt(d)) / m) == (n1 + floor(n2*sqrt(d))) // m
        r = isqrt(n2 * n2 * self.d)
        fl = r if n2 > 0 else -r - 1
        return (n1 + fl) // m

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a}{'+' if self.b >= 0 else '-'}{abs(self.b)}*sqrt({self.d})"

    def __repr__(self):
        return f"QuadSurd({self})"

    def to_json(self) -> dict:
        return {"a": str(self.a), "b": str(self.b), "d": self.d, "approx": float(self)}


def _as_surd(v) -> QuadSurd:
    if isinstance(v, QuadSurd):
        return v
    if isinstance(v, (int, Fraction)):
        return QuadSurd(Fraction(v), Fraction(0), 1)
    raise TypeError(f"cannot treat {type(v).__name__} as a surd")


def compare(x, y) -> int:
    """Exact sign of x - y; the two radicands may differ."""
    x, y = _as_surd(x), _as_surd(y)
    if x.b == 0 or y.b == 0 or x.d == y.d:
        return (x - y).sign()
    # r + s, s = b1 sqrt(d1) - b2 sqrt(d2)
    r = x.a - y.a
    b1, d1, b2, d2 = x.b, x.d, -y.b, y.d
    if _sgn(b1) == _sgn(b2):
        ss = _sgn(b1)
    else:
        ss = _sgn(b1) * _sgn(b1 * b1 * d1 - b2 * b2 * d2)
    sr = _sgn(r)
    if sr == 0:
        return ss
    if ss == 0 or ss == sr:
        return sr
    # opposite signs: compare r^2 with s^2 = b1^2 d1 + b2^2 d2 + 2 b1 b2 sqrt(d1 d2)
    s2, rad = _squarefree_split(d1 * d2)
    rest = r * r - b1 * b1 * d1 - b2 * b2 * d2
    if rad == 1:
        diff = _sgn(rest - 2 * b1 * b2 * s2)
    else:
        diff = _sign_a_b_sqrt(rest, -2 * b1 * b2 * s2, rad)
    if diff == 0:
        return 0
    return sr if diff > 0 else ss


def quadratic_roots(a: int, b: int, c: int) -> list[QuadSurd]:
    """Real roots of a x^2 + b x + c (a != 0), ascending, as exact surds."""
    if a == 0:
        raise ValueError("not a quadratic")
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    if disc == 0:
        return [QuadSurd.make(Fraction(-b, 2 * a))]
    r1 = QuadSurd.make(Fraction(-b, 2 * a), Fraction(-1, 2 * a), disc)
    r2 = QuadSurd.make(Fraction(-b, 2 * a), Fraction(1, 2 * a), disc)
    return sorted([r1, r2])
