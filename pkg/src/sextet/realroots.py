"""Exact real-root counting and isolation, interlacing, Hurwitz stability.

Every decision here is made in exact arithmetic (integers, Fractions and
quadratic surds).  Floating point is only used by ``approx_complex_roots``,
which is for display and cross-checking.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .polyx import (
    Polynomial,
    PolynomialError,
    ZeroConstantTerm,
    poly_gcd,
    primitive_part,
    pseudo_remainder,
    sign_at,
    squarefree_decomposition,
)
from .surd import QuadSurd

Point = Union[int, Fraction, QuadSurd, float]  # float only for +-inf


class NotRealRooted(PolynomialError):
    pass


class DegreeGap(PolynomialError):
    pass


class NoConvergence(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# signs at points


def _sgn(v) -> int:
    return (v > 0) - (v < 0)


def _sign_at_surd(f: Polynomial, x: QuadSurd) -> int:
    acc = QuadSurd.make(0)
    for a in reversed(f.coeffs):
        acc = acc * x + a
    return acc.sign()


def sign_at_point(f: Polynomial, x: Point) -> int:
    """Sign of f(x) for a rational, a quadratic surd, or +-inf."""
    if isinstance(x, float):
        if not math.isinf(x):
            raise TypeError("finite floats are not exact points")
        if f.is_zero():
            return 0
        s = _sgn(f.lc)
        return s if (x > 0 or f.degree % 2 == 0) else -s
    if isinstance(x, QuadSurd):
        if x.is_rational:
            return sign_at(f, x.a)
        return _sign_at_surd(f, x)
    return sign_at(f, x)


# ---------------------------------------------------------------------------
# Sturm sequences


def sturm_sequence(f: Polynomial) -> list[Polynomial]:
    """Sturm chain f, f', -rem, ... with positive rescaling by content removal."""
    if f.is_zero():
        raise ValueError("Sturm sequence of the zero polynomial")
    chain = [primitive_part(f) if f.lc > 0 else -primitive_part(-f)]
    if f.degree == 0:
        return chain
    chain.append(primitive_part(f.derivative()) if f.lc > 0 else -primitive_part(-f.derivative()))
    while chain[-1].degree > 0:
        r = pseudo_remainder(chain[-2], chain[-1])
        if r.is_zero():
            break
        r = -r
        c = abs(_content(r))
        chain.append(Polynomial(a // c for a in r.coeffs) if c > 1 else r)
    return chain


def _content(f: Polynomial) -> int:
    from math import gcd

    g = 0
    for a in f.coeffs:
        g = gcd(g, a)
    return g


def sign_variations(chain: Sequence[Polynomial], x: Point) -> int:
    prev = 0
    count = 0
    for p in chain:
        s = sign_at_point(p, x)
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


NEG_INF = float("-inf")
POS_INF = float("inf")


def _chain_for(f: Polynomial) -> list[Polynomial]:
    return sturm_sequence(f)


def sturm_count(f: Polynomial, lo: Point, hi: Point, chain: Optional[list[Polynomial]] = None) -> int:
    """Number of distinct real roots of f in (lo, hi]."""
    if f.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    if chain is None:
        chain = _chain_for(f)
    if _cmp(lo, hi) >= 0:
        raise ValueError("need lo < hi")
    return sign_variations(chain, lo) - sign_variations(chain, hi)


def _cmp(x: Point, y: Point) -> int:
    if isinstance(x, float) or isinstance(y, float):
        fx = x if isinstance(x, float) else 0.0
        fy = y if isinstance(y, float) else 0.0
        if isinstance(x, float) and isinstance(y, float):
            return _sgn(fx - fy) if fx != fy else 0
        if isinstance(x, float):
            return -1 if x < 0 else 1
        return 1 if y < 0 else -1
    if isinstance(x, QuadSurd) or isinstance(y, QuadSurd):
        from .surd import compare

        return compare(x, y)
    return _sgn(Fraction(x) - Fraction(y))


def real_root_count(f: Polynomial) -> int:
    """Number of distinct real roots."""
    if f.degree <= 0:
        return 0
    return sturm_count(f, NEG_INF, POS_INF)


def cauchy_bound(f: Polynomial) -> Fraction:
    """1 + max|a_i| / |a_n|; every root has modulus below it."""
    lc = abs(f.lc)
    return 1 + Fraction(max(abs(a) for a in f.coeffs[:-1]) if f.degree > 0 else 0, lc)


def _iroot_ceil(num: int, den: int, k: int) -> int:
    """Smallest integer t >= 0 with t**k * den >= num."""
    if num <= 0:
        return 0
    t = int((num / den) ** (1.0 / k)) if num.bit_length() - den.bit_length() < 1000 else 1 << ((num.bit_length() - den.bit_length()) // k + 1)
    t = max(t - 2, 0)
    while t**k * den < num:
        t += 1
    return t


def root_bound(f: Polynomial) -> Fraction:
    """Strict bound on root moduli: min of Cauchy's bound and Fujiwara's plus one.

    Fujiwara's bound 2*max |a_{n-k}/a_n|^(1/k) can be attained, hence the +1.
    """
    n, lc = f.degree, abs(f.lc)
    fuji = 0
    for k in range(1, n + 1):
        a = abs(f.coeffs[n - k])
        if a:
            # the constant term carries the extra factor 1/2 in Fujiwara's bound
            num, den = (a, 2 * lc) if k == n else (a, lc)
            fuji = max(fuji, _iroot_ceil(num, den, k))
    return min(cauchy_bound(f), Fraction(2 * fuji + 1))


def is_real_rooted(f: Polynomial) -> bool:
    """True iff every complex zero of f is real (multiplicities counted)."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f.degree <= 0:
        return True
    total = 0
    for g, mult in squarefree_decomposition(f):
        total += mult * real_root_count(g)
    return total == f.degree


# ---------------------------------------------------------------------------
# isolation


@dataclass(frozen=True)
class RootInterval:
    lo: Fraction
    hi: Fraction
    mult: int = 1

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def to_json(self) -> dict:
        return {"lo": _rat_str(self.lo), "hi": _rat_str(self.hi), "mult": self.mult}


def _rat_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass
class RootIsolation:
    """Disjoint half-open rational intervals (lo, hi], one distinct real root each."""

    intervals: list[RootInterval]
    nonreal_count: int
    degree: int

    def __post_init__(self):
        if sum(iv.mult for iv in self.intervals) + self.nonreal_count != self.degree:
            raise AssertionError("multiplicities and non-real count do not add up to the degree")
        for a, b in zip(self.intervals, self.intervals[1:]):
            if a.hi > b.lo:
                raise AssertionError("isolating intervals overlap")

    @property
    def real_count(self) -> int:
        return sum(iv.mult for iv in self.intervals)

    def midpoints(self) -> list[float]:
        return [float(iv.mid) for iv in self.intervals]

    def to_json(self) -> list[dict]:
        return [iv.to_json() for iv in self.intervals]


class _Isolator:
    """Bisection on a squarefree polynomial, using Sturm counts only when needed."""

    def __init__(self, g: Polynomial):
        self.g = g
        self._chain: Optional[list[Polynomial]] = None

    @property
    def chain(self) -> list[Polynomial]:
        if self._chain is None:
            self._chain = sturm_sequence(self.g)
        return self._chain

    def count(self, lo: Fraction, hi: Fraction) -> int:
        return sign_variations(self.chain, lo) - sign_variations(self.chain, hi)

    def isolate(self) -> list[tuple[Fraction, Fraction]]:
        g = self.g
        if g.degree <= 0:
            return []
        b = root_bound(g)
        out: list[tuple[Fraction, Fraction]] = []
        stack = [(-b, b, self.count(-b, b))]
        while stack:
            lo, hi, c = stack.pop()
            if c == 0:
                continue
            if c == 1:
                out.append((lo, hi))
                continue
            mid = (lo + hi) / 2
            cl = self.count(lo, mid)
            stack.append((mid, hi, c - cl))
            stack.append((lo, mid, cl))
        out.sort()
        return out

    def refine(self, lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
        """Shrink (lo, hi], which holds exactly one root, below the given width."""
        g = self.g
        s_hi = sign_at(g, hi)
        if s_hi == 0:
            return (hi - min(width, hi - lo) / 2, hi)
        s_lo = sign_at(g, lo)
        while hi - lo >= width:
            mid = (lo + hi) / 2
            s_mid = sign_at(g, mid)
            if s_mid == 0:
                return (mid - min(width, mid - lo) / 2, mid)
            if s_lo != 0 and s_lo != s_hi:
                if s_mid == s_hi:
                    hi, s_hi = mid, s_mid
                else:
                    lo, s_lo = mid, s_mid
            elif self.count(lo, mid) == 1:
                hi, s_hi = mid, s_mid
            else:
                lo, s_lo = mid, s_mid
        return (lo, hi)


def isolate_roots(f: Polynomial, width: Union[Fraction, int, str] = Fraction(1, 2**20)) -> RootIsolation:
    """Isolate every distinct real root of f in an interval narrower than width."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    width = Fraction(width)
    found: list[tuple[Fraction, Fraction, int, _Isolator]] = []
    for g, mult in squarefree_decomposition(f):
        iso = _Isolator(g)
        for lo, hi in iso.isolate():
            lo, hi = iso.refine(lo, hi, width)
            found.append((lo, hi, mult, iso))
    found = _separate(found)
    intervals = [RootInterval(lo, hi, m) for lo, hi, m, _ in found]
    real = sum(iv.mult for iv in intervals)
    return RootIsolation(intervals, f.degree - real, f.degree)


def _separate(items: list) -> list:
    """Refine intervals belonging to different factors until they are disjoint."""
    items = sorted(items, key=lambda t: (t[0], t[1]))
    changed = True
    while changed:
        changed = False
        for i in range(len(items) - 1):
            a, b = items[i], items[i + 1]
            if a[1] > b[0]:
                a2 = a[3].refine(a[0], a[1], (a[1] - a[0]) / 2)
                b2 = b[3].refine(b[0], b[1], (b[1] - b[0]) / 2)
                items[i] = (a2[0], a2[1], a[2], a[3])
                items[i + 1] = (b2[0], b2[1], b[2], b[3])
                changed = True
        items.sort(key=lambda t: (t[0], t[1]))
    return items


def roots_in_open_interval(f: Polynomial, lo: Point, hi: Point) -> int:
    """Distinct roots of f strictly inside (lo, hi), endpoints may be surds."""
    g = _sqf(f)
    chain = sturm_sequence(g)
    n = sturm_count(g, lo, hi, chain)
    if sign_at_point(g, hi) == 0:
        n -= 1
    return n


def _sqf(f: Polynomial) -> Polynomial:
    g = poly_gcd(f, f.derivative())
    if g.degree <= 0:
        return f
    from .polyx import _qdiv

    return _qdiv(f, g)


def is_squarefree(f: Polynomial) -> bool:
    return f.degree <= 0 or poly_gcd(f, f.derivative()).degree == 0


# ---------------------------------------------------------------------------
# interlacing


def _root_points(f: Polynomial, g: Polynomial):
    """Merged ascending list of (mult in f, mult in g) over all distinct real roots."""
    items = []
    for poly, tag in ((f, 0), (g, 1)):
        for q, mult in squarefree_decomposition(poly):
            iso = _Isolator(q)
            for lo, hi in iso.isolate():
                items.append([lo, hi, tag, mult, iso])
    common = poly_gcd(f, g)
    common_iso = _Isolator(_sqf(common)) if common.degree > 0 else None

    def shared(a, b) -> bool:
        if common_iso is None or a[2] == b[2]:
            return False
        lo, hi = max(a[0], b[0]), min(a[1], b[1])
        if lo >= hi:
            return False
        return common_iso.count(lo, hi) >= 1 and a[4].count(lo, hi) == 1 and b[4].count(lo, hi) == 1

    # refine until every overlapping pair is either disjoint or the same shared root
    while True:
        items.sort(key=lambda t: (t[0], t[1]))
        clash = False
        for i in range(len(items)):
            for j in range(i + 1, len(items)):
                a, b = items[i], items[j]
                if b[0] >= a[1]:
                    break
                if shared(a, b):
                    continue
                clash = True
                for t in (a, b):
                    t[0], t[1] = t[4].refine(t[0], t[1], (t[1] - t[0]) / 2)
        if not clash:
            break
    points: list[list[int]] = []
    used = [False] * len(items)
    for i, a in enumerate(items):
        if used[i]:
            continue
        mf = [0, 0]
        mf[a[2]] += a[3]
        for j in range(i + 1, len(items)):
            b = items[j]
            if b[0] >= a[1]:
                break
            if not used[j] and shared(a, b):
                mf[b[2]] += b[3]
                used[j] = True
        used[i] = True
        points.append(mf)
    return points


def interlaces(g: Polynomial, f: Polynomial) -> bool:
    """Decide g ⪯ f: real roots alternate with the largest root belonging to f."""
    gap = f.degree - g.degree
    if gap not in (0, 1):
        raise DegreeGap(f"deg f - deg g = {gap}, expected 0 or 1")
    for p in (f, g):
        if not is_real_rooted(p):
            raise NotRealRooted(f"{p} has non-real zeros")
    seq_f: list[int] = []
    seq_g: list[int] = []
    for idx, (mf, mg) in enumerate(_root_points(f, g)):
        seq_f += [idx] * mf
        seq_g += [idx] * mg
    # merged chain in ascending order, weak inequalities on point indices
    if gap == 1:
        chain = [seq_f[0]] if seq_f else []
        for a, b in zip(seq_g, seq_f[1:]):
            chain += [a, b]
    else:
        chain = []
        for a, b in zip(seq_g, seq_f):
            chain += [a, b]
    return all(x <= y for x, y in zip(chain, chain[1:]))


# ---------------------------------------------------------------------------
# Hurwitz stability


def routh_first_column(f: Polynomial) -> list[Fraction]:
    """First column of the Routh array; stops at the first zero pivot."""
    c = list(reversed(f.coeffs))  # highest degree first
    row0 = [Fraction(v) for v in c[0::2]]
    row1 = [Fraction(v) for v in c[1::2]]
    col = [row0[0]]
    n = f.degree
    prev, cur = row0, row1
    for _ in range(n):
        if not cur or all(v == 0 for v in cur):
            col.append(Fraction(0))
            break
        col.append(cur[0])
        if cur[0] == 0:
            break
        nxt = []
        for j in range(len(prev) - 1):
            a = prev[j + 1]
            b = cur[j + 1] if j + 1 < len(cur) else Fraction(0)
            nxt.append((cur[0] * a - prev[0] * b) / cur[0])
        prev, cur = cur, nxt
        if len(col) == n + 1:
            break
    return col


@dataclass
class HurwitzReport:
    stable: bool
    imaginary_axis_roots: bool
    first_column: list[Fraction] = field(default_factory=list)


def imaginary_axis_polynomial(f: Polynomial) -> Polynomial:
    """gcd of Re f(iy) and Im f(iy); its real roots y give roots iy of f."""
    re, im = [0] * (f.degree + 1), [0] * (f.degree + 1)
    for k, a in enumerate(f.coeffs):
        s = (1, 1, -1, -1)[k % 4]
        if k % 2 == 0:
            re[k] = s * a
        else:
            im[k] = s * a
    return poly_gcd(Polynomial(re), Polynomial(im))


def hurwitz_report(f: Polynomial) -> HurwitzReport:
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f[0] == 0:
        raise ZeroConstantTerm("root at the origin; not stable")
    if f.lc < 0:
        f = -f
    col = routh_first_column(f)
    stable = len(col) == f.degree + 1 and all(v > 0 for v in col)
    h = imaginary_axis_polynomial(f)
    axis = h.degree > 0 and real_root_count(h) > 0
    return HurwitzReport(stable=stable, imaginary_axis_roots=axis, first_column=col)


def hurwitz_stable(f: Polynomial) -> bool:
    """All complex roots strictly in the left half plane (exact Routh test)."""
    return hurwitz_report(f).stable


# ---------------------------------------------------------------------------
# approximate complex roots (Aberth-Ehrlich)


@dataclass(frozen=True)
class ComplexApprox:
    re: float
    im: float
    residual: float

    @property
    def z(self) -> complex:
        return complex(self.re, self.im)

    def to_json(self) -> dict:
        return {"re": self.re, "im": self.im, "residual": self.residual}


def _horner_with_derivative(c: Sequence[float], z: complex) -> tuple[complex, complex]:
    p = c[-1]
    dp = 0j
    for a in reversed(c[:-1]):
        dp = dp * z + p
        p = p * z + a
    return p, dp


def _scaled_coeffs(f: Polynomial) -> list[float]:
    """Coefficients divided by a power of two so the largest one fits a float."""
    big = max(abs(a) for a in f.coeffs)
    shift = max(big.bit_length() - 1000, 0)
    return [a / (1 << shift) for a in f.coeffs]


def approx_complex_roots(f: Polynomial, tol: float = 1e-10, max_iter: int = 500) -> list[ComplexApprox]:
    """All deg f complex roots by simultaneous Aberth iteration.

    The residual is the relative backward error |f(z)| / sum |a_k| |z|^k.
    """
    n = f.degree
    if n < 1:
        return []
    c = _scaled_coeffs(f)
    lead = c[-1]
    mono = [a / lead for a in c]
    # initial guesses on a circle of radius from the coefficient bound, offset angle
    radius = max(abs(a) ** (1.0 / (n - k)) for k, a in enumerate(mono[:-1]) if a) if any(mono[:-1]) else 1.0
    radius = max(min(radius, 1e150), 1e-150)
    zs = [radius * cmath.exp(1j * (2 * math.pi * k / n + 0.4)) for k in range(n)]
    absc = [abs(a) for a in mono]
    done = [False] * n
    for _ in range(max_iter):
        converged = True
        for i in range(n):
            if done[i]:
                continue
            z = zs[i]
            p, dp = _horner_with_derivative(mono, z)
            if p == 0:
                done[i] = True
                continue
            ratio = p / dp if dp != 0 else complex(1e-8)
            s = sum(1.0 / (z - zs[j]) for j in range(n) if j != i and z != zs[j])
            w = ratio / (1 - ratio * s)
            zs[i] = z - w
            if abs(w) <= 1e-15 * max(abs(zs[i]), 1e-300):
                done[i] = True
            else:
                converged = False
        if converged:
            break
    out = []
    for z in zs:
        p, _ = _horner_with_derivative(mono, z)
        scale, az = 0.0, abs(z)
        pw = 1.0
        for a in absc:
            scale += a * pw
            pw *= az
        res = abs(p) / scale if scale else abs(p)
        if res > tol:
            # one polishing Newton step before giving up
            p, dp = _horner_with_derivative(mono, z)
            if dp != 0:
                z = z - p / dp
                p, _ = _horner_with_derivative(mono, z)
                res = abs(p) / scale if scale else abs(p)
        if res > tol:
            raise NoConvergence(f"root {z} residual {res:.3g} above {tol:g}")
        out.append(ComplexApprox(z.real, z.imag, res))
    out.sort(key=lambda r: (r.re, r.im))
    return out
