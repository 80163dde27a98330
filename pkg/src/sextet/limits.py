"""Where the zeros of the recurrence families live.

Exact limit sets of order-2 recurrences (discriminant <= 0), the explicit
trigonometric roots of the pyrene polynomials, density witnesses on the
negative axis, and the normality and resonance-energy statistics.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from typing import Optional, Union

from .families import family, pyrene, recurrence_of
from .polyx import Polynomial, PolynomialError, evaluate, mean_index, squarefree_decomposition
from .realroots import (
    NEG_INF,
    POS_INF,
    _cmp,
    isolate_roots,
    is_real_rooted,
    sign_at_point,
)
from .surd import QuadSurd, compare, quadratic_roots


class DegenerateRecurrence(PolynomialError):
    pass


class BudgetExceeded(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# exact endpoints


@dataclass
class AlgebraicRoot:
    """The unique root of a squarefree integer polynomial inside (lo, hi]."""

    poly: Polynomial
    lo: Fraction
    hi: Fraction

    def _contains(self, v) -> bool:
        return _cmp(self.lo, v) < 0 and _cmp(v, self.hi) <= 0

    def _bisect(self) -> None:
        mid = (self.lo + self.hi) / 2
        if sign_at_point(self.poly, mid) == 0:
            self.lo, self.hi = mid - (self.hi - self.lo) / 4, mid
            return
        if sign_at_point(self.poly, mid) * sign_at_point(self.poly, self.hi) <= 0:
            self.lo = mid
        else:
            self.hi = mid

    def compare(self, v) -> int:
        """Exact sign of (root - v) for rational or surd v (must not be another root of poly unless equal)."""
        if isinstance(v, AlgebraicRoot):
            while True:
                if _cmp(self.hi, v.lo) <= 0:
                    return -1
                if _cmp(v.hi, self.lo) <= 0:
                    return 1
                if self.poly == v.poly and self.lo == v.lo and self.hi == v.hi:
                    return 0
                self._bisect()
                v._bisect()
        if self._contains(v) and sign_at_point(self.poly, v) == 0:
            return 0
        while self._contains(v):
            self._bisect()
        return 1 if _cmp(self.lo, v) >= 0 else -1

    def __float__(self):
        lo, hi = self.lo, self.hi
        while hi - lo > Fraction(1, 10**15) * max(1, abs(hi)):
            self._bisect()
            lo, hi = self.lo, self.hi
        return float(hi)

    def __str__(self):
        return f"root of {self.poly} in ({self.lo}, {self.hi}]"

    def to_json(self) -> dict:
        return {"poly": self.poly.to_json(), "lo": str(self.lo), "hi": str(self.hi), "approx": float(self)}


Endpoint = Union[Fraction, QuadSurd, AlgebraicRoot, float]


def _cmp_any(x, y) -> int:
    if isinstance(x, float) or isinstance(y, float):
        # only infinities are floats here
        fx = x if isinstance(x, float) else 0.0
        fy = y if isinstance(y, float) else 0.0
        if isinstance(x, float) and isinstance(y, float):
            return (fx > fy) - (fx < fy)
        if isinstance(x, float):
            return 1 if fx > 0 else -1
        return -1 if fy > 0 else 1
    if isinstance(x, AlgebraicRoot):
        return x.compare(y)
    if isinstance(y, AlgebraicRoot):
        return -y.compare(x)
    return compare(x, y)


def _endpoint_json(e):
    if isinstance(e, float):
        return "-inf" if e < 0 else "inf"
    if isinstance(e, QuadSurd):
        return e.to_json()
    if isinstance(e, AlgebraicRoot):
        return e.to_json()
    return str(e)


def _endpoint_str(e) -> str:
    if isinstance(e, float):
        return "-inf" if e < 0 else "inf"
    return str(e)


@dataclass
class Interval:
    lo: Endpoint
    hi: Endpoint
    lo_closed: bool = True
    hi_closed: bool = True

    def contains(self, x) -> bool:
        c_lo = _cmp_any(x, self.lo)
        c_hi = _cmp_any(x, self.hi)
        return (c_lo > 0 or (c_lo == 0 and self.lo_closed)) and (c_hi < 0 or (c_hi == 0 and self.hi_closed))

    def __str__(self):
        return (
            ("[" if self.lo_closed else "(")
            + f"{_endpoint_str(self.lo)}, {_endpoint_str(self.hi)}"
            + ("]" if self.hi_closed else ")")
        )

    def to_json(self) -> dict:
        return {
            "lo": _endpoint_json(self.lo),
            "hi": _endpoint_json(self.hi),
            "lo_closed": self.lo_closed,
            "hi_closed": self.hi_closed,
        }


@dataclass
class IntervalSet:
    intervals: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    def contains(self, x) -> bool:
        return any(iv.contains(x) for iv in self.intervals)

    def __str__(self):
        if not self.intervals:
            return "{}"
        return " U ".join(str(iv) for iv in self.intervals)

    def to_json(self) -> dict:
        return {"intervals": [iv.to_json() for iv in self.intervals], "notes": self.notes}


# ---------------------------------------------------------------------------
# limit sets


def _distinct_real_roots(f: Polynomial) -> list[tuple[Endpoint, int]]:
    """Distinct real roots with multiplicities, ascending; surds where the factor is at most quadratic."""
    out: list[tuple[Endpoint, int]] = []
    for g, k in squarefree_decomposition(f):
        c = g.coeffs
        if g.degree == 1:
            out.append((Fraction(-c[0], c[1]), k))
        elif g.degree == 2:
            out.extend((r, k) for r in quadratic_roots(c[2], c[1], c[0]))
        else:
            for iv in isolate_roots(g, Fraction(1, 2**10)).intervals:
                out.append((AlgebraicRoot(g, iv.lo, iv.hi), k))
    out.sort(key=cmp_to_key(lambda p, q: _cmp_any(p[0], q[0])))
    return out


def nonpositive_set(f: Polynomial) -> IntervalSet:
    """Exact {x real : f(x) <= 0}."""
    if f.is_zero():
        raise DegenerateRecurrence("polynomial is identically zero")
    roots = _distinct_real_roots(f)
    lc_sign = 1 if f.lc > 0 else -1
    # sign on the gap after root i is lc_sign * (-1)^(multiplicity of the roots above it)
    above = [0] * (len(roots) + 1)
    for i in range(len(roots) - 1, -1, -1):
        above[i] = above[i + 1] + roots[i][1]
    gap_neg = [lc_sign * (-1) ** above[i] < 0 for i in range(len(roots) + 1)]
    # gap i lies between root i-1 and root i
    out: list[Interval] = []
    lo: Optional[Endpoint] = NEG_INF if gap_neg[0] else None
    lo_closed = False
    for i, (r, _) in enumerate(roots):
        if lo is None:
            lo, lo_closed = r, True
        if not gap_neg[i + 1]:
            out.append(Interval(lo, r, lo_closed, True))
            lo = None
    if lo is not None:
        out.append(Interval(lo, POS_INF, lo_closed, False))
    return IntervalSet(out)


def discriminant(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * a + 4 * b


def bkw_nondegeneracy(
    a: Polynomial, b: Polynomial, f0: Polynomial, f1: Polynomial, samples: int = 5, seed: int = 0
) -> dict:
    """Numerical check at random rational points that both Binet coefficients are nonzero
    and the two characteristic roots differ in modulus somewhere."""
    rng = random.Random(seed)
    alpha_nonzero = [False, False]
    modulus_split = False
    points = []
    for _ in range(samples):
        x = Fraction(rng.randint(-1000, 1000), rng.randint(1, 97))
        points.append(str(x))
        av, bv = float(evaluate(a, x)), float(evaluate(b, x))
        disc = complex(av * av + 4 * bv)
        s = disc**0.5
        l1, l2 = (av + s) / 2, (av - s) / 2
        if abs(l1 - l2) < 1e-12:
            continue
        v0, v1 = float(evaluate(f0, x)), float(evaluate(f1, x))
        al1 = (v1 - l2 * v0) / (l1 - l2)
        al2 = (l1 * v0 - v1) / (l1 - l2)
        scale = max(1.0, abs(v0), abs(v1))
        alpha_nonzero[0] |= abs(al1) > 1e-9 * scale
        alpha_nonzero[1] |= abs(al2) > 1e-9 * scale
        modulus_split |= abs(abs(l1) - abs(l2)) > 1e-9 * max(1.0, abs(l1))
    ok = all(alpha_nonzero) and modulus_split
    return {
        "ok": ok,
        "points": points,
        "alpha_nonzero": alpha_nonzero,
        "modulus_split": modulus_split,
    }


def bkw_limit_set(
    a: Polynomial,
    b: Polynomial,
    f0: Optional[Polynomial] = None,
    f1: Optional[Polynomial] = None,
) -> IntervalSet:
    """Real limit points of zeros of f_n = a f_{n-1} + b f_{n-2}: the set where a^2 + 4b <= 0."""
    if a.degree < 1 and b.degree < 1:
        raise DegenerateRecurrence("recurrence has constant coefficients")
    d = discriminant(a, b)
    if d.is_zero():
        raise DegenerateRecurrence("discriminant vanishes identically")
    out = nonpositive_set(d)
    out.notes["discriminant"] = d.to_json()
    if f0 is not None and f1 is not None:
        out.notes["nondegeneracy"] = bkw_nondegeneracy(a, b, f0, f1)
    return out


def family_limit_set(name: str, m: Optional[int] = None) -> IntervalSet:
    f0, f1, a, b = recurrence_of(name, m)
    return bkw_limit_set(a, b, f0, f1)


def interval_Im(m: int) -> IntervalSet:
    """[a_m, b_m] with a_m = -1/(sqrt(m-1) - 1)^2, b_m = -1/(sqrt(m-1) + 1)^2; m = 2 gives (-inf, -1/4]."""
    if m < 2:
        raise ValueError("m must be at least 2")
    if m == 2:
        return IntervalSet([Interval(NEG_INF, Fraction(-1, 4), False, True)])
    s = QuadSurd.sqrt(m - 1)
    a_m = -1 / ((s - 1) * (s - 1))
    b_m = -1 / ((s + 1) * (s + 1))
    return IntervalSet([Interval(a_m, b_m)])


def interval_endpoints(m: int) -> tuple[QuadSurd, QuadSurd]:
    iv = interval_Im(m).intervals[0]
    return iv.lo, iv.hi


PYRENE_INTERVAL = (QuadSurd.make(-3, -2, 2), QuadSurd.make(-3, 2, 2))


# ---------------------------------------------------------------------------
# pyrene roots in closed form


def _r(n: int, k: int) -> float:
    c = math.cos(k * math.pi / (2 * n + 2))
    return (math.sqrt(1 + c * c) + c) ** 2


def pyrene_root(n: int, k: int) -> tuple[float, float]:
    """(-r_k, -1/r_k), the k-th pair of zeros of the n-th pyrene polynomial."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    r = _r(n, k)
    return -r, -1 / r


def pyrene_roots(n: int) -> list[float]:
    out = []
    for k in range(1, n + 1):
        out.extend(pyrene_root(n, k))
    return sorted(out)


def certify_root_near(f: Polynomial, approx: float, delta: Fraction) -> Optional[tuple[Fraction, Fraction]]:
    """A rational bracket of half-width delta around approx with an exact sign change, if any."""
    c = Fraction(approx).limit_denominator(10**15)
    lo, hi = c - delta, c + delta
    slo, shi = sign_at_point(f, lo), sign_at_point(f, hi)
    if slo == 0 or shi == 0 or slo != shi:
        return lo, hi
    return None


def max_zero_gap(roots: list[float], lo: float, hi: float) -> float:
    """Largest gap between consecutive points of {lo} + roots + {hi}."""
    pts = [lo] + sorted(roots) + [hi]
    return max(b - a for a, b in zip(pts, pts[1:]))


# ---------------------------------------------------------------------------
# density


@dataclass(frozen=True)
class DensityWitness:
    target: Fraction
    eps: Fraction
    family: str
    m: Optional[int]
    n: int
    lo: Fraction
    hi: Fraction

    def to_json(self) -> dict:
        return {
            "target": str(self.target),
            "eps": str(self.eps),
            "family": self.family,
            "m": self.m,
            "n": self.n,
            "root_lo": str(self.lo),
            "root_hi": str(self.hi),
            "approx": float((self.lo + self.hi) / 2),
        }


def candidate_ms(x: Fraction, m_max: int = 10_000) -> list[int]:
    """Values of m whose interval I_m holds x: m >= 3 in increasing order, then 2 if x <= -1/4."""
    out = []
    for m in range(3, m_max + 1):
        a_m, b_m = interval_endpoints(m)
        if compare(b_m, x) < 0:
            # b_m increases to 0; later m may still contain x
            continue
        if compare(a_m, x) > 0:
            # a_m increases too, so every later interval starts above x
            break
        out.append(m)
    if x <= Fraction(-1, 4):
        out.append(2)
    return out


def _sgn(v) -> int:
    return (v > 0) - (v < 0)


def density_candidates(x: Fraction, m_tries: int = 4) -> list[tuple[str, Optional[int]]]:
    """Families to try, in order: L^(m) with x in I_m (smallest m first), then the
    unbounded ones: L^(2) for x <= -1/4, then U and V for x <= -1/8."""
    ms = candidate_ms(x)
    out: list[tuple[str, Optional[int]]] = [("line-m", m) for m in ms if m >= 3][:m_tries]
    if 2 in ms:
        out.append(("line-m", 2))
    if x <= Fraction(-1, 8):
        out += [("u", None), ("v", None)]
    return out


def _first_bracket(name: str, m: Optional[int], pts: tuple, n_cap: int):
    """Smallest n whose family member changes sign (or vanishes) around the middle point."""
    f0, f1, a, b = recurrence_of(name, m)
    av = [evaluate(a, t) for t in pts]
    bv = [evaluate(b, t) for t in pts]
    prev = [evaluate(f0, t) for t in pts]
    cur = [evaluate(f1, t) for t in pts]
    for n in range(1, n_cap + 1):
        if n > 1:
            prev, cur = cur, [av[i] * cur[i] + bv[i] * prev[i] for i in range(3)]
        s = [_sgn(v) for v in cur]
        if s[1] == 0:
            return n, (pts[1], pts[1])
        if s[0] * s[1] <= 0:
            return n, (pts[0], pts[1])
        if s[1] * s[2] <= 0:
            return n, (pts[1], pts[2])
    return None


def density_witness(x_target, eps, n_cap: int = 500, m_tries: int = 4) -> DensityWitness:
    """Find a family member with a certified zero within eps of x_target.

    Values at x-eps, x, x+eps are advanced together through the recurrence
    in exact arithmetic for n = 1, 2, ...; an exact sign change (or an exact
    zero) certifies a root in the bracket.
    """
    x = Fraction(x_target)
    eps = Fraction(eps)
    if x >= 0:
        raise ValueError("target must be negative")
    if eps <= 0:
        raise ValueError("eps must be positive")
    pts = (x - eps, x, x + eps)
    tried = []
    for name, m in density_candidates(x, m_tries):
        tried.append(name if m is None else f"{name}:{m}")
        hit = _first_bracket(name, m, pts, n_cap)
        if hit is not None:
            n, (lo, hi) = hit
            lo, hi = _tighten(family(name, n, m), lo, hi)
            return DensityWitness(x, eps, name, m, n, lo, hi)
    raise BudgetExceeded(f"no zero within {eps} of {x} for n <= {n_cap} (tried {', '.join(tried) or 'nothing'})")


def _tighten(f: Polynomial, lo: Fraction, hi: Fraction, steps: int = 20) -> tuple[Fraction, Fraction]:
    if lo == hi:
        return lo, hi
    slo = sign_at_point(f, lo)
    if slo == 0:
        return lo, lo
    for _ in range(steps):
        mid = (lo + hi) / 2
        sm = sign_at_point(f, mid)
        if sm == 0:
            return mid, mid
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return lo, hi


# ---------------------------------------------------------------------------
# resonance energy and normality


def aihara_re_pyrene(n: int) -> float:
    if n < 1:
        raise ValueError("n must be positive")
    return 2 * sum(math.sqrt(1 + math.cos(k * math.pi / (2 * n + 2)) ** 2) for k in range(1, n + 1))


def aihara_re(f: Polynomial, width: Fraction = Fraction(1, 10**14)) -> float:
    """Σ 1/sqrt(r) over the zeros -r of a polynomial with only negative real zeros."""
    if not is_real_rooted(f):
        raise PolynomialError("polynomial has non-real zeros")
    iso = isolate_roots(f, width)
    total = 0.0
    for iv in iso.intervals:
        root = float((iv.lo + iv.hi) / 2)
        if iv.hi >= 0:
            raise PolynomialError("polynomial has a non-negative zero")
        total += iv.mult / math.sqrt(-root)
    return total


def re_constant(steps: int = 200_000) -> float:
    """(4/pi) ∫_0^{pi/2} sqrt(1 + cos^2 t) dt by the midpoint rule."""
    h = (math.pi / 2) / steps
    s = sum(math.sqrt(1 + math.cos((i + 0.5) * h) ** 2) for i in range(steps))
    return 4 / math.pi * s * h


@dataclass(frozen=True)
class NormalityStats:
    n: int
    mean: Fraction
    variance: float
    clt_sup: Optional[float]
    llt_sup: Optional[float]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "mean": str(self.mean),
            "variance": self.variance,
            "clt_sup": self.clt_sup,
            "llt_sup": self.llt_sup,
            "precision": "double",
        }


def pyrene_variance(n: int) -> float:
    return 0.5 * sum(1 / (1 + math.cos(k * math.pi / (2 * n + 2)) ** 2) for k in range(1, n + 1))


def _phi(x: float) -> float:
    return math.exp(-x * x / 2) / math.sqrt(2 * math.pi)


def _Phi(x: float) -> float:
    return 0.5 * math.erfc(-x / math.sqrt(2))


def clt_llt_sup(coeffs, mu: float, sigma: float) -> tuple[float, float]:
    """Sup distances of the normalized coefficient distribution from the normal CDF and density.

    Both suprema are attained at lattice points: the CDF jumps there, and on
    each cell between them the density term is constant while the normal
    density is monotone or peaks at 0.
    """
    total = sum(coeffs)
    n = len(coeffs)
    clt = 0.0
    cum = 0
    for k, a in enumerate(coeffs):
        x = (k - mu) / sigma
        left = cum / total if cum else 0.0
        cum += a
        right = cum / total
        g = _Phi(x)
        clt = max(clt, abs(left - g), abs(right - g))
    llt = 0.0
    # cell k is x in [(k - mu)/sigma, (k + 1 - mu)/sigma); outside 0..n-1 the mass is 0
    for k in range(-1, n + 1):
        p = sigma * coeffs[k] / total if 0 <= k < n else 0.0
        x0 = (k - mu) / sigma if k >= 0 else -math.inf
        x1 = (k + 1 - mu) / sigma if k < n else math.inf
        vals = [_phi(x0) if x0 != -math.inf else 0.0, _phi(x1) if x1 != math.inf else 0.0]
        if x0 <= 0 <= x1:
            vals.append(_phi(0.0))
        llt = max(llt, max(abs(p - v) for v in vals))
    return clt, llt


def normality_stats(n: int, with_sup: bool = True) -> NormalityStats:
    if n < 1:
        raise ValueError("n must be positive")
    var = pyrene_variance(n)
    if not with_sup:
        return NormalityStats(n, Fraction(n), var, None, None)
    p = pyrene(n)
    mean = mean_index(p)
    clt, llt = clt_llt_sup(p.coeffs, float(mean), math.sqrt(var))
    return NormalityStats(n, mean, var, clt, llt)
