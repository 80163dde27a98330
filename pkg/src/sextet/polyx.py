"""Dense univariate polynomials over the integers.

Coefficients are Python ints, stored constant term first with trailing
zeros trimmed.  Rationals (``fractions.Fraction``) only show up at
evaluation points.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd
from typing import Iterable, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction]


class PolynomialError(ValueError):
    pass


class NotDivisible(PolynomialError):
    pass


class ZeroConstantTerm(PolynomialError):
    pass


class NegativeCoefficient(PolynomialError):
    pass


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Polynomial:
    """Immutable integer polynomial; ``coeffs[i]`` is the coefficient of x**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _trim(coeffs)
        for a in c:
            if not isinstance(a, int):
                raise TypeError(f"integer coefficients required, got {type(a).__name__}")
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "Polynomial":
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    # ring operations -------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-a for a in self.coeffs)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        if len(b) > len(a):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for j, bj in enumerate(b):
            if bj:
                for i, ai in enumerate(a):
                    out[i + j] += ai * bj
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = Polynomial((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Polynomial", self.coeffs))

    def __call__(self, x):
        return evaluate(self, x)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)})"

    def __str__(self):
        return format_polynomial(self)

    # helpers ----------------------------------------------------------------

    def derivative(self) -> "Polynomial":
        return Polynomial(i * a for i, a in enumerate(self.coeffs) if i)

    def reversed(self) -> "Polynomial":
        """x**deg * f(1/x)."""
        return Polynomial(reversed(self.coeffs))

    def scale_x(self, t: int) -> "Polynomial":
        """f(t*x)."""
        return Polynomial(a * t**i for i, a in enumerate(self.coeffs))

    def shift(self, t: int) -> "Polynomial":
        return shift_compose(self, t)

    def to_json(self) -> list[str]:
        return [str(a) for a in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str | int]) -> "Polynomial":
        return cls(int(a) for a in data)


def _coerce(obj):
    if isinstance(obj, Polynomial):
        return obj
    if isinstance(obj, int):
        return Polynomial((obj,))
    return NotImplemented


X = Polynomial.x()
ONE = Polynomial((1,))
ZERO = Polynomial()


def format_polynomial(f: Polynomial, var: str = "x") -> str:
    if f.is_zero():
        return "0"
    terms = []
    for k in range(f.degree, -1, -1):
        a = f.coeffs[k]
        if a == 0:
            continue
        sign = "-" if a < 0 else "+"
        mag = abs(a)
        if k == 0:
            body = str(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if mag == 1 else f"{mag}{power}"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# arithmetic entry points


def add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def sub(a: Polynomial, b: Polynomial) -> Polynomial:
    return a - b


def mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def shift_compose(f: Polynomial, t: int) -> Polynomial:
    """Return f(x + t) by binomial expansion."""
    n = len(f.coeffs)
    out = [0] * n
    for i, a in enumerate(f.coeffs):
        if not a:
            continue
        tp = 1
        # a * (x+t)^i = sum_j C(i,j) t^(i-j) x^j
        for j in range(i, -1, -1):
            out[j] += a * comb(i, j) * tp
            tp *= t
    return Polynomial(out)


def evaluate(f: Polynomial, x: Number):
    """Exact Horner evaluation.  Ints stay ints, Fractions come back as Fractions."""
    if isinstance(x, float):
        raise TypeError("use float_eval for floating point evaluation")
    acc = 0
    for a in reversed(f.coeffs):
        acc = acc * x + a
    return acc


def float_eval(f: Polynomial, x):
    acc = 0.0
    for a in reversed(f.coeffs):
        acc = acc * x + a
    return acc


def sign_at(f: Polynomial, x: Number) -> int:
    """Sign of f(x) for rational x, computed in integers."""
    if isinstance(x, int):
        v = evaluate(f, x)
        return (v > 0) - (v < 0)
    x = Fraction(x)
    p, q = x.numerator, x.denominator
    # q**deg * f(p/q) has the sign of f(p/q) since q > 0
    acc = 0
    qp = 1
    for a in reversed(f.coeffs):
        acc = acc * p + a * qp
        qp *= q
    return (acc > 0) - (acc < 0)


def divmod_poly(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Integer division with remainder; requires the quotient to stay integral.

    Raises NotDivisible when a step would need a non-integer quotient coefficient.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(f.coeffs)
    dg, lg = g.degree, g.lc
    q = [0] * max(len(r) - dg, 0)
    for k in range(len(r) - 1 - dg, -1, -1):
        c = r[k + dg]
        if c == 0:
            continue
        qc, rem = divmod(c, lg)
        if rem:
            raise NotDivisible(f"leading coefficient {c} not divisible by {lg}")
        q[k] = qc
        for i, gi in enumerate(g.coeffs):
            r[k + i] -= qc * gi
    return Polynomial(q), Polynomial(r)


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """Return q with f == g*q exactly, else raise NotDivisible."""
    try:
        q, r = divmod_poly(f, g)
    except NotDivisible:
        raise NotDivisible(f"{g} does not divide {f}") from None
    if not r.is_zero():
        raise NotDivisible(f"{g} does not divide {f}: remainder {r}")
    return q


def pseudo_remainder(f: Polynomial, g: Polynomial) -> Polynomial:
    """Remainder of |lc(g)|**(deg f - deg g + 1) * f by g.

    Using the absolute value keeps the sign of the true remainder, which Sturm
    sequences depend on.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(f.coeffs)
    dg, lg = g.degree, g.lc
    if len(r) - 1 < dg:
        return Polynomial(r)
    sgn = 1 if lg > 0 else -1
    alg = abs(lg)
    gc = [sgn * c for c in g.coeffs]  # g scaled to positive leading coefficient
    for k in range(len(r) - 1 - dg, -1, -1):
        c = r[k + dg]
        r = [alg * v for v in r]
        if c:
            for i, gi in enumerate(gc):
                r[k + i] -= c * gi
        r.pop()
    return Polynomial(r)


def content(f: Polynomial) -> int:
    g = 0
    for a in f.coeffs:
        g = gcd(g, a)
        if g == 1:
            break
    return g


def primitive_part(f: Polynomial) -> Polynomial:
    """f divided by its content, with the sign of f kept."""
    c = content(f)
    if c in (0, 1):
        return f
    return Polynomial(a // c for a in f.coeffs)


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Primitive gcd over Z with positive leading coefficient."""
    a, b = primitive_part(f), primitive_part(g)
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = pseudo_remainder(a, b)
        a, b = b, primitive_part(r)
    if a.is_zero():
        return a
    if a.degree == 0:
        return ONE
    return a if a.lc > 0 else -a


def squarefree_decomposition(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun's algorithm over Q, returning primitive integer factors.

    Returns [(g_i, i)] with f = c * prod g_i**i, every g_i squarefree,
    pairwise coprime and non-constant.
    """
    if f.degree <= 0:
        return []
    out: list[tuple[Polynomial, int]] = []
    df = f.derivative()
    a = poly_gcd(f, df)
    # b and c must keep a common scale for d = c - b' to be meaningful
    b = _qdiv_exact(_frac(f), a)
    c = _qdiv_exact(_frac(df), a)
    d = _fsub(c, _fderiv(b))
    i = 1
    while len(b) > 1:
        g = poly_gcd(_intize(b), _intize(d)) if any(d) else _normalize(_intize(b))
        if g.degree > 0:
            out.append((_normalize(g), i))
        b = _qdiv_exact(b, g)
        c = _qdiv_exact(d, g)
        d = _fsub(c, _fderiv(b))
        i += 1
    return out


def _frac(f: Polynomial) -> list[Fraction]:
    return [Fraction(a) for a in f.coeffs]


def _ftrim(c: list[Fraction]) -> list[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _fsub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    return _ftrim([(a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0) for k in range(n)])


def _fderiv(a: list[Fraction]) -> list[Fraction]:
    return [k * v for k, v in enumerate(a) if k]


def _intize(a: list[Fraction]) -> Polynomial:
    den = 1
    for v in a:
        den = den * v.denominator // gcd(den, v.denominator)
    return primitive_part(Polynomial(int(v * den) for v in a))


def _qdiv_exact(r: list[Fraction], g: Polynomial) -> list[Fraction]:
    r = list(r)
    dg, lg = g.degree, g.lc
    if len(r) - 1 < dg:
        if any(r):
            raise NotDivisible(f"{g} does not divide the dividend")
        return []
    q = [Fraction(0)] * (len(r) - dg)
    for k in range(len(r) - 1 - dg, -1, -1):
        cq = r[k + dg] / lg
        q[k] = cq
        if cq:
            for i, gi in enumerate(g.coeffs):
                r[k + i] -= cq * gi
    if any(r[:dg]):
        raise NotDivisible(f"{g} does not divide the dividend")
    return _ftrim(q)


def squarefree_part(f: Polynomial) -> Polynomial:
    """Primitive squarefree part of f with positive leading coefficient."""
    if f.degree <= 0:
        return ONE
    g = poly_gcd(f, f.derivative())
    return _normalize(_qdiv(f, g))


def _normalize(f: Polynomial) -> Polynomial:
    f = primitive_part(f)
    return f if f.lc > 0 else -f


def _qdiv(f: Polynomial, g: Polynomial) -> Polynomial:
    """Exact quotient over Q of f by g as a primitive integer polynomial.

    The sign of the leading coefficient follows the true quotient.
    """
    q = _qdiv_exact(_frac(f), g)
    out = _intize(q)
    return out if (out.lc > 0) == (q[-1] > 0) else -out


# ---------------------------------------------------------------------------
# coefficient-sequence properties


def _nonneg(f: Polynomial) -> tuple[int, ...]:
    for a in f.coeffs:
        if a < 0:
            raise NegativeCoefficient(f"negative coefficient {a} in {f}")
    return f.coeffs


def is_symmetric(f: Polynomial) -> bool:
    """True iff x**n f(1/x) == f(x), i.e. the coefficient list is a palindrome."""
    if f[0] == 0:
        raise ZeroConstantTerm(f"{f} has zero constant term")
    return f.coeffs == f.coeffs[::-1]


def is_unimodal(f: Polynomial) -> bool:
    a = _nonneg(f)
    i, n = 0, len(a)
    while i + 1 < n and a[i] <= a[i + 1]:
        i += 1
    while i + 1 < n and a[i] >= a[i + 1]:
        i += 1
    return i >= n - 1


def is_log_concave(f: Polynomial) -> bool:
    a = _nonneg(f)
    return all(a[k] * a[k] >= a[k - 1] * a[k + 1] for k in range(1, len(a) - 1))


def log_concavity_violations(f: Polynomial) -> list[int]:
    a = _nonneg(f)
    return [k for k in range(1, len(a) - 1) if a[k] * a[k] < a[k - 1] * a[k + 1]]


def newton_check(f: Polynomial) -> bool:
    """Newton's inequality a_k^2 >= a_{k-1} a_{k+1} (k+1)(n-k+1) / (k(n-k)), cross-multiplied."""
    a = _nonneg(f)
    n = len(a) - 1
    for k in range(1, n):
        if a[k] * a[k] * k * (n - k) < a[k - 1] * a[k + 1] * (k + 1) * (n - k + 1):
            return False
    return True


def mean_index(f: Polynomial) -> Fraction:
    """Mean of the distribution k -> a_k / sum(a)."""
    a = _nonneg(f)
    total = sum(a)
    return Fraction(sum(k * v for k, v in enumerate(a)), total)


def variance_index(f: Polynomial) -> Fraction:
    a = _nonneg(f)
    total = sum(a)
    mu = Fraction(sum(k * v for k, v in enumerate(a)), total)
    return Fraction(sum(k * k * v for k, v in enumerate(a)), total) - mu * mu


def parse_coeffs(text: str) -> Polynomial:
    """Parse "1,4,3,1" (constant term first)."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise PolynomialError("empty coefficient list")
    return Polynomial(int(p) for p in parts)
