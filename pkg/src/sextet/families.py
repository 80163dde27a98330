"""Polynomial families defined by three-term recurrences, and their identities."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Optional

from .polyx import ONE, X, Polynomial, PolynomialError, evaluate, exact_divide
from .surd import QuadSurd

FAMILY_IDS = ("pyrene", "delannoy", "line", "line-m", "u", "v")

PYRENE_STEP = X * X + 4 * X + 1


class IndexOutOfRange(PolynomialError):
    pass


class UnknownFamilyId(ValueError):
    pass


def _three_term(f0: Polynomial, f1: Polynomial, a: Polynomial, b: Polynomial, n: int) -> Polynomial:
    """f_n = a f_{n-1} + b f_{n-2}."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return f0
    prev, cur = f0, f1
    for _ in range(n - 1):
        prev, cur = cur, a * cur + b * prev
    return cur


def _chain(f0, f1, a, b, n_max: int) -> list[Polynomial]:
    out = [f0, f1]
    while len(out) <= n_max:
        out.append(a * out[-1] + b * out[-2])
    return out[: n_max + 1]


@lru_cache(maxsize=None)
def pyrene(n: int) -> Polynomial:
    return _three_term(ONE, PYRENE_STEP, PYRENE_STEP, -(X * X), n)


def _binom(a: int, b: int) -> int:
    return comb(a, b) if 0 <= b <= a else 0


def pyrene_coeff(n: int, k: int) -> int:
    """Coefficient of x^k in the n-th pyrene polynomial, from the binomial double sum."""
    if n < 0 or not 0 <= k <= 2 * n:
        raise IndexOutOfRange(f"need 0 <= k <= 2n, got n={n}, k={k}")
    return sum(_binom(2 * n + 1 - i, i) * _binom(2 * n - 2 * i, k - i) for i in range(k + 1))


def pyrene_binomial_form(n: int) -> Polynomial:
    """Σ_{i=0..n} C(2n+1-i, i) x^i (x+1)^(2n-2i), expanded exactly."""
    if n < 0:
        raise ValueError("n must be non-negative")
    total = Polynomial.const(0)
    for i in range(n + 1):
        total = total + comb(2 * n + 1 - i, i) * X**i * (X + 1) ** (2 * n - 2 * i)
    return total


def delannoy(n: int) -> Polynomial:
    return _three_term(ONE, X + 1, X + 1, X, n)


def line(n: int) -> Polynomial:
    if n < 0:
        raise ValueError("n must be non-negative")
    return n * X + 1


def line_m(m: int, n: int) -> Polynomial:
    if m < 2:
        raise ValueError("m must be at least 2")
    return _three_term(ONE, (m - 1) * X + 1, (m - 2) * X + 1, X, n)


def u_poly(n: int) -> Polynomial:
    return _three_term(ONE, X + 1, 2 * X + 1, X * (1 - X), n)


def v_poly(n: int) -> Polynomial:
    return _three_term(ONE, 2 * X + 1, 2 * X + 1, X * (1 - X), n)


def recurrence_of(name: str, m: Optional[int] = None) -> tuple[Polynomial, Polynomial, Polynomial, Polynomial]:
    """(f0, f1, a, b) with f_n = a f_{n-1} + b f_{n-2}."""
    key = name.replace("_", "-").lower()
    if key == "pyrene":
        return ONE, PYRENE_STEP, PYRENE_STEP, -(X * X)
    if key == "delannoy":
        return ONE, X + 1, X + 1, X
    if key == "line-m":
        if m is None or m < 2:
            raise ValueError("line-m needs m >= 2")
        return ONE, (m - 1) * X + 1, (m - 2) * X + 1, X
    if key == "u":
        return ONE, X + 1, 2 * X + 1, X * (1 - X)
    if key == "v":
        return ONE, 2 * X + 1, 2 * X + 1, X * (1 - X)
    raise UnknownFamilyId(f"{name!r} has no order-2 recurrence (choose from {FAMILY_IDS})")


def family(name: str, n: int, m: Optional[int] = None) -> Polynomial:
    key = name.replace("_", "-").lower()
    if key == "line":
        return line(n)
    f0, f1, a, b = recurrence_of(key, m)
    return _three_term(f0, f1, a, b, n)


def family_chain(name: str, n_max: int, m: Optional[int] = None) -> list[Polynomial]:
    key = name.replace("_", "-").lower()
    if key == "line":
        return [line(k) for k in range(n_max + 1)]
    return _chain(*recurrence_of(key, m), n_max)


# ---------------------------------------------------------------------------
# Kekulé numbers of the pyrene chain in Z[sqrt 2]


def kekule_floor_formula(n: int) -> int:
    """floor((sqrt2 + 1)^(2n+2) / (4 sqrt2)), taken exactly."""
    return ((QuadSurd.sqrt(2) + 1) ** (2 * n + 2) / (4 * QuadSurd.sqrt(2))).floor()


def kekule_binet_formula(n: int) -> QuadSurd:
    """[(sqrt2+1)^(2n+2) - (sqrt2-1)^(2n+2)] / (4 sqrt2), exactly; always an integer."""
    r2 = QuadSurd.sqrt(2)
    return ((r2 + 1) ** (2 * n + 2) - (r2 - 1) ** (2 * n + 2)) / (4 * r2)


# ---------------------------------------------------------------------------


@dataclass
class IdentityReport:
    n_max: int
    checked: dict = field(default_factory=dict)  # identity id -> number of cases checked
    failures: list = field(default_factory=list)  # (identity id, n, detail)

    @property
    def ok(self) -> bool:
        return not self.failures

    def _record(self, ident: str, n, passed: bool, detail: str = "") -> None:
        self.checked[ident] = self.checked.get(ident, 0) + 1
        if not passed:
            self.failures.append((ident, n, detail))

    def to_json(self) -> dict:
        return {
            "n_max": self.n_max,
            "ok": self.ok,
            "checked": dict(self.checked),
            "failures": [{"identity": i, "n": n, "detail": d} for i, n, d in self.failures],
        }


def generating_function_residual(n_max: int) -> list[Polynomial]:
    """Coefficients of y^0..y^n_max in (x²y² - (x²+4x+1)y + 1) · Σ_{j<=n_max} P_j y^j."""
    ps = [pyrene(j) for j in range(n_max + 1)]
    out = []
    for j in range(n_max + 1):
        term = ps[j]
        if j >= 1:
            term = term - PYRENE_STEP * ps[j - 1]
        if j >= 2:
            term = term + X * X * ps[j - 2]
        out.append(term)
    return out


def verify_pyrene_identities(n_max: int) -> IdentityReport:
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    rep = IdentityReport(n_max)
    for n in range(n_max + 1):
        p = pyrene(n)
        rep._record("degree", n, p.degree == 2 * n, f"degree {p.degree}")
        v = evaluate(p, -1)
        rep._record("value_at_minus_one", n, v == (n + 1) * (-1) ** n, f"P_n(-1) = {v}")
        try:
            exact_divide(pyrene(2 * n + 1), PYRENE_STEP)
            ok = True
        except PolynomialError:
            ok = False
        rep._record("odd_index_divisible", n, ok, "x^2+4x+1 does not divide P_{2n+1}")
        d = delannoy(2 * n + 1)
        try:
            ok = exact_divide(d, X + 1) == p
        except PolynomialError:
            ok = False
        rep._record("delannoy_quotient", n, ok, "D_{2n+1}/(x+1) != P_n")
        coeffs = [pyrene_coeff(n, k) for k in range(2 * n + 1)]
        rep._record("coefficient_double_sum", n, coeffs == list(p.coeffs), str(coeffs))
        rep._record("binomial_form", n, pyrene_binomial_form(n) == p, "binomial expansion differs")
        k1 = evaluate(p, 1)
        rep._record("kekule_floor", n, kekule_floor_formula(n) == k1, f"P_n(1) = {k1}")
        kb = kekule_binet_formula(n)
        rep._record("kekule_binet", n, kb.is_rational and kb.a == k1, f"Binet gives {kb}")
    resid = generating_function_residual(n_max)
    rep._record("generating_function", 0, resid[0] == ONE, f"y^0 coefficient {resid[0]}")
    for j in range(1, n_max + 1):
        rep._record("generating_function", j, resid[j].is_zero(), f"y^{j} coefficient {resid[j]}")
    return rep

