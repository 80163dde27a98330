from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import binomial_expand_shift, pmul
from sextet.families import pyrene
from sextet.polyx import (
    ONE,
    X,
    NegativeCoefficient,
    NotDivisible,
    Polynomial,
    ZeroConstantTerm,
    content,
    divmod_poly,
    evaluate,
    exact_divide,
    format_polynomial,
    is_log_concave,
    is_symmetric,
    is_unimodal,
    mean_index,
    newton_check,
    parse_coeffs,
    poly_gcd,
    primitive_part,
    shift_compose,
    squarefree_decomposition,
    squarefree_part,
    variance_index,
)
from sextet.realroots import is_real_rooted

small_ints = st.integers(min_value=-50, max_value=50)
polys = st.lists(small_ints, min_size=0, max_size=7).map(Polynomial)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
positive_coeffs = st.lists(st.integers(min_value=1, max_value=60), min_size=1, max_size=8).map(Polynomial)

P1 = Polynomial([1, 4, 1])
P2 = Polynomial([1, 8, 17, 8, 1])
P3 = Polynomial([1, 12, 49, 80, 49, 12, 1])


def test_trailing_zeros_trimmed_and_zero_has_degree_minus_one():
    assert Polynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert Polynomial([0, 0]).degree == -1
    assert Polynomial([]).is_zero()


def test_shift_compose_examples():
    assert shift_compose(X + 1, 1) == X + 2
    # φ of a single hexagon shifted by one is its Clar covering polynomial
    assert shift_compose(Polynomial([1, 1]), 1) == Polynomial([2, 1])


def test_pyrene_step_from_products():
    assert P1 * P1 - X * X * ONE == P2


def test_evaluate_examples():
    assert evaluate(P2, -1) == 3
    assert evaluate(P1, 1) == 6
    assert evaluate(P3, -1) == -4
    assert evaluate(P1, Fraction(1, 2)) == Fraction(13, 4)


def test_evaluate_rejects_float():
    with pytest.raises(TypeError):
        evaluate(P1, 0.5)


def test_exact_divide_examples():
    q = exact_divide(P3, P1)
    assert q.degree == 4 and q * P1 == P3
    d3 = Polynomial([1, 5, 5, 1])
    assert exact_divide(d3, X + 1) == P1
    with pytest.raises(NotDivisible):
        exact_divide(P2, P1)


def test_symmetry_examples():
    assert is_symmetric(P2)
    assert not is_symmetric(Polynomial([1, 4, 3, 1]))
    assert is_symmetric(ONE)
    with pytest.raises(ZeroConstantTerm):
        is_symmetric(X * P1)


def test_unimodal_examples():
    assert is_unimodal(P2)
    assert is_unimodal(Polynomial([1, 4, 3, 1]))
    assert not is_unimodal(Polynomial([2, 1, 2]))
    assert not is_unimodal(Polynomial([1, 0, 1]))
    with pytest.raises(NegativeCoefficient):
        is_unimodal(Polynomial([1, -1]))


def test_log_concave_examples():
    assert is_log_concave(P2)
    assert is_log_concave(Polynomial([1, 4, 3, 1]))
    assert not is_log_concave(Polynomial([1, 1, 2]))
    with pytest.raises(NegativeCoefficient):
        is_log_concave(Polynomial([1, -2, 1]))


def test_newton_examples():
    assert newton_check(P2)
    assert newton_check(P3)
    assert not newton_check(Polynomial([1, 1, 1]))
    with pytest.raises(NegativeCoefficient):
        newton_check(Polynomial([-1, 1]))


def test_newton_boundary_is_inclusive():
    # (x+1)^2: a_1^2 = 4 = a_0 a_2 (2)(2) / (1)(1)
    assert newton_check(Polynomial([1, 2, 1]))


def test_json_round_trip_and_format():
    f = Polynomial([3, 0, -2, 10**30])
    assert Polynomial.from_json(f.to_json()) == f
    assert f.to_json()[-1] == str(10**30)
    assert format_polynomial(Polynomial([1, 4, 3, 1])) == "x^3 + 3x^2 + 4x + 1"
    assert parse_coeffs("1, 4,3,1") == Polynomial([1, 4, 3, 1])


def test_mean_and_variance_of_binomial_row():
    f = (X + 1) ** 6
    assert mean_index(f) == 3
    assert variance_index(f) == Fraction(3, 2)


def test_squarefree_decomposition_recovers_multiplicities():
    f = (X - 1) ** 3 * (X + 2) ** 2 * (2 * X + 3)
    parts = {k: g for g, k in squarefree_decomposition(f)}
    assert parts == {1: 2 * X + 3, 2: X + 2, 3: X - 1}
    assert squarefree_part(f) == primitive_part((X - 1) * (X + 2) * (2 * X + 3))


@given(polys, polys)
def test_mul_commutes_and_matches_schoolbook(a, b):
    assert a * b == b * a
    if not a.is_zero() and not b.is_zero():
        assert (a * b).coeffs == tuple(pmul(list(a.coeffs), list(b.coeffs)))


@given(polys, polys, polys)
@settings(max_examples=60)
def test_mul_associates_and_distributes(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys, st.integers(min_value=-5, max_value=5))
def test_shift_round_trip_and_binomial_oracle(f, t):
    assert shift_compose(shift_compose(f, 1), -1) == f
    if not f.is_zero():
        assert shift_compose(f, t).coeffs == Polynomial(binomial_expand_shift(list(f.coeffs), t)).coeffs


@given(polys, polys)
def test_division_by_monic_divisor_leaves_short_remainder(f, g):
    g = Polynomial(list(g.coeffs) + [1])  # monic, so the quotient is integral
    q, r = divmod_poly(f, g)
    assert q * g + r == f
    assert r.degree < g.degree


@given(polys, nonzero_polys)
def test_exact_divide_inverts_multiplication(q, g):
    assert exact_divide(q * g, g) == q


@given(nonzero_polys, nonzero_polys)
@settings(max_examples=60)
def test_gcd_divides_both(f, g):
    d = poly_gcd(f, g)
    assert d.lc > 0 and content(d) == 1
    exact_divide(primitive_part(f), d)
    exact_divide(primitive_part(g), d)


@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(1, 3)), min_size=1, max_size=3))
@settings(max_examples=60)
def test_squarefree_decomposition_multiplies_back(roots):
    f = ONE
    for r, k in roots:
        f = f * (X - r) ** k
    prod = ONE
    for g, k in squarefree_decomposition(f):
        prod = prod * g**k
    assert prod == f


@given(positive_coeffs)
def test_newton_implies_log_concave_implies_unimodal(f):
    if newton_check(f):
        assert is_log_concave(f)
    if is_log_concave(f):
        assert is_unimodal(f)


@given(st.lists(st.integers(min_value=0, max_value=12), min_size=1, max_size=5))
@settings(max_examples=60)
def test_real_rooted_nonnegative_polynomials_satisfy_newton(neg_roots):
    f = ONE
    for r in neg_roots:
        f = f * (X + r)
    assert is_real_rooted(f)
    assert newton_check(f)


def test_pyrene_forty_is_symmetric_and_newton():
    f = pyrene(40)
    assert is_symmetric(f) and newton_check(f)
