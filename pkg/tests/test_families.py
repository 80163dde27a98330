from __future__ import annotations

from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import kekule_pyrene_decimal, recurrence_list
from sextet.families import (
    FAMILY_IDS,
    IndexOutOfRange,
    UnknownFamilyId,
    delannoy,
    family,
    family_chain,
    generating_function_residual,
    kekule_binet_formula,
    kekule_floor_formula,
    line,
    line_m,
    pyrene,
    pyrene_binomial_form,
    pyrene_coeff,
    recurrence_of,
    u_poly,
    v_poly,
    verify_pyrene_identities,
)
from sextet.polyx import ONE, X, Polynomial, evaluate, exact_divide
from sextet.realroots import is_real_rooted


def test_first_pyrene_polynomials():
    assert pyrene(0) == ONE
    assert pyrene(1) == Polynomial([1, 4, 1])
    assert pyrene(2) == Polynomial([1, 8, 17, 8, 1])
    assert pyrene(3) == Polynomial([1, 12, 49, 80, 49, 12, 1])


def test_pyrene_against_list_oracle():
    for n in range(12):
        assert list(pyrene(n).coeffs) == recurrence_list([1], [1, 4, 1], [1, 4, 1], [0, 0, -1], n)


def test_binomial_form_reproduces_small_cases():
    # sum over i <= n of C(2n+1-i, i) x^i (x+1)^(2n-2i); at n=1 the i=1 term is C(2,1) x
    assert pyrene_binomial_form(1) == Polynomial([1, 4, 1])
    assert pyrene_binomial_form(2) == pyrene(2)
    assert pyrene_binomial_form(3) == pyrene(3)


def test_binomial_form_with_fixed_top_index_is_wrong():
    # taking C(2n+1, i) instead of C(2n+1-i, i) gives x^2+5x+1 at n=1
    wrong = sum((comb(3, i) * X**i * (X + 1) ** (2 - 2 * i) for i in range(2)), Polynomial([]))
    assert wrong == Polynomial([1, 5, 1]) and wrong != pyrene(1)


def test_binomial_form_holds_to_thirty():
    for n in range(31):
        assert pyrene_binomial_form(n) == pyrene(n)


def test_coefficient_double_sum_and_range():
    assert [pyrene_coeff(3, k) for k in range(7)] == [1, 12, 49, 80, 49, 12, 1]
    with pytest.raises(IndexOutOfRange):
        pyrene_coeff(2, 5)


def test_delannoy_examples():
    assert delannoy(0) == ONE
    assert delannoy(2) == Polynomial([1, 3, 1])
    assert delannoy(3) == (X + 1) * pyrene(1)
    assert delannoy(3) == Polynomial([1, 5, 5, 1])


def test_line_families():
    assert line(4) == 4 * X + 1
    assert line_m(2, 1) == X + 1 and line_m(3, 1) == 2 * X + 1
    assert line_m(3, 2) == (X + 1) * (2 * X + 1) + X
    with pytest.raises(ValueError):
        line_m(1, 3)


def test_line_m_two_is_fibonacci_like():
    # L^(2)_n = L^(2)_{n-1} + x L^(2)_{n-2}; at x=1 this is Fibonacci
    fib = [1, 2]
    for _ in range(20):
        fib.append(fib[-1] + fib[-2])
    assert [evaluate(line_m(2, n), 1) for n in range(20)] == fib[:20]


def test_u_v_initial_terms():
    assert u_poly(1) == X + 1 and v_poly(1) == 2 * X + 1
    assert u_poly(2) == (2 * X + 1) * (X + 1) + X * (1 - X)
    assert u_poly(2) == Polynomial([1, 4, 1])
    assert v_poly(2) == Polynomial([1, 5, 3])


def test_dispatch_and_errors():
    assert set(FAMILY_IDS) == {"pyrene", "delannoy", "line", "line-m", "u", "v"}
    assert family("line_m", 3, 4) == line_m(4, 3)
    assert family_chain("delannoy", 4)[4] == delannoy(4)
    assert family_chain("line", 3) == [line(k) for k in range(4)]
    with pytest.raises(UnknownFamilyId):
        recurrence_of("line")


def test_kekule_numbers_exact():
    expected = [1, 6, 35, 204, 1189, 6930]
    assert [evaluate(pyrene(n), 1) for n in range(6)] == expected
    for n in range(60):
        assert kekule_floor_formula(n) == kekule_pyrene_decimal(n) == evaluate(pyrene(n), 1)
        assert kekule_binet_formula(n) == evaluate(pyrene(n), 1)


def test_generating_function_residual_vanishes():
    res = generating_function_residual(15)
    assert res[0] == ONE and all(r.is_zero() for r in res[1:])


def test_identity_battery():
    rep = verify_pyrene_identities(30)
    assert rep.ok, rep.failures
    assert rep.checked["binomial_form"] == 31
    assert rep.to_json()["ok"] is True
    with pytest.raises(ValueError):
        verify_pyrene_identities(0)


ns = st.integers(min_value=0, max_value=40)


@given(ns)
@settings(max_examples=40)
def test_pyrene_structural_properties(n):
    p = pyrene(n)
    assert p.degree == 2 * n
    assert evaluate(p, -1) == (n + 1) * (-1) ** n
    assert p.coeffs == tuple(reversed(p.coeffs))
    exact_divide(pyrene(2 * n + 1), Polynomial([1, 4, 1]))
    assert exact_divide(delannoy(2 * n + 1), X + 1) == p


@given(st.sampled_from(["delannoy", "line-m", "u", "v", "pyrene"]), st.integers(2, 6), st.integers(0, 25))
@settings(max_examples=60)
def test_families_match_list_recurrence(name, m, n):
    f0, f1, a, b = recurrence_of(name, m)
    ref = recurrence_list(list(f0.coeffs), list(f1.coeffs), list(a.coeffs), list(b.coeffs), n)
    assert list(family(name, n, m).coeffs) == ref


@given(st.sampled_from(["delannoy", "line-m", "u", "v"]), st.integers(2, 5), st.integers(1, 12))
@settings(max_examples=30, deadline=None)
def test_chain_members_real_rooted(name, m, n):
    assert is_real_rooted(family(name, n, m))
