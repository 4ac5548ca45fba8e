import cmath
import math

import pytest
import sympy
from hypothesis import given, strategies as st

from symcert.cyclotomic import (
    EnumerationBudgetExceeded,
    RootSumSpec,
    cyclotomic_poly,
    euler_phi,
    find_vanishing,
    lam_leung_weights,
    no_vanish_guarantee,
    numeric_sum,
    reduced_modulus,
    soundness_sweep,
    vanishes,
    weight_set,
)


@pytest.mark.parametrize("m", range(1, 41))
def test_cyclotomic_matches_sympy(m):
    x = sympy.Symbol("x")
    expected = sympy.Poly(sympy.cyclotomic_poly(m, x), x).all_coeffs()[::-1]
    assert cyclotomic_poly(m) == [int(c) for c in expected]


@pytest.mark.parametrize("m", range(1, 41))
def test_cyclotomic_degree_and_product(m):
    assert len(cyclotomic_poly(m)) - 1 == euler_phi(m)
    # x^m - 1 is the product of Phi_d over d | m
    prod = [1]
    for d in range(1, m + 1):
        if m % d == 0:
            prod = _mul(prod, cyclotomic_poly(d))
    assert prod == [-1] + [0] * (m - 1) + [1]


def _mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def test_small_vanishing_sums():
    assert vanishes(RootSumSpec(6, (0, 2, 4)))
    assert vanishes(RootSumSpec(4, (0, 2)))
    assert not vanishes(RootSumSpec(5, (0, 1)))
    assert vanishes(RootSumSpec(5, (0, 1, 2, 3, 4)))
    # squares of 6th roots: 1, w^2, w^4 are the cube roots of unity
    assert vanishes(RootSumSpec(6, (0, 1, 2), k=2))


@given(st.integers(2, 30), st.lists(st.integers(0, 60), min_size=1, max_size=8), st.integers(1, 6))
def test_exact_test_agrees_with_numerics(m, exps, k):
    spec = RootSumSpec(m, tuple(exps), k)
    assert vanishes(spec) == (abs(numeric_sum(m, spec.exponents, k)) < 1e-9)


def test_weight_set_for_ten():
    rep = weight_set(10, 1, 10)
    assert sorted(rep.weights_bruteforce) == [0, 2, 4, 5, 6, 7, 8, 9, 10]
    assert rep.agreement
    for w, exps in rep.witnesses.items():
        assert len(exps) == w
        if w:
            assert vanishes(RootSumSpec(10, exps))


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6, 10, 12, 15, 30])
def test_bruteforce_matches_closed_form(m):
    rep = weight_set(m, 1, 12)
    assert rep.weights_bruteforce == rep.weights_closedform


@pytest.mark.parametrize("m", [4, 8, 9, 12, 18])
def test_prime_power_and_mixed_moduli(m):
    assert weight_set(m, 1, 10).agreement


def test_powers_reduce_the_modulus():
    assert reduced_modulus(12, 4) == 3
    rep = weight_set(12, 4, 9)
    assert sorted(rep.weights_bruteforce) == [0, 3, 6, 9]
    assert rep.reduced_modulus == 3


def test_closed_form():
    assert lam_leung_weights(6, 7) == {0, 2, 3, 4, 5, 6, 7}
    assert lam_leung_weights(15, 8) == {0, 3, 5, 6, 8}
    assert lam_leung_weights(1, 3) == {0}


def test_guarantee_and_sweep():
    assert no_vanish_guarantee(35, 4, 2)
    assert not no_vanish_guarantee(35, 5, 1)
    rep = soundness_sweep(30, 6, 8)
    assert rep.cases_checked > 0 and rep.counterexamples == ()


@given(st.integers(2, 40), st.integers(1, 7))
def test_minimum_weight_is_smallest_prime(m, n):
    q1 = min(p for p in range(2, m + 1) if m % p == 0 and all(p % d for d in range(2, p)))
    witness, _ = find_vanishing(m, n)
    if n < q1:
        assert witness is None
    if n == q1:
        assert witness is not None


def test_enumeration_budget():
    with pytest.raises(EnumerationBudgetExceeded):
        find_vanishing(49, 6, max_nodes=100)


def test_numeric_sum_matches_cmath():
    assert abs(numeric_sum(7, [1, 3], 2) - (cmath.exp(2j * math.pi * 2 / 7) + cmath.exp(2j * math.pi * 6 / 7))) < 1e-12
