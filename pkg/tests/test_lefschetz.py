import itertools

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from symcert.groebner import IdealSpec, NotArtinianError, initial_ideal
from symcert.lefschetz import (
    artinian_presentation,
    exact_rank,
    multiplication_matrix,
    random_linear_form,
    slp_check,
)
from symcert.polycore import LEX, PolyRingContext
from symcert.symmetric import complete_homogeneous


def monomial_ci(*exps):
    n = len(exps)
    ctx = PolyRingContext.standard(n)
    return IdealSpec(ctx, tuple(ctx.var(i + 1) ** a for i, a in enumerate(exps)))


def h_ideal(n, *degrees):
    ctx = PolyRingContext.standard(n)
    return IdealSpec(ctx, tuple(complete_homogeneous(ctx, a) for a in degrees))


def expected_hf(exps):
    poly = [1]
    for a in exps:
        nxt = [0] * (len(poly) + a - 1)
        for i, c in enumerate(poly):
            for j in range(a):
                nxt[i + j] += c
        poly = nxt
    return tuple(poly)


def test_maximal_ideal_gives_the_field():
    A = artinian_presentation(monomial_ci(1, 1, 1))
    assert A.hilbert == (1,) and A.socle_degree == 0


@pytest.mark.parametrize("exps", [e for n in (1, 2, 3) for e in itertools.product(range(1, 6), repeat=n)]
                         + [(2, 3, 4, 5), (5, 5, 5, 5), (1, 4, 2, 3)])
def test_monomial_complete_intersection_hf(exps):
    A = artinian_presentation(monomial_ci(*exps))
    assert A.hilbert == expected_hf(exps)
    assert sum(A.hilbert) == len(A.basis)
    assert A.hilbert[0] == 1 and A.hilbert[-1] != 0


@pytest.mark.parametrize("a", [2, 3])
def test_hf_equals_hf_of_initial_ideal(a):
    I = h_ideal(3, a, a + 1, a + 2)
    assert artinian_presentation(I).hilbert == artinian_presentation(initial_ideal(I, LEX)).hilbert
    assert artinian_presentation(I).hilbert == expected_hf((a, a + 1, a + 2))


def test_small_multiplication_matrix():
    I = monomial_ci(2, 2)
    A = artinian_presentation(I)
    ell = I.ctx.parse("x1 + x2")
    M = multiplication_matrix(A, ell, 0, 1)
    assert len(M) == 2 and len(M[0]) == 1
    assert exact_rank(M) == 1


def test_multiplication_matrix_ranges():
    A = artinian_presentation(monomial_ci(2, 2))
    ell = A.ideal.ctx.parse("x1 + x2")
    with pytest.raises(ValueError):
        multiplication_matrix(A, ell, 0, 3)
    with pytest.raises(ValueError):
        multiplication_matrix(A, A.ideal.ctx.parse("x1^2"), 0, 1)


def test_exact_rank_against_sympy():
    from fractions import Fraction
    rows = [[Fraction(1, 2), Fraction(1, 3), 1], [1, Fraction(2, 3), 2], [0, 1, Fraction(-5, 7)]]
    rows = [[Fraction(x) for x in r] for r in rows]
    assert exact_rank(rows) == sympy.Matrix(rows).rank()


def test_slp_for_monomial_complete_intersection():
    rep = slp_check(monomial_ci(2, 3, 4))
    assert rep.verdict and rep.failures == ()
    assert rep.checked == 6 * 7 // 2


def test_trivial_quotient_has_slp():
    assert slp_check(monomial_ci(1, 1)).verdict


def test_sum_of_variables_fails_for_symmetric_ideal():
    # (x1 + x2 + x3)^4 lies in <h2, h3, h4>, while the socle degree is 6
    rep = slp_check(h_ideal(3, 2, 3, 4))
    assert not rep.verdict
    assert (0, 4, 0, 1) in rep.failures
    x = sympy.symbols("x1:4")
    h = lambda a: sum(sympy.Mul(*c) for c in itertools.combinations_with_replacement(x, a))
    G = sympy.groebner([h(2), h(3), h(4)], *x, order="grevlex")
    assert G.reduce(sympy.expand(sum(x) ** 4))[1] == 0


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_generic_linear_form_is_lefschetz_for_symmetric_ideal(seed):
    I = h_ideal(3, 2, 3, 4)
    assert slp_check(I, random_linear_form(3, seed)).verdict


def test_ranks_never_exceed_bounds_and_decrease_with_power():
    I = h_ideal(3, 2, 3, 4)
    A = artinian_presentation(I)
    ell = I.ctx.parse("x1 + x2 + x3")
    c = A.socle_degree
    for i in range(c):
        ranks = [exact_rank(multiplication_matrix(A, ell, i, d)) for d in range(1, c - i + 1)]
        for d, r in enumerate(ranks, 1):
            assert r <= min(A.hf(i), A.hf(i + d))
        assert all(a >= b for a, b in zip(ranks, ranks[1:]))


@settings(max_examples=6)
@given(st.permutations(range(3)))
def test_slp_ignores_generator_order(perm):
    I = monomial_ci(2, 3, 4)
    assert slp_check(I.permuted(perm)).verdict
    J = h_ideal(3, 2, 3, 4)
    assert slp_check(J.permuted(perm)).failures == slp_check(J).failures


def test_non_artinian_and_nonlinear_inputs():
    ctx = PolyRingContext.standard(2)
    with pytest.raises(NotArtinianError):
        slp_check(IdealSpec(ctx, (ctx.parse("x1^2"),)))
    with pytest.raises(ValueError):
        slp_check(monomial_ci(2, 2), ctx.parse("x1*x2"))


def test_random_linear_form_is_seeded():
    assert random_linear_form(4, 11) == random_linear_form(4, 11)
    assert random_linear_form(4, 11).degree() == 1
