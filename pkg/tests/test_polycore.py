from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import homogeneous_polynomials, polynomials
from symcert.polycore import (
    DEGREVLEX,
    LEX,
    ExponentOverflowError,
    MonomialOrder,
    Polynomial,
    PolynomialSyntaxError,
    PolyRingContext,
    RingMismatchError,
    UnknownVariableError,
    arith,
    determinant,
    divide_exact,
    format_polynomial,
    parse_polynomial,
    partial_derivative,
)

P3 = polynomials(3)


def test_parse_and_format_example():
    ctx = PolyRingContext.standard(3)
    f = parse_polynomial("x1^2 + 2*x2*x3 - 3/2*x1", ctx)
    assert f.terms[(2, 0, 0)] == 1
    assert f.terms[(0, 1, 1)] == 2
    assert f.terms[(1, 0, 0)] == Fraction(-3, 2)
    assert format_polynomial(f, ctx) == "x1^2 + 2*x2*x3 - 3/2*x1"


def test_parse_errors_carry_position():
    with pytest.raises(PolynomialSyntaxError) as exc:
        parse_polynomial("x1 + + x2", 3)
    assert exc.value.position == 5
    with pytest.raises(UnknownVariableError):
        parse_polynomial("x4", 3)
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial("x1 / 0", 3)


def test_zero_and_constants():
    assert format_polynomial(Polynomial.zero(2)) == "0"
    assert parse_polynomial("0", 2).is_zero()
    assert parse_polynomial("-7/14", 2) == Fraction(-1, 2)
    assert parse_polynomial("x1 - x1", 2).is_zero()


def test_custom_variable_names():
    ctx = PolyRingContext(2, ("a", "b"))
    f = ctx.parse("a^2*b - b")
    assert ctx.format(f) == "a^2*b - b"


def test_ring_mismatch_is_rejected():
    with pytest.raises(RingMismatchError):
        Polynomial.variable(2, 1) + Polynomial.variable(3, 1)


def test_exponent_overflow():
    with pytest.raises(ExponentOverflowError):
        Polynomial.monomial((2**31, 0))
    big = Polynomial.monomial((2**30, 0))
    with pytest.raises(ExponentOverflowError):
        big * big


def test_derivative_of_power_sum_coordinate():
    f = parse_polynomial("x1^4 + x2^4 + x3^4", 3)
    assert partial_derivative(f, 2) == parse_polynomial("4*x2^3", 3)


def test_arith_dispatch():
    f, g = parse_polynomial("x1 + x2", 2), parse_polynomial("x1 - x2", 2)
    assert arith("mul", f, g) == parse_polynomial("x1^2 - x2^2", 2)
    assert arith("pow", f, 2) == parse_polynomial("x1^2 + 2*x1*x2 + x2^2", 2)
    assert arith("scale", f, Fraction(1, 2)) == parse_polynomial("1/2*x1 + 1/2*x2", 2)
    with pytest.raises(ValueError):
        arith("frobnicate", f, g)


def test_monomial_orders():
    a, b = (1, 0, 2), (0, 3, 0)
    # same degree: lex compares x1 first, degrevlex looks at the last variable
    assert LEX.key(a) > LEX.key(b)
    assert DEGREVLEX.key(a) < DEGREVLEX.key(b)
    assert MonomialOrder.parse("lex") is LEX


def test_determinant_and_exact_division():
    xs = PolyRingContext.standard(3).variables()
    vander = determinant([[x ** e for e in (2, 1, 0)] for x in xs], 3)
    expected = (xs[0] - xs[1]) * (xs[0] - xs[2]) * (xs[1] - xs[2])
    assert vander == expected
    assert divide_exact(vander, xs[0] - xs[1]) == (xs[0] - xs[2]) * (xs[1] - xs[2])
    with pytest.raises(ArithmeticError):
        divide_exact(xs[0] ** 2 + 1, xs[0])


@given(P3, P3, P3)
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == Polynomial.zero(3)
    assert f * Polynomial.constant(3, 1) == f


@given(P3)
def test_format_parse_round_trip(f):
    ctx = PolyRingContext.standard(3)
    assert parse_polynomial(format_polynomial(f, ctx), ctx) == f


@given(st.integers(0, 5).flatmap(lambda d: homogeneous_polynomials(3, d)))
def test_euler_identity(f):
    xs = PolyRingContext.standard(3).variables()
    total = sum((xs[i] * f.derivative(i + 1) for i in range(3)), Polynomial.zero(3))
    assert total == f.scale(f.degree())


@given(P3, P3)
def test_derivative_is_a_derivation(f, g):
    for i in (1, 2, 3):
        assert (f * g).derivative(i) == f.derivative(i) * g + f * g.derivative(i)


@given(P3, st.permutations(range(3)))
def test_permutation_is_a_ring_map(f, perm):
    g = parse_polynomial("x1*x2 - x3^2", 3)
    assert (f * g).permute(perm) == f.permute(perm) * g.permute(perm)


@given(P3, st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_evaluation_is_multiplicative(f, p):
    g = parse_polynomial("x1 + 2*x2 - x3", 3)
    assert (f * g).evaluate(p) == f.evaluate(p) * g.evaluate(p)
