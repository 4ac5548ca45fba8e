import itertools

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from symcert.groebner import IdealSpec, krull_dimension, radical_is_irrelevant_maximal
from symcert.polycore import PolyRingContext, format_polynomial
from symcert.primecert import (
    GROUND_FIELD_NOTE,
    CombinationError,
    Verdict,
    arithmetic_precheck,
    certify_prime,
    combine_disjoint_primes,
    is_regular_sequence,
    is_smooth_cone,
    jacobian,
    minor_ideal,
    partials_ideal,
    replay_certificate,
)
from symcert.symmetric import complete_homogeneous, elementary, power_sum, schur_jacobi_trudi


def p_ideal(n, *exps):
    ctx = PolyRingContext.standard(n)
    return IdealSpec(ctx, tuple(power_sum(ctx, a) for a in exps))


def h_ideal(n, *exps):
    ctx = PolyRingContext.standard(n)
    return IdealSpec(ctx, tuple(complete_homogeneous(ctx, a) for a in exps))


def test_jacobian_entries():
    I = p_ideal(3, 2, 3)
    J = jacobian(I, normalize=False)
    assert J.shape == (2, 3)
    assert format_polynomial(J.rows[1][0]) == "3*x1^2"
    Jn = jacobian(I)
    assert format_polynomial(Jn.rows[1][0]) == "x1^2"


def test_minor_ideal_of_power_sums_matches_closed_form():
    # 2x2 minors of the (normalized) Jacobian of p_a, p_b are x_i^(a-1) x_j^(b-1) - x_j^(a-1) x_i^(b-1)
    for n in (3, 4, 5):
        ctx = PolyRingContext.standard(n)
        for a in range(1, 5):
            for b in range(a + 1, 7):
                M = minor_ideal(jacobian(p_ideal(n, a, b)), 2, ctx)
                xs = ctx.variables()
                expected = set()
                for i in range(n):
                    for j in range(i + 1, n):
                        d = xs[i] ** (a - 1) * xs[j] ** (b - 1) - xs[j] ** (a - 1) * xs[i] ** (b - 1)
                        if not d.is_zero():
                            expected.add(d.primitive())
                assert set(M.generators) == expected


def test_minor_size_out_of_range():
    with pytest.raises(ValueError):
        minor_ideal(jacobian(p_ideal(3, 1, 2)), 3)


@pytest.mark.parametrize("n,exps,regular", [
    (3, (1, 2, 3), True),
    (3, (1, 2, 5), False),
    (3, (1, 2, 6), True),
    (4, (1, 2), True),
])
def test_regular_sequences_of_power_sums(n, exps, regular):
    assert is_regular_sequence(p_ideal(n, *exps)) is regular


@pytest.mark.parametrize("n,exps,regular", [
    (4, (1, 2, 5), False),
    (3, (1, 4, 6), True),
    (3, (1, 4, 7), False),
])
def test_regular_sequences_of_complete_polynomials(n, exps, regular):
    assert is_regular_sequence(h_ideal(n, *exps)) is regular


def test_regular_sequence_in_any_order():
    assert is_regular_sequence(p_ideal(3, 3, 1, 2))


def test_arithmetic_precheck():
    pc = arithmetic_precheck(4, 2, 9)
    assert (pc.n0, pc.q1, pc.condition_met) == (7, 7, True)
    assert arithmetic_precheck(4, 1, 12).q1 == 11
    assert not arithmetic_precheck(4, 1, 5).condition_met
    assert arithmetic_precheck(4, 2, 3).q1 is None
    with pytest.raises(ValueError):
        arithmetic_precheck(4, 3, 3)


@pytest.mark.parametrize("ideal", [
    h_ideal(4, 1, 4), p_ideal(4, 2, 9), p_ideal(4, 1, 12), p_ideal(5, 1, 2, 3), p_ideal(5, 2, 4, 6),
    p_ideal(4, 1, 2),
], ids=["h1h4", "p2p9", "p1p12", "p123", "p246", "p1p2"])
def test_prime_certificates_replay(ideal):
    cert = certify_prime(ideal)
    assert cert.verdict is Verdict.PRIME
    assert cert.height_I == len(ideal)
    assert cert.height_I_plus_minors >= cert.height_I + 2
    assert cert.ground_field_note == GROUND_FIELD_NOTE
    assert replay_certificate(cert)
    d = cert.as_dict()
    assert d["verdict"] == "Prime" and d["steps"]


def test_forced_inconclusive():
    cert = certify_prime(p_ideal(3, 1, 2))
    assert cert.verdict is Verdict.INCONCLUSIVE
    assert cert.height_I_plus_minors == 3
    assert not replay_certificate(cert)


def test_not_regular_sequence_verdict():
    cert = certify_prime(p_ideal(3, 1, 2, 5))
    assert cert.verdict is Verdict.NOT_REGULAR_SEQUENCE
    assert cert.height_I < 3


@settings(max_examples=10)
@given(st.permutations(range(3)))
def test_verdict_ignores_generator_order(perm):
    I = p_ideal(5, 1, 2, 3)
    assert certify_prime(I.permuted(perm)).verdict is Verdict.PRIME


@pytest.mark.slow
@pytest.mark.parametrize("n", [4, 5])
def test_arithmetic_condition_implies_prime(n):
    checked = 0
    for a in range(1, 4):
        for b in range(a + 1, 13):
            pc = arithmetic_precheck(n, a, b)
            if pc.condition_met and pc.q1 == b - a:
                assert certify_prime(p_ideal(n, a, b)).verdict is Verdict.PRIME, (a, b)
                checked += 1
    assert checked > 0


def test_combine_disjoint_primes():
    c1 = certify_prime(h_ideal(4, 1, 4))
    c2 = certify_prime(p_ideal(4, 2, 9))
    joined = combine_disjoint_primes(c1, c2)
    assert joined.verdict is Verdict.PRIME
    assert joined.ideal.ring_dim == 8
    assert joined.ideal.ctx.names[4:] == ("y1", "y2", "y3", "y4")
    assert replay_certificate(joined)
    assert krull_dimension(joined.ideal).height == 4


def test_combine_with_zero_ideal():
    zero = certify_prime(IdealSpec(PolyRingContext.standard(2), ()))
    joined = combine_disjoint_primes(certify_prime(h_ideal(4, 1, 4)), zero)
    assert joined.verdict is Verdict.PRIME and joined.ideal.ring_dim == 6


def test_combine_rejects_inconclusive():
    with pytest.raises(CombinationError):
        combine_disjoint_primes(certify_prime(p_ideal(3, 1, 2)), certify_prime(p_ideal(4, 1, 2)))


@pytest.mark.parametrize("n", [3, 4])
@pytest.mark.parametrize("a", [2, 3, 4])
def test_partials_of_h_and_p_form_complete_intersections(n, a):
    for f in (complete_homogeneous(n, a), power_sum(n, a)):
        P = partials_ideal(f)
        assert len(P) == n
        assert krull_dimension(P).height == n
        assert is_smooth_cone(f)


def test_partials_of_elementary_polynomials():
    assert is_smooth_cone(elementary(3, 2))
    assert is_smooth_cone(elementary(4, 2))
    # every partial of e_3 in four variables vanishes at (1, 0, 0, 0)
    P = partials_ideal(elementary(4, 3))
    assert all(g.evaluate([1, 0, 0, 0]) == 0 for g in P.generators)
    assert krull_dimension(P).height == 3
    assert not radical_is_irrelevant_maximal(P)


def test_smoothness_agrees_with_sympy_on_hook_schur():
    x = sympy.symbols("x1:4")
    h = lambda a: sum(sympy.Mul(*c) for c in itertools.combinations_with_replacement(x, a))
    for l1, smooth in ((2, False), (3, True), (4, False)):
        s = sympy.expand(h(1) * h(l1) - h(l1 + 1))
        G = sympy.groebner([sympy.diff(s, v) for v in x], *x, order="grevlex")
        leads = [sympy.Poly(g, *x).monoms(order="grevlex")[0] for g in G.exprs]
        pure = {next(i for i, e in enumerate(m) if e) for m in leads if sum(1 for e in m if e) == 1}
        assert (len(pure) == 3) is smooth
        assert is_smooth_cone(schur_jacobi_trudi(3, (l1, 1, 0))) is smooth


def test_partials_of_dh_dx1():
    for a in (3, 4):
        f = complete_homogeneous(3, a).derivative(1)
        assert krull_dimension(partials_ideal(f)).height == 3


def test_section_bound_certificate_replays():
    cert = certify_prime(p_ideal(5, 2, 9))
    assert cert.verdict is Verdict.PRIME
    assert cert.height_is_lower_bound and cert.section == (4,)
    assert cert.as_dict()["height_bound"] == "lower_bound"
    assert replay_certificate(cert)
