"""Power sums, complete and elementary symmetric polynomials, Schur polynomials,
Newton's identities, and residues of p_c and h_c modulo the ideals they are
compared against.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Sequence

from .groebner import GroebnerBasis, IdealSpec, groebner_basis
from .polycore import (
    LEX,
    Polynomial,
    PolyRingContext,
    Q,
    coefficient,
    determinant,
    divide_exact,
)


def _ctx(ctx) -> PolyRingContext:
    return PolyRingContext.standard(ctx) if isinstance(ctx, int) else ctx


def power_sum(ctx: PolyRingContext | int, a: int) -> Polynomial:
    ctx = _ctx(ctx)
    if a < 1:
        raise ValueError("power sums are defined for degree >= 1")
    n = ctx.ring_dim
    return Polynomial._raw(n, {tuple(a if j == i else 0 for j in range(n)): Q(1) for i in range(n)})


def complete_homogeneous(ctx: PolyRingContext | int, a: int) -> Polynomial:
    ctx = _ctx(ctx)
    if a < 0:
        raise ValueError("complete symmetric polynomials need degree >= 0")
    n = ctx.ring_dim
    acc = {}
    for combo in itertools.combinations_with_replacement(range(n), a):
        m = [0] * n
        for i in combo:
            m[i] += 1
        acc[tuple(m)] = Q(1)
    return Polynomial._raw(n, acc)


def elementary(ctx: PolyRingContext | int, a: int) -> Polynomial:
    ctx = _ctx(ctx)
    if a < 0:
        raise ValueError("elementary symmetric polynomials need degree >= 0")
    n = ctx.ring_dim
    acc = {}
    for combo in itertools.combinations(range(n), a):
        acc[tuple(1 if i in combo else 0 for i in range(n))] = Q(1)
    return Polynomial._raw(n, acc)


def _h(ctx, a: int) -> Polynomial:
    # Jacobi-Trudi convention: h with negative index is 0
    if a < 0:
        return Polynomial.zero(ctx.ring_dim)
    return complete_homogeneous(ctx, a)


def _partition(ctx: PolyRingContext, lam: Sequence[int]) -> tuple:
    lam = tuple(int(x) for x in lam)
    n = ctx.ring_dim
    if len(lam) > n:
        if any(lam[n:]):
            raise ValueError(f"partition {lam} has more than {n} nonzero parts")
        lam = lam[:n]
    lam = lam + (0,) * (n - len(lam))
    if any(x < 0 for x in lam) or any(lam[i] < lam[i + 1] for i in range(n - 1)):
        raise ValueError(f"{lam} is not a partition")
    return lam


def schur_bialternant(ctx: PolyRingContext | int, lam: Sequence[int]) -> Polynomial:
    """det(x_i^(lam_j + n - j)) divided exactly by the Vandermonde determinant."""
    ctx = _ctx(ctx)
    lam = _partition(ctx, lam)
    n = ctx.ring_dim
    xs = ctx.variables()

    def alternant(exps):
        return determinant([[xs[i] ** e for e in exps] for i in range(n)], n)

    num = alternant([lam[j] + n - 1 - j for j in range(n)])
    den = alternant([n - 1 - j for j in range(n)])
    return divide_exact(num, den, LEX)


def schur_jacobi_trudi(ctx: PolyRingContext | int, lam: Sequence[int]) -> Polynomial:
    """det(h_{lam_i - i + j})."""
    ctx = _ctx(ctx)
    lam = _partition(ctx, lam)
    n = ctx.ring_dim
    # trailing zero parts contribute an identity block
    k = max((i + 1 for i, x in enumerate(lam) if x), default=0)
    if k == 0:
        return Polynomial.constant(n, 1)
    return determinant([[_h(ctx, lam[i] - i + j) for j in range(k)] for i in range(k)], n)


class NewtonIdentity(enum.Enum):
    EQ1 = "eq1"   # sum_{i=0}^{n} (-1)^i e_i h_{n-i} = 0
    EQ2 = "eq2"   # a h_a = sum_{i=1}^{a} p_i h_{a-i}
    EQ3 = "eq3"   # n e_n = sum_{i=1}^{n} (-1)^{i-1} e_{n-i} p_i


def newton_identity_defect(ctx: PolyRingContext | int, which: NewtonIdentity | str,
                           index: int) -> Polynomial:
    """Left side minus right side of the chosen identity; zero when it holds."""
    ctx = _ctx(ctx)
    which = NewtonIdentity(which)
    if index < 1:
        raise ValueError("identity index must be >= 1")
    zero = Polynomial.zero(ctx.ring_dim)
    if which is NewtonIdentity.EQ1:
        total = zero
        for i in range(index + 1):
            t = elementary(ctx, i) * complete_homogeneous(ctx, index - i)
            total = total - t if i % 2 else total + t
        return total
    if which is NewtonIdentity.EQ2:
        rhs = zero
        for i in range(1, index + 1):
            rhs = rhs + power_sum(ctx, i) * complete_homogeneous(ctx, index - i)
        return complete_homogeneous(ctx, index).scale(index) - rhs
    rhs = zero
    for i in range(1, index + 1):
        t = elementary(ctx, index - i) * power_sum(ctx, i)
        rhs = rhs - t if (i - 1) % 2 else rhs + t
    return elementary(ctx, index).scale(index) - rhs


# --- residues --------------------------------------------------------------

class ResidueKind(enum.Enum):
    ZERO = "zero"
    E_POWER = "scalar_times_e_power"
    E2_E3_POWER = "scalar_times_e2_e3_power"


@dataclass(frozen=True)
class ResidueClass:
    kind: ResidueKind
    scalar: object = Q(0)
    exponent: int = 0

    def __post_init__(self):
        object.__setattr__(self, "scalar", coefficient(self.scalar))
        if self.kind is not ResidueKind.ZERO and self.scalar == 0:
            raise ValueError("nonzero residue classes need a nonzero scalar")

    def polynomial(self, ctx: PolyRingContext | int) -> Polynomial:
        """The representative scalar * e_n^k (or scalar * e_2 * e_3^k)."""
        ctx = _ctx(ctx)
        n = ctx.ring_dim
        if self.kind is ResidueKind.ZERO:
            return Polynomial.zero(n)
        if self.kind is ResidueKind.E_POWER:
            return (elementary(ctx, n) ** self.exponent).scale(self.scalar)
        return (elementary(ctx, 2) * elementary(ctx, 3) ** self.exponent).scale(self.scalar)

    def as_dict(self) -> dict:
        return {"kind": self.kind.value, "scalar": str(self.scalar), "exponent": self.exponent}


class ResidueShapeError(ArithmeticError):
    """Direct reduction disagrees with the closed-form shape of the residue."""


def _scalar_from_oracle(G: GroebnerBasis, target: Polynomial, unit: Polynomial):
    """The c with NF(target) = c * NF(unit), or None if no such c exists."""
    nt, nu = G.normal_forms([target, unit])
    if nu.is_zero():
        return Q(0) if nt.is_zero() else None
    lead = next(iter(nu.terms))
    c = nt.coefficient_of(lead) / nu.terms[lead]
    return c if nt == nu.scale(c) else None


def initial_power_sum_basis(ctx: PolyRingContext | int) -> GroebnerBasis:
    ctx = _ctx(ctx)
    gens = tuple(power_sum(ctx, i) for i in range(1, ctx.ring_dim))
    return groebner_basis(IdealSpec(ctx, gens))


def residue_p_mod_initial(ctx: PolyRingContext | int, c: int,
                          basis: GroebnerBasis | None = None) -> ResidueClass:
    """Class of p_c modulo <p_1, ..., p_{n-1}>.

    Zero unless n divides c; for c = n*k it is +-n * e_n^k.  The sign is read
    off a Groebner reduction, and the shape is checked against it.
    """
    ctx = _ctx(ctx)
    if c < 1:
        raise ValueError("degree must be >= 1")
    n = ctx.ring_dim
    G = basis or initial_power_sum_basis(ctx)
    pc = power_sum(ctx, c)
    if c % n:
        if not G.normal_form(pc).is_zero():
            raise ResidueShapeError(f"p_{c} is not zero modulo p_1..p_{n - 1}")
        return ResidueClass(ResidueKind.ZERO)
    k = c // n
    s = _scalar_from_oracle(G, pc, elementary(ctx, n) ** k)
    if s is None or abs(s) != n:
        raise ResidueShapeError(f"p_{c} is not +-{n} e_{n}^{k} modulo p_1..p_{n - 1}")
    return ResidueClass(ResidueKind.E_POWER, s, k)


def h1h4_basis() -> GroebnerBasis:
    ctx = PolyRingContext.standard(3)
    return groebner_basis(IdealSpec(ctx, (complete_homogeneous(ctx, 1), complete_homogeneous(ctx, 4))))


def residue_h_mod_h1h4(c: int, basis: GroebnerBasis | None = None) -> ResidueClass:
    """Class of h_c modulo <h_1, h_4> in three variables.

    c = 3k: +-e_3^k;  c = 3k+1: zero;  c = 3k+2: +-(k+1) e_2 e_3^k.
    """
    if c < 1:
        raise ValueError("degree must be >= 1")
    ctx = PolyRingContext.standard(3)
    G = basis or h1h4_basis()
    hc = complete_homogeneous(ctx, c)
    k, r = divmod(c, 3)
    if r == 1:
        if not G.normal_form(hc).is_zero():
            raise ResidueShapeError(f"h_{c} is not zero modulo h_1, h_4")
        return ResidueClass(ResidueKind.ZERO)
    e3k = elementary(ctx, 3) ** k
    if r == 0:
        s = _scalar_from_oracle(G, hc, e3k)
        if s is None or abs(s) != 1:
            raise ResidueShapeError(f"h_{c} is not +-e_3^{k} modulo h_1, h_4")
        return ResidueClass(ResidueKind.E_POWER, s, k)
    s = _scalar_from_oracle(G, hc, elementary(ctx, 2) * e3k)
    if s is None or abs(s) != k + 1:
        raise ResidueShapeError(f"h_{c} is not +-{k + 1} e_2 e_3^{k} modulo h_1, h_4")
    return ResidueClass(ResidueKind.E2_E3_POWER, s, k)


# --- derivative identities -------------------------------------------------

class Family(enum.Enum):
    H = "h"
    E = "e"
    P = "p"


def family_member(ctx: PolyRingContext | int, family: Family | str, a: int) -> Polynomial:
    """h_a, e_a or p_a; p_0 is the constant n."""
    ctx = _ctx(ctx)
    family = Family(family)
    if family is Family.H:
        return complete_homogeneous(ctx, a)
    if family is Family.E:
        return elementary(ctx, a)
    return power_sum(ctx, a) if a else Polynomial.constant(ctx.ring_dim, ctx.ring_dim)


def derivative_identity_defects(ctx: PolyRingContext | int, family: Family | str, a: int) -> list:
    """Defects of the per-variable recursion and of the summed identity for f_a.

    h: d h_a/dx_i = h_{a-1} + x_i d h_{a-1}/dx_i,  sum_i d h_a/dx_i = (n+a-1) h_{a-1}
    e: d e_a/dx_i = e_{a-1} - x_i d e_{a-1}/dx_i,  sum_i d e_a/dx_i = (n-a+1) e_{a-1}
    p: d p_a/dx_i = a x_i^(a-1),                   sum_i d p_a/dx_i = a p_{a-1}

    Returns n + 1 polynomials, all zero exactly when the identities hold.
    """
    ctx = _ctx(ctx)
    family = Family(family)
    if a < 1:
        raise ValueError("identities are stated for a >= 1")
    n = ctx.ring_dim
    fa = family_member(ctx, family, a)
    prev = family_member(ctx, family, a - 1)
    xs = ctx.variables()
    defects = []
    total = Polynomial.zero(n)
    for i in range(1, n + 1):
        d = fa.derivative(i)
        total = total + d
        if family is Family.H:
            rhs = prev + xs[i - 1] * prev.derivative(i)
        elif family is Family.E:
            rhs = prev - xs[i - 1] * prev.derivative(i)
        else:
            rhs = (xs[i - 1] ** (a - 1)).scale(a)
        defects.append(d - rhs)
    factor = {Family.H: n + a - 1, Family.E: n - a + 1, Family.P: a}[family]
    defects.append(total - prev.scale(factor))
    return defects
