"""Hilbert functions of Artinian graded quotients and the strong Lefschetz test."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import _kernels
from .groebner import (
    DEFAULT_BUDGET,
    Budget,
    GroebnerBasis,
    IdealSpec,
    NotArtinianError,
    groebner_basis,
    standard_monomials,
)
from .polycore import DEGREVLEX, MonomialOrder, Polynomial


@dataclass(frozen=True)
class ArtinianPresentation:
    ideal: IdealSpec
    basis: tuple                # standard monomials, by degree
    socle_degree: int
    hilbert: tuple              # HF(0..c)
    groebner: GroebnerBasis = field(repr=False, compare=False, default=None)

    def degree_basis(self, i: int) -> list:
        return [m for m in self.basis if sum(m) == i]

    def hf(self, i: int) -> int:
        return self.hilbert[i] if 0 <= i < len(self.hilbert) else 0


def artinian_presentation(ideal: IdealSpec, order: MonomialOrder = DEGREVLEX,
                          budget: Budget = DEFAULT_BUDGET) -> ArtinianPresentation:
    ideal.require_homogeneous()
    G = groebner_basis(ideal, order, budget)
    basis = standard_monomials(G)
    if not basis:
        raise NotArtinianError("S/I is the zero ring")
    c = max(sum(m) for m in basis)
    hf = [0] * (c + 1)
    for m in basis:
        hf[sum(m)] += 1
    return ArtinianPresentation(ideal, tuple(basis), c, tuple(hf), G)


def multiplication_matrix(A: ArtinianPresentation, ell: Polynomial, i: int, d: int) -> list:
    """Matrix of x ell^d : R_i -> R_{i+d} in the standard monomial bases.

    Rows index the degree i+d basis, columns the degree i basis.
    """
    _check_linear(ell, A.ideal.ring_dim)
    c = A.socle_degree
    if not 0 <= i <= c - 1 or not 1 <= d <= c - i:
        raise ValueError(f"need 0 <= i <= {c - 1} and 1 <= d <= {c - i}")
    src = A.degree_basis(i)
    tgt = A.degree_basis(i + d)
    index = {m: r for r, m in enumerate(tgt)}
    power = ell ** d
    images = A.groebner.normal_forms([power.mul_monomial(m) for m in src])
    mat = [[Fraction(0)] * len(src) for _ in tgt]
    for col, img in enumerate(images):
        for m, coef in img.items():
            mat[index[m]][col] = Fraction(int(coef.numerator), int(coef.denominator))
    return mat


def exact_rank(matrix: list) -> int:
    """Rank over Q: clear denominators row by row, then fraction-free elimination."""
    rows = []
    for row in matrix:
        den = 1
        for x in row:
            den = den * x.denominator // math.gcd(den, x.denominator)
        rows.append([int(x * den) for x in row])
    if not rows or not rows[0]:
        return 0
    return _kernels.bareiss_rank(rows)


def _check_linear(ell: Polynomial, n: int) -> None:
    if ell.ring_dim != n:
        raise ValueError("Lefschetz element lives in a different ring")
    if ell.is_zero() or not ell.is_homogeneous() or ell.degree() != 1:
        raise ValueError("Lefschetz element must be a nonzero linear form")


@dataclass(frozen=True)
class SLPReport:
    ell: Polynomial
    verdict: bool
    hilbert: tuple
    failures: tuple = ()        # (i, d, rank found, rank required)
    checked: int = 0

    def as_dict(self, ctx=None) -> dict:
        from .polycore import format_polynomial
        return {"ell": format_polynomial(self.ell, ctx), "verdict": self.verdict,
                "hilbert": list(self.hilbert), "maps_checked": self.checked,
                "failures": [list(f) for f in self.failures]}


def slp_check(ideal: IdealSpec, ell: Polynomial | None = None,
              budget: Budget = DEFAULT_BUDGET) -> SLPReport:
    """Check that every x ell^d : R_i -> R_{i+d} has rank min(HF(i), HF(i+d))."""
    n = ideal.ring_dim
    if ell is None:
        ell = sum(ideal.ctx.variables(), Polynomial.zero(n))
    _check_linear(ell, n)
    A = artinian_presentation(ideal, budget=budget)
    c = A.socle_degree
    failures = []
    checked = 0
    for i in range(c):
        for d in range(1, c - i + 1):
            need = min(A.hf(i), A.hf(i + d))
            rank = exact_rank(multiplication_matrix(A, ell, i, d))
            checked += 1
            if rank != need:
                failures.append((i, d, rank, need))
    return SLPReport(ell, not failures, A.hilbert, tuple(failures), checked)


def random_linear_form(n: int, seed: int, spread: int = 50) -> Polynomial:
    """A seeded random linear form with integer coefficients in [-spread, spread], none zero."""
    rng = random.Random(seed)
    coeffs = []
    for _ in range(n):
        c = 0
        while c == 0:
            c = rng.randint(-spread, spread)
        coeffs.append(c)
    terms = {tuple(1 if j == i else 0 for j in range(n)): c for i, c in enumerate(coeffs)}
    return Polynomial(n, terms)
