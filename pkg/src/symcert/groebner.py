"""Buchberger's algorithm and the ideal-theoretic queries built on it.

Inside the engine a monomial is packed into one int (see :class:`_Packer`), so
the reduction loop in ``symcert._kernels`` only ever touches ints and exact
rationals.  Bases are kept monic over Q.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import _kernels
from .polycore import (
    DEGREVLEX,
    LEX,
    ExponentOverflowError,
    Monomial,
    MonomialOrder,
    Polynomial,
    PolyRingContext,
    Q,
    RingMismatchError,
    mono_divides,
)


class ResourceCeilingExceeded(RuntimeError):
    """The computation hit a configured budget; the instance is beyond desk scale."""


class NonHomogeneousError(ValueError):
    pass


class NotArtinianError(ValueError):
    pass


@dataclass(frozen=True)
class Budget:
    max_spairs: int = 200_000
    max_terms: int = 5_000_000

    def __post_init__(self):
        if self.max_spairs < 1 or self.max_terms < 1:
            raise ValueError("budgets must be positive")


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class IdealSpec:
    """An ordered list of generators in a declared polynomial ring."""

    ctx: PolyRingContext
    generators: tuple = ()

    def __post_init__(self):
        gens = tuple(self.generators)
        for g in gens:
            if not isinstance(g, Polynomial):
                raise TypeError("generators must be Polynomial values")
            if g.ring_dim != self.ctx.ring_dim:
                raise RingMismatchError("generator lives in a different ring")
            if g.is_zero():
                raise ValueError("generators must be nonzero")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def of(cls, gens: Iterable[Polynomial], ctx: PolyRingContext | int | None = None) -> "IdealSpec":
        gens = list(gens)
        if ctx is None:
            if not gens:
                raise ValueError("cannot infer the ring of an empty generator list")
            ctx = gens[0].ring_dim
        if isinstance(ctx, int):
            ctx = PolyRingContext.standard(ctx)
        return cls(ctx, tuple(gens))

    @property
    def ring_dim(self) -> int:
        return self.ctx.ring_dim

    def __len__(self) -> int:
        return len(self.generators)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def require_homogeneous(self) -> None:
        for g in self.generators:
            if not g.is_homogeneous():
                raise NonHomogeneousError(f"generator {self.ctx.format(g)} is not homogeneous")

    def plus(self, other: "IdealSpec | Iterable[Polynomial]") -> "IdealSpec":
        extra = other.generators if isinstance(other, IdealSpec) else tuple(other)
        return IdealSpec(self.ctx, self.generators + tuple(extra))

    def permuted(self, perm: Sequence[int]) -> "IdealSpec":
        return IdealSpec(self.ctx, tuple(self.generators[i] for i in perm))

    def formatted(self) -> list:
        return [self.ctx.format(g) for g in self.generators]


class _Packer:
    """Monomial <-> int encoding that preserves order and turns products into sums.

    Each exponent gets a ``bits``-wide field whose top bit is a guard.  For
    degrevlex the code is ``deg * W**n - sum(e_i * W**i)``; for lex it is
    ``sum(e_i * W**(n-1-i))``.
    """

    def __init__(self, n: int, order: MonomialOrder, bits: int = 16):
        self.n = n
        self.order = order
        self.bits = bits
        self.half = 1 << (bits - 1)
        self.is_lex = order is LEX
        width = bits * n
        self.lowmask = (1 << width) - 1
        self.guard = sum(self.half << (bits * i) for i in range(n))
        self.fieldmask = (1 << bits) - 1
        if self.is_lex:
            self.shifts = [bits * (n - 1 - i) for i in range(n)]
        else:
            self.shifts = [bits * i for i in range(n)]
        self.width = width

    def pack(self, m: Monomial) -> int:
        low = 0
        for e, s in zip(m, self.shifts):
            if e >= self.half:
                raise ExponentOverflowError(f"exponent {e} exceeds the packed width")
            low |= e << s
        if self.is_lex:
            return low
        return (sum(m) << self.width) - low

    def low(self, k: int) -> int:
        return k if self.is_lex else (-k) & self.lowmask

    def unpack(self, k: int) -> Monomial:
        low = self.low(k)
        fm = self.fieldmask
        return tuple((low >> s) & fm for s in self.shifts)

    def degree(self, k: int) -> int:
        return sum(self.unpack(k))

    def pack_poly(self, f: Polynomial) -> dict:
        return {self.pack(m): c for m, c in f.items()}

    def unpack_poly(self, d: dict) -> Polynomial:
        return Polynomial._raw(self.n, {self.unpack(k): c for k, c in d.items()})


class _Elem:
    """Monic basis element in packed form."""

    __slots__ = ("lead", "low", "mono", "tail")

    def __init__(self, packer: _Packer, terms: dict):
        lead = max(terms)
        inv = 1 / terms[lead]
        self.lead = lead
        self.low = packer.low(lead)
        self.mono = packer.unpack(lead)
        self.tail = sorted(((k, c * inv) for k, c in terms.items() if k != lead), reverse=True)

    def as_dict(self) -> dict:
        d = {self.lead: Q(1)}
        d.update(self.tail)
        return d


class _Reducer:
    def __init__(self, packer: _Packer, elems: Sequence[_Elem], budget: Budget):
        self.packer = packer
        self.leads = [e.lead for e in elems]
        self.lows = [e.low for e in elems]
        self.tails = [e.tail for e in elems]
        self.budget = budget

    def reduce(self, terms: dict) -> dict:
        if not terms:
            return {}
        p = self.packer
        if not p.is_lex:
            top = max(terms)
            if (top >> p.width) + 1 >= p.half:
                raise ExponentOverflowError("degree exceeds the packed width")
        try:
            return _kernels.nf_reduce(terms, self.leads, self.lows, self.tails, p.lowmask,
                                      p.guard, p.is_lex, self.budget.max_terms)
        except _kernels.KernelLimit as exc:
            raise ResourceCeilingExceeded(str(exc)) from None
        except OverflowError as exc:
            raise ExponentOverflowError(str(exc)) from None


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis (monic, largest leading monomial first)."""

    ctx: PolyRingContext
    order: MonomialOrder
    basis: tuple
    reduced: bool = True
    _elems: tuple = field(default=(), repr=False, compare=False)

    @property
    def ring_dim(self) -> int:
        return self.ctx.ring_dim

    def leading_monomials(self) -> list:
        return [g.leading_monomial(self.order) for g in self.basis]

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.basis)

    def _reducer(self, budget: Budget = DEFAULT_BUDGET) -> tuple:
        packer = _Packer(self.ring_dim, self.order)
        elems = self._elems or tuple(_Elem(packer, packer.pack_poly(g)) for g in self.basis)
        return packer, _Reducer(packer, elems, budget)

    def normal_form(self, f: Polynomial, budget: Budget = DEFAULT_BUDGET) -> Polynomial:
        if f.ring_dim != self.ring_dim:
            raise RingMismatchError("polynomial and basis live in different rings")
        packer, red = self._reducer(budget)
        return packer.unpack_poly(red.reduce(packer.pack_poly(f)))

    def normal_forms(self, fs: Iterable[Polynomial], budget: Budget = DEFAULT_BUDGET) -> list:
        packer, red = self._reducer(budget)
        out = []
        for f in fs:
            if f.ring_dim != self.ring_dim:
                raise RingMismatchError("polynomial and basis live in different rings")
            out.append(packer.unpack_poly(red.reduce(packer.pack_poly(f))))
        return out

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def ideal(self) -> IdealSpec:
        return IdealSpec(self.ctx, self.basis)


# --- Buchberger ------------------------------------------------------------

def _lcm_packed(packer: _Packer, a: _Elem, b: _Elem) -> int:
    return packer.pack(tuple(max(x, y) for x, y in zip(a.mono, b.mono)))


def _coprime(a: _Elem, b: _Elem) -> bool:
    return not any(x and y for x, y in zip(a.mono, b.mono))


def _divides_packed(packer: _Packer, small: int, big: int) -> bool:
    g = packer.guard
    return ((packer.low(big) | g) - packer.low(small)) & g == g


def _spoly(a: _Elem, b: _Elem, lcm: int) -> dict:
    sa = lcm - a.lead
    sb = lcm - b.lead
    acc = {k + sa: c for k, c in a.tail}
    for k, c in b.tail:
        k += sb
        v = acc.get(k, 0) - c
        if v:
            acc[k] = v
        else:
            acc.pop(k, None)
    return acc


def _buchberger(packer: _Packer, inputs: list, budget: Budget) -> list:
    elems: list = []       # every element ever added, indexed
    active: list = []      # indices currently in G
    pairs: list = []       # (lcm, i, j)
    spairs = 0

    def update(h_idx: int) -> None:
        nonlocal active, pairs
        h = elems[h_idx]
        cands = [(g, _lcm_packed(packer, h, elems[g])) for g in active]
        kept = []
        for pos, (g1, l1) in enumerate(cands):
            if _coprime(h, elems[g1]):
                kept.append((g1, l1))
                continue
            others = itertools.chain(cands[pos + 1:], kept)
            if not any(_divides_packed(packer, l2, l1) for _, l2 in others):
                kept.append((g1, l1))
        new_pairs = [(l, g, h_idx) for g, l in kept if not _coprime(h, elems[g])]
        survivors = []
        for l, i, j in pairs:
            if (_divides_packed(packer, h.lead, l)
                    and _lcm_packed(packer, elems[i], h) != l
                    and _lcm_packed(packer, h, elems[j]) != l):
                continue
            survivors.append((l, i, j))
        pairs = survivors + new_pairs
        active = [g for g in active if not _divides_packed(packer, h.lead, elems[g].lead)]
        active.append(h_idx)

    for terms in inputs:
        if not terms:
            continue
        red = _Reducer(packer, [elems[g] for g in active], budget)
        terms = red.reduce(terms)
        if not terms:
            continue
        elems.append(_Elem(packer, terms))
        update(len(elems) - 1)

    while pairs:
        best = min(range(len(pairs)), key=lambda t: pairs[t])
        lcm, i, j = pairs.pop(best)
        spairs += 1
        if spairs > budget.max_spairs:
            raise ResourceCeilingExceeded(f"S-pair budget of {budget.max_spairs} exhausted")
        red = _Reducer(packer, [elems[g] for g in active], budget)
        h = red.reduce(_spoly(elems[i], elems[j], lcm))
        if h:
            elems.append(_Elem(packer, h))
            update(len(elems) - 1)
    return [elems[g] for g in active]


def _interreduce(packer: _Packer, elems: list, budget: Budget) -> list:
    elems = sorted(elems, key=lambda e: e.lead, reverse=True)
    # drop elements whose leading monomial is divisible by another one
    minimal = []
    for e in elems:
        if not any(_divides_packed(packer, o.lead, e.lead) for o in minimal):
            minimal = [o for o in minimal if not _divides_packed(packer, e.lead, o.lead)]
            minimal.append(e)
    out = list(minimal)
    for idx in range(len(out)):
        others = out[:idx] + out[idx + 1:]
        red = _Reducer(packer, others, budget)
        tail = red.reduce(dict(out[idx].tail))
        tail[out[idx].lead] = Q(1)
        out[idx] = _Elem(packer, tail)
    out.sort(key=lambda e: e.lead, reverse=True)
    return out


def groebner_basis(ideal: IdealSpec, order: MonomialOrder | str = DEGREVLEX,
                   budget: Budget = DEFAULT_BUDGET) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal for ``order``.

    Normal pair selection (smallest lcm first); Buchberger's coprime and chain
    criteria are applied through the Gebauer-Moeller update.
    """
    order = MonomialOrder.parse(order)
    packer = _Packer(ideal.ring_dim, order)
    inputs = []
    for g in ideal.generators:
        d = packer.pack_poly(g)
        if not packer.is_lex and (g.degree() + 1) * 2 >= packer.half:
            raise ExponentOverflowError("generator degree exceeds the packed width")
        inputs.append(d)
    elems = _interreduce(packer, _buchberger(packer, inputs, budget), budget)
    basis = tuple(packer.unpack_poly(e.as_dict()) for e in elems)
    return GroebnerBasis(ideal.ctx, order, basis, True, tuple(elems))


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    return G.normal_form(f)


def spolynomials_reduce_to_zero(G: GroebnerBasis) -> bool:
    """Buchberger's criterion checked directly on every pair of basis elements."""
    packer, red = G._reducer()
    elems = [_Elem(packer, packer.pack_poly(g)) for g in G.basis]
    for a, b in itertools.combinations(elems, 2):
        lcm = _lcm_packed(packer, a, b)
        if red.reduce(_spoly(a, b, lcm)):
            return False
    return True


def ideal_membership(f: Polynomial, ideal: IdealSpec, order: MonomialOrder | str = DEGREVLEX,
                     budget: Budget = DEFAULT_BUDGET) -> bool:
    if f.ring_dim != ideal.ring_dim:
        raise RingMismatchError("polynomial and ideal live in different rings")
    if f.is_zero():
        return True
    return groebner_basis(ideal, order, budget).normal_form(f, budget).is_zero()


def ideal_equal(I: IdealSpec, J: IdealSpec, order: MonomialOrder | str = DEGREVLEX,
                budget: Budget = DEFAULT_BUDGET) -> bool:
    """Equality of ideals via their reduced bases under a common order."""
    if I.ring_dim != J.ring_dim:
        raise RingMismatchError("ideals live in different rings")
    return (groebner_basis(I, order, budget).basis == groebner_basis(J, order, budget).basis)


def minimal_monomials(monos: Iterable[Monomial], order: MonomialOrder = DEGREVLEX) -> list:
    """Minimal generators of a monomial ideal, largest first."""
    out: list = []
    for m in sorted(set(monos), key=sum):
        if not any(mono_divides(o, m) for o in out):
            out.append(m)
    return order.sorted(out)


def initial_ideal(ideal: IdealSpec, order: MonomialOrder | str = LEX,
                  budget: Budget = DEFAULT_BUDGET) -> IdealSpec:
    """Minimal monomial generators of the leading-term ideal."""
    order = MonomialOrder.parse(order)
    G = groebner_basis(ideal, order, budget)
    monos = minimal_monomials(G.leading_monomials(), order)
    return IdealSpec(ideal.ctx, tuple(Polynomial._raw(ideal.ring_dim, {m: Q(1)}) for m in monos))


@dataclass(frozen=True)
class DimensionReport:
    krull_dim: int
    height: int
    independent_set: tuple

    def as_dict(self) -> dict:
        return {"krull_dim": self.krull_dim, "height": self.height,
                "independent_set": [i + 1 for i in self.independent_set]}


def dimension_of_monomial_ideal(monos: Iterable[Monomial], n: int) -> DimensionReport:
    """Largest variable subset containing the support of no generator.

    The unit ideal (generator 1) reports krull_dim -1 and height n + 1.
    """
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in monos]
    minimal = [s for s in supports if not any(o < s for o in supports)]
    if any(not s for s in minimal):
        return DimensionReport(-1, n + 1, ())
    for size in range(n, -1, -1):
        for subset in itertools.combinations(range(n), size):
            chosen = frozenset(subset)
            if not any(s <= chosen for s in minimal):
                return DimensionReport(size, n - size, subset)
    raise AssertionError("the empty set is always independent for a proper ideal")


def krull_dimension(ideal: IdealSpec, budget: Budget = DEFAULT_BUDGET,
                    basis: GroebnerBasis | None = None) -> DimensionReport:
    """Krull dimension of S/I (homogeneous I) from a degrevlex initial ideal."""
    ideal.require_homogeneous()
    if basis is None:
        basis = groebner_basis(ideal, DEGREVLEX, budget)
    return dimension_of_monomial_ideal(basis.leading_monomials(), ideal.ring_dim)


def _pure_power_variables(monos: Iterable[Monomial]) -> set:
    found = set()
    for m in monos:
        support = [i for i, e in enumerate(m) if e]
        if len(support) == 1:
            found.add(support[0])
    return found


def radical_is_irrelevant_maximal(ideal: IdealSpec, budget: Budget = DEFAULT_BUDGET,
                                  basis: GroebnerBasis | None = None) -> bool:
    """True iff the homogeneous ideal's only common zero is the origin."""
    ideal.require_homogeneous()
    if basis is None:
        basis = groebner_basis(ideal, DEGREVLEX, budget)
    if basis.is_unit():
        return False
    return len(_pure_power_variables(basis.leading_monomials())) == ideal.ring_dim


def standard_monomials(basis: GroebnerBasis) -> list:
    """Monomials outside the initial ideal, by degree then descending order."""
    leads = basis.leading_monomials()
    n = basis.ring_dim
    if basis.is_unit():
        return []
    if len(_pure_power_variables(leads)) != n:
        raise NotArtinianError("quotient is not finite-dimensional")
    out: list = []
    layer = [(0,) * n]
    while layer:
        layer = basis.order.sorted(layer)
        out.extend(layer)
        nxt = set()
        for m in layer:
            for i in range(n):
                c = m[:i] + (m[i] + 1,) + m[i + 1:]
                if not any(mono_divides(l, c) for l in leads):
                    nxt.add(c)
        layer = list(nxt)
    return out


def quotient_basis(ideal: IdealSpec, order: MonomialOrder | str = DEGREVLEX,
                   budget: Budget = DEFAULT_BUDGET) -> list:
    return standard_monomials(groebner_basis(ideal, MonomialOrder.parse(order), budget))
