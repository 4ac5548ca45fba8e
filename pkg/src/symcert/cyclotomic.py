"""Vanishing sums of roots of unity, decided exactly in Z[x]/(Phi_m)."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from . import _kernels


class EnumerationBudgetExceeded(RuntimeError):
    pass


DEFAULT_ENUM_BUDGET = 50_000_000


# --- integer polynomials (coefficient lists, lowest degree first) ----------

def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _divmod_monic(num: list, den: list) -> tuple:
    num = list(num)
    d = len(den) - 1
    if d < 0 or den[-1] != 1:
        raise ValueError("divisor must be monic")
    if len(num) <= d:
        return [0], _trim(num)
    quo = [0] * (len(num) - d)
    for i in range(len(num) - 1, d - 1, -1):
        c = num[i]
        if c:
            quo[i - d] = c
            for j in range(d + 1):
                num[i - d + j] -= c * den[j]
    return _trim(quo) or [0], _trim(num[:d])


@lru_cache(maxsize=None)
def _cyclotomic(m: int) -> tuple:
    p = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            p, r = _divmod_monic(p, list(_cyclotomic(d)))
            if r:
                raise AssertionError("cyclotomic division must be exact")
    return tuple(p)


def cyclotomic_poly(m: int) -> list:
    """Phi_m as integer coefficients, constant term first."""
    if m < 1:
        raise ValueError("m must be positive")
    return list(_cyclotomic(m))


def euler_phi(m: int) -> int:
    return sum(1 for t in range(1, m + 1) if math.gcd(t, m) == 1)


def prime_factors(m: int) -> list:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def radical(m: int) -> int:
    return math.prod(prime_factors(m))


@lru_cache(maxsize=None)
def _residue_table(m: int) -> tuple:
    """x^e mod Phi_m for e in [0, m), each as a tuple of length phi(m)."""
    phi_m = _cyclotomic(m)
    deg = len(phi_m) - 1
    rows = []
    for e in range(m):
        _, r = _divmod_monic([0] * e + [1], list(phi_m))
        rows.append(tuple(r + [0] * (deg - len(r))))
    return tuple(rows)


# --- vanishing sums --------------------------------------------------------

@dataclass(frozen=True)
class RootSumSpec:
    """The sum of zeta^(k * e) over the exponent multiset, zeta a primitive m-th root."""

    m: int
    exponents: tuple
    k: int = 1

    def __post_init__(self):
        if self.m < 1 or self.k < 1:
            raise ValueError("modulus and power must be positive")
        object.__setattr__(self, "exponents", tuple(sorted(int(e) % self.m for e in self.exponents)))

    @property
    def weight(self) -> int:
        return len(self.exponents)


def vanishes(spec: RootSumSpec) -> bool:
    """Exact test: Phi_m divides sum x^((k e) mod m)."""
    m = spec.m
    poly = [0] * m
    for e in spec.exponents:
        poly[(spec.k * e) % m] += 1
    _, r = _divmod_monic(poly, cyclotomic_poly(m))
    return not r


def reduced_modulus(m: int, k: int) -> int:
    """k-th powers of the m-th roots of unity are exactly the (m / gcd(m, k))-th roots."""
    return m // math.gcd(m, k)


def find_vanishing(m: int, n: int, max_nodes: int = DEFAULT_ENUM_BUDGET) -> tuple:
    """A vanishing multiset of n m-th roots of unity (as exponents), or None.

    Returns ``(witness, nodes_visited)``.
    """
    if n < 0:
        raise ValueError("weight must be non-negative")
    table = _residue_table(m)
    try:
        return _kernels.vanishing_search(m, n, table, len(table[0]) if table else 0, max_nodes)
    except _kernels.KernelLimit as exc:
        raise EnumerationBudgetExceeded(str(exc)) from None


def lam_leung_weights(m: int, bound: int) -> set:
    """N q_1 + ... + N q_r intersected with [0, bound], q_i the primes dividing m."""
    reach = {0}
    for q in prime_factors(m):
        for w in range(q, bound + 1):
            if w - q in reach:
                reach.add(w)
    return {w for w in reach if w <= bound}


@dataclass(frozen=True)
class WeightReport:
    m: int
    k: int
    bound: int
    reduced_modulus: int
    weights_bruteforce: frozenset
    weights_closedform: frozenset | None
    witnesses: dict = field(default_factory=dict, compare=False)
    nodes: int = field(default=0, compare=False)

    @property
    def agreement(self) -> bool:
        return self.weights_closedform is not None and self.weights_bruteforce == self.weights_closedform

    def as_dict(self, with_witnesses: bool = True) -> dict:
        out = {
            "m": self.m, "k": self.k, "bound": self.bound,
            "reduced_modulus": self.reduced_modulus,
            "weights_bruteforce": sorted(self.weights_bruteforce),
            "weights_closedform": None if self.weights_closedform is None
            else sorted(self.weights_closedform),
            "agreement": self.agreement,
        }
        if with_witnesses:
            out["witnesses"] = {str(w): list(v) for w, v in sorted(self.witnesses.items())}
        return out


def weight_set(m: int, k: int, bound: int, max_nodes: int = DEFAULT_ENUM_BUDGET) -> WeightReport:
    """Weights n <= bound admitting a vanishing sum of k-th powers of m-th roots of unity.

    Weights are found by search; a weight that is the sum of two already found
    weights gets the concatenated witness without searching.  Witness exponents
    are for the reduced modulus m / gcd(m, k).
    """
    if m < 1 or k < 1:
        raise ValueError("modulus and power must be positive")
    if bound < 0:
        raise ValueError("bound must be non-negative")
    mm = reduced_modulus(m, k)
    found = {0: ()}
    nodes = 0
    for n in range(1, bound + 1):
        split = next((a for a in sorted(found) if a and n - a in found and n - a > 0), None)
        if split is not None:
            found[n] = tuple(sorted(found[split] + found[n - split]))
            continue
        witness, used = find_vanishing(mm, n, max_nodes)
        nodes += used
        if witness is not None:
            found[n] = tuple(witness)
    return WeightReport(m, k, bound, mm, frozenset(found), frozenset(lam_leung_weights(mm, bound)),
                        found, nodes)


def no_vanish_guarantee(m: int, n: int, k: int) -> bool:
    """True when the smallest prime factor of m exceeds max(n, k)."""
    if m < 2 or n < 1 or k < 1:
        raise ValueError("need m >= 2, n >= 1, k >= 1")
    return min(prime_factors(m)) > max(n, k)


def numeric_sum(m: int, exponents: Iterable[int], k: int = 1) -> complex:
    return sum(complex(math.cos(2 * math.pi * k * e / m), math.sin(2 * math.pi * k * e / m))
               for e in exponents)


@dataclass(frozen=True)
class SweepReport:
    max_m: int
    max_k: int
    max_n: int
    cases_checked: int
    counterexamples: tuple      # (m, k, n, witness exponents)
    nodes: int = field(default=0, compare=False)

    def as_dict(self) -> dict:
        return {"max_m": self.max_m, "max_k": self.max_k, "max_n": self.max_n,
                "cases_checked": self.cases_checked,
                "counterexamples": [[m, k, n, list(w)] for m, k, n, w in self.counterexamples]}


def soundness_sweep(max_m: int, max_k: int, max_n: int,
                    max_nodes: int = DEFAULT_ENUM_BUDGET) -> SweepReport:
    """Search for a vanishing sum wherever no_vanish_guarantee claims there is none."""
    checked = 0
    nodes = 0
    bad = []
    for m in range(2, max_m + 1):
        for k in range(1, max_k + 1):
            for n in range(1, max_n + 1):
                if not no_vanish_guarantee(m, n, k):
                    continue
                checked += 1
                witness, used = find_vanishing(reduced_modulus(m, k), n, max_nodes)
                nodes += used
                if witness is not None:
                    bad.append((m, k, n, tuple(witness)))
    return SweepReport(max_m, max_k, max_n, checked, tuple(bad), nodes)
