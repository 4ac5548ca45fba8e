"""Exact sparse multivariate polynomials over Q.

Monomials are plain tuples of non-negative ints, one entry per variable.
Coefficients are exact rationals (``gmpy2.mpq`` when available, otherwise
``fractions.Fraction``).  A :class:`Polynomial` is immutable; its terms are
stored in degree-reverse-lexicographic order, largest monomial first, so two
polynomials are equal exactly when their term maps are equal.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    Q = Fraction

Monomial = tuple

MAX_EXPONENT = 2**31 - 1


class RingMismatchError(ValueError):
    """Operands live in polynomial rings of different dimension."""


class ExponentOverflowError(OverflowError):
    pass


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownVariableError(ValueError):
    pass


def coefficient(value) -> "Q":
    """Coerce ints, Fractions, mpq values or 'p/q' strings to the exact type."""
    if isinstance(value, Q):
        return value
    if isinstance(value, Fraction):
        return Q(value.numerator, value.denominator)
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, (int, str)):
        return Q(value)
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return Q(int(value.numerator), int(value.denominator))
    raise TypeError(f"cannot use {type(value).__name__} as an exact coefficient")


def as_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


# --- monomials -------------------------------------------------------------

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    out = tuple(x + y for x, y in zip(a, b))
    if out and max(out) > MAX_EXPONENT:
        raise ExponentOverflowError("exponent exceeds machine width")
    return out


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b; caller guarantees b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(b: Monomial, a: Monomial) -> bool:
    """True when b divides a."""
    return all(y <= x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


class MonomialOrder(enum.Enum):
    """Monomial orders with x1 > x2 > ... > xn."""

    LEX = "lex"
    DEGREVLEX = "degrevlex"

    def key(self, m: Monomial) -> tuple:
        """Sort key, larger key means larger monomial."""
        if self is MonomialOrder.LEX:
            return m
        return (sum(m),) + tuple(-e for e in reversed(m))

    def heap_key(self, m: Monomial) -> tuple:
        """Sort key, smaller key means larger monomial (for min-heaps)."""
        if self is MonomialOrder.LEX:
            return tuple(-e for e in m)
        return (-sum(m),) + tuple(reversed(m))

    def sorted(self, monos: Iterable[Monomial]) -> list:
        """Monomials from largest to smallest."""
        return sorted(monos, key=self.heap_key)

    @classmethod
    def parse(cls, name: "str | MonomialOrder") -> "MonomialOrder":
        if isinstance(name, MonomialOrder):
            return name
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown monomial order {name!r}") from None


DEGREVLEX = MonomialOrder.DEGREVLEX
LEX = MonomialOrder.LEX


# --- polynomials -----------------------------------------------------------

class Polynomial:
    """Immutable sparse polynomial in ``ring_dim`` variables."""

    __slots__ = ("ring_dim", "_terms", "_hash")

    def __init__(self, ring_dim: int, terms: Mapping | Iterable = ()):
        if ring_dim < 1:
            raise ValueError("ring_dim must be positive")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for mono, c in items:
            mono = tuple(int(e) for e in mono)
            if len(mono) != ring_dim:
                raise RingMismatchError(
                    f"monomial {mono} does not have {ring_dim} exponents")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            if any(e > MAX_EXPONENT for e in mono):
                raise ExponentOverflowError(f"exponent overflow in {mono}")
            acc[mono] = acc.get(mono, 0) + coefficient(c)
        self._init(ring_dim, acc)

    def _init(self, ring_dim: int, acc: dict) -> None:
        self.ring_dim = ring_dim
        key = DEGREVLEX.heap_key
        self._terms = {m: acc[m] for m in sorted(acc, key=key) if acc[m] != 0}
        self._hash = None

    @classmethod
    def _raw(cls, ring_dim: int, acc: dict) -> "Polynomial":
        # trusted constructor: monomials already validated, coefficients exact
        p = cls.__new__(cls)
        p._init(ring_dim, acc)
        return p

    # constructors
    @classmethod
    def zero(cls, ring_dim: int) -> "Polynomial":
        return cls._raw(ring_dim, {})

    @classmethod
    def constant(cls, ring_dim: int, c) -> "Polynomial":
        return cls._raw(ring_dim, {(0,) * ring_dim: coefficient(c)})

    @classmethod
    def variable(cls, ring_dim: int, i: int) -> "Polynomial":
        """The variable x_i, 1-based."""
        if not 1 <= i <= ring_dim:
            raise IndexError(f"variable index {i} out of range 1..{ring_dim}")
        mono = tuple(1 if j == i - 1 else 0 for j in range(ring_dim))
        return cls._raw(ring_dim, {mono: Q(1)})

    @classmethod
    def monomial(cls, exponents: Sequence[int], c=1) -> "Polynomial":
        return cls(len(exponents), {tuple(exponents): c})

    # inspection
    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def items(self) -> Iterator:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1
                                   and not any(next(iter(self._terms))))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def leading_monomial(self, order: MonomialOrder = DEGREVLEX) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        if order is DEGREVLEX:
            return next(iter(self._terms))
        return min(self._terms, key=order.heap_key)

    def leading_coefficient(self, order: MonomialOrder = DEGREVLEX):
        return self._terms[self.leading_monomial(order)]

    def coefficient_of(self, mono: Monomial):
        return self._terms.get(tuple(mono), Q(0))

    def variables_used(self) -> set:
        return {i for m in self._terms for i, e in enumerate(m) if e}

    # arithmetic
    def _check(self, other: "Polynomial") -> None:
        if self.ring_dim != other.ring_dim:
            raise RingMismatchError(
                f"ring dimensions differ: {self.ring_dim} vs {other.ring_dim}")

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.ring_dim, other)

    def __add__(self, other) -> "Polynomial":
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, 0) + c
        return Polynomial._raw(self.ring_dim, acc)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.ring_dim, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, 0) - c
        return Polynomial._raw(self.ring_dim, acc)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        self._check(other)
        acc: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                acc[m] = acc.get(m, 0) + c1 * c2
        return Polynomial._raw(self.ring_dim, acc)

    def __rmul__(self, other) -> "Polynomial":
        return self.scale(other)

    def scale(self, c) -> "Polynomial":
        c = coefficient(c)
        if c == 0:
            return Polynomial.zero(self.ring_dim)
        return Polynomial._raw(self.ring_dim, {m: c * v for m, v in self._terms.items()})

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers need a non-negative integer exponent")
        result = Polynomial.constant(self.ring_dim, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_monomial(self, mono: Monomial, c=1) -> "Polynomial":
        c = coefficient(c)
        return Polynomial._raw(
            self.ring_dim, {mono_mul(m, mono): c * v for m, v in self._terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.ring_dim == other.ring_dim and self._terms == other._terms
        if isinstance(other, (int, Fraction)) or isinstance(other, Q):
            return self == Polynomial.constant(self.ring_dim, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring_dim, frozenset(self._terms.items())))
        return self._hash

    # normalization
    def content(self):
        """Positive rational c with self / c having coprime integer coefficients."""
        if not self._terms:
            return Q(0)
        num = 0
        den = 1
        for c in self._terms.values():
            num = math.gcd(num, int(c.numerator))
            den = den * int(c.denominator) // math.gcd(den, int(c.denominator))
        return Q(num, den)

    def primitive(self) -> "Polynomial":
        """Divide by content and make the leading coefficient positive."""
        if not self._terms:
            return self
        c = self.content()
        if self.leading_coefficient() < 0:
            c = -c
        return self.scale(1 / c)

    def monic(self, order: MonomialOrder = DEGREVLEX) -> "Polynomial":
        if not self._terms:
            return self
        return self.scale(1 / self.leading_coefficient(order))

    # calculus and substitutions
    def derivative(self, i: int) -> "Polynomial":
        """Formal partial derivative with respect to x_i (1-based)."""
        if not 1 <= i <= self.ring_dim:
            raise IndexError(f"variable index {i} out of range 1..{self.ring_dim}")
        j = i - 1
        acc = {}
        for m, c in self._terms.items():
            e = m[j]
            if e:
                acc[m[:j] + (e - 1,) + m[j + 1:]] = c * e
        return Polynomial._raw(self.ring_dim, acc)

    def permute(self, perm: Sequence[int]) -> "Polynomial":
        """Substitute x_{i+1} -> x_{perm[i]+1} (0-based permutation)."""
        n = self.ring_dim
        acc = {}
        for m, c in self._terms.items():
            new = [0] * n
            for i, e in enumerate(m):
                new[perm[i]] = e
            acc[tuple(new)] = c
        return Polynomial._raw(n, acc)

    def embed(self, ring_dim: int, offset: int = 0) -> "Polynomial":
        """Regard self as a polynomial in variables offset+1 .. offset+n of a bigger ring."""
        if offset < 0 or offset + self.ring_dim > ring_dim:
            raise ValueError("embedding does not fit")
        pad_l = (0,) * offset
        pad_r = (0,) * (ring_dim - offset - self.ring_dim)
        return Polynomial._raw(ring_dim, {pad_l + m + pad_r: c for m, c in self._terms.items()})

    def evaluate(self, point: Sequence):
        total = 0
        for m, c in self._terms.items():
            t = c
            for x, e in zip(point, m):
                if e:
                    t = t * x ** e
            total = total + t
        return total

    def __repr__(self) -> str:
        return f"Polynomial({self.ring_dim}, {format_polynomial(self)!r})"

    def __str__(self) -> str:
        return format_polynomial(self)


# --- ring contexts ---------------------------------------------------------

@dataclass(frozen=True)
class PolyRingContext:
    ring_dim: int
    names: tuple = ()
    order: MonomialOrder = DEGREVLEX
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.ring_dim < 1:
            raise ValueError("ring_dim must be positive")
        names = tuple(self.names) or tuple(f"x{i}" for i in range(1, self.ring_dim + 1))
        if len(names) != self.ring_dim:
            raise ValueError("need exactly one name per variable")
        if any(not s for s in names) or len(set(names)) != len(names):
            raise ValueError("variable names must be distinct and nonempty")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "order", MonomialOrder.parse(self.order))
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(names)})

    @classmethod
    def standard(cls, n: int, order: MonomialOrder | str = DEGREVLEX) -> "PolyRingContext":
        return cls(n, (), MonomialOrder.parse(order))

    def index_of(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariableError(f"unknown variable {name!r}") from None

    def var(self, i: int) -> Polynomial:
        return Polynomial.variable(self.ring_dim, i)

    def variables(self) -> list:
        return [self.var(i) for i in range(1, self.ring_dim + 1)]

    def const(self, c) -> Polynomial:
        return Polynomial.constant(self.ring_dim, c)

    def parse(self, text: str) -> Polynomial:
        return parse_polynomial(text, self)

    def format(self, f: Polynomial) -> str:
        return format_polynomial(f, self)

    def concat(self, other: "PolyRingContext") -> "PolyRingContext":
        """Context for the ring in the variables of self followed by those of other."""
        names = list(self.names)
        taken = set(names)
        for k, s in enumerate(other.names, 1):
            if s in taken:
                s = f"y{k}"
                while s in taken:
                    s = "y" + s
            names.append(s)
            taken.add(s)
        return PolyRingContext(self.ring_dim + other.ring_dim, tuple(names), self.order)


# --- text I/O --------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^]))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    end = len(text)
    while pos < end:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise PolynomialSyntaxError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        tokens.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    tokens.append(("end", "", end))
    return tokens


class _Parser:
    def __init__(self, text: str, ctx: PolyRingContext):
        self.tokens = _tokenize(text)
        self.i = 0
        self.ctx = ctx

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, what: str):
        tok = self.take()
        if tok[0] != kind:
            shown = tok[1] or "end of input"
            raise PolynomialSyntaxError(f"expected {what}, found {shown!r}", tok[2])
        return tok

    def expr(self) -> dict:
        acc: dict = {}
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        while True:
            mono, c = self.term()
            acc[mono] = acc.get(mono, 0) + sign * c
            kind, val, pos = self.peek()
            if kind == "end":
                return acc
            if kind == "op" and val in "+-":
                self.take()
                sign = -1 if val == "-" else 1
                continue
            raise PolynomialSyntaxError(f"unexpected {val!r}", pos)

    def term(self):
        n = self.ctx.ring_dim
        exps = [0] * n
        kind, val, pos = self.peek()
        if kind == "num":
            c = self.coeff()
        elif kind == "name":
            c = Q(1)
            self.factor(exps)
        else:
            raise PolynomialSyntaxError(f"expected a term, found {val or 'end of input'!r}", pos)
        while self.peek()[:2] == ("op", "*"):
            self.take()
            self.factor(exps)
        return tuple(exps), c

    def coeff(self):
        num = int(self.take()[1])
        if self.peek()[:2] == ("op", "/"):
            self.take()
            tok = self.expect("num", "a denominator")
            den = int(tok[1])
            if den == 0:
                raise PolynomialSyntaxError("zero denominator", tok[2])
            return Q(num, den)
        return Q(num)

    def factor(self, exps: list) -> None:
        _, name, pos = self.expect("name", "a variable")
        try:
            idx = self.ctx.index_of(name)
        except UnknownVariableError:
            raise UnknownVariableError(f"unknown variable {name!r} at position {pos}") from None
        e = 1
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.expect("num", "an exponent")
            e = int(tok[1])
            if e > MAX_EXPONENT:
                raise ExponentOverflowError(f"exponent {e} too large at position {tok[2]}")
        exps[idx] += e
        if exps[idx] > MAX_EXPONENT:
            raise ExponentOverflowError(f"exponent overflow at position {pos}")


def parse_polynomial(text: str, ctx: PolyRingContext | int) -> Polynomial:
    """Parse ``text`` with the grammar

        expr := term (('+'|'-') term)* ; term := coeff ('*' factor)* | factor ('*' factor)*
        factor := var ('^' nat)? ; coeff := int | int '/' nat

    A single leading sign is accepted.  Whitespace is ignored.
    """
    if isinstance(ctx, int):
        ctx = PolyRingContext.standard(ctx)
    acc = _Parser(text, ctx).expr()
    return Polynomial._raw(ctx.ring_dim, acc)


def _format_coeff(c) -> str:
    c = coefficient(c)
    if c.denominator == 1:
        return str(int(c.numerator))
    return f"{int(c.numerator)}/{int(c.denominator)}"


def format_polynomial(f: Polynomial, ctx: PolyRingContext | None = None) -> str:
    if ctx is None:
        names = [f"x{i}" for i in range(1, f.ring_dim + 1)]
    else:
        names = ctx.names
    if f.is_zero():
        return "0"
    parts = []
    for k, (m, c) in enumerate(f.items()):
        neg = c < 0
        a = -c if neg else c
        factors = [names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(m) if e]
        if not factors:
            body = _format_coeff(a)
        elif a == 1:
            body = "*".join(factors)
        else:
            body = _format_coeff(a) + "*" + "*".join(factors)
        if k == 0:
            parts.append("-" + body if neg else body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


# --- helpers used by several modules ---------------------------------------

def arith(op: str, *operands) -> Polynomial:
    """Dispatch a ring operation by name: add, sub, mul, pow, scale."""
    if op == "add":
        a, b = operands
        return a + b
    if op == "sub":
        a, b = operands
        return a - b
    if op == "mul":
        a, b = operands
        if isinstance(a, Polynomial) and isinstance(b, Polynomial):
            a._check(b)
        return a * b
    if op == "pow":
        a, k = operands
        return a ** int(k)
    if op == "scale":
        a, c = operands
        return a.scale(c)
    raise ValueError(f"unknown operation {op!r}")


def partial_derivative(f: Polynomial, i: int) -> Polynomial:
    return f.derivative(i)


def determinant(matrix: Sequence[Sequence[Polynomial]], ring_dim: int | None = None) -> Polynomial:
    """Determinant by cofactor expansion along the sparsest row (exact, small sizes)."""
    k = len(matrix)
    if ring_dim is None:
        ring_dim = matrix[0][0].ring_dim
    if k == 0:
        return Polynomial.constant(ring_dim, 1)
    if any(len(row) != k for row in matrix):
        raise ValueError("determinant needs a square matrix")
    if k == 1:
        return matrix[0][0]
    if k == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    r = min(range(k), key=lambda i: sum(1 for x in matrix[i] if x))
    rest = [row for i, row in enumerate(matrix) if i != r]
    total = Polynomial.zero(ring_dim)
    for j, entry in enumerate(matrix[r]):
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in rest]
        term = entry * determinant(minor, ring_dim)
        total = total - term if (r + j) % 2 else total + term
    return total


def divide_exact(f: Polynomial, g: Polynomial, order: MonomialOrder = LEX) -> Polynomial:
    """Quotient f / g; raises ArithmeticError if g does not divide f."""
    f._check(g)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lm = g.leading_monomial(order)
    lc = g._terms[lm]
    rem = dict(f._terms)
    quo: dict = {}
    key = order.heap_key
    while rem:
        m = min(rem, key=key)
        if not mono_divides(lm, m):
            raise ArithmeticError("division leaves a nonzero remainder")
        q = mono_div(m, lm)
        c = rem[m] / lc
        quo[q] = c
        for gm, gc in g._terms.items():
            t = mono_mul(gm, q)
            v = rem.get(t, 0) - c * gc
            if v == 0:
                rem.pop(t, None)
            else:
                rem[t] = v
    return Polynomial._raw(f.ring_dim, quo)
