"""Exact multivariate polynomial arithmetic over the rationals.

Everything lives in Q[x1, ..., xn].  The supported monomial orders refine
the variable precedence xn < ... < x1, so index 1 is always the most
significant variable.  Coefficients are arbitrary-precision rationals kept
in lowest terms; nothing in this module ever rounds.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class Monomial:
    """A power product x1^e1 * ... * xn^en stored as its exponent vector.

    Slot i-1 of ``exponents`` holds the exponent of x_i.  Exponents are
    non-negative; the empty product (all zeros) is the unit monomial.
    """

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.exponents, tuple):
            object.__setattr__(self, "exponents", tuple(self.exponents))
        for e in self.exponents:
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"exponents must be non-negative integers, got {self.exponents!r}")

    @classmethod
    def unit(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def variable(cls, i: int, n: int) -> "Monomial":
        """The monomial x_i (1-based index) in dimension n."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        return cls(tuple(int(j == i - 1) for j in range(n)))

    @classmethod
    def squarefree(cls, coords: Iterable[int], n: int) -> "Monomial":
        """The product of x_j over the 1-based coordinate set ``coords``."""
        cs = set(coords)
        if any(not 1 <= c <= n for c in cs):
            raise ValueError(f"coordinates {sorted(cs)} out of range 1..{n}")
        return cls(tuple(int(j + 1 in cs) for j in range(n)))

    @property
    def n(self) -> int:
        return len(self.exponents)

    def degree(self) -> int:
        return sum(self.exponents)

    def divides(self, other: "Monomial") -> bool:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def quotient(self, other: "Monomial") -> "Monomial":
        """self / other, defined only when other divides self."""
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def power(self, k: int) -> "Monomial":
        """Coordinatewise k-fold power (self**k)."""
        if k < 0:
            raise ValueError("power must be non-negative")
        return Monomial(tuple(e * k for e in self.exponents))

    def evaluate(self, point: Sequence[Scalar]) -> Scalar:
        if len(point) != self.n:
            raise ValueError(f"point has length {len(point)}, expected {self.n}")
        out: Scalar = 1
        for c, e in zip(point, self.exponents):
            if e:
                out *= c ** e
        return out

    def __repr__(self) -> str:
        return f"Monomial({render_monomial(self)!r})"


class TermOrder(str, Enum):
    """Admissible monomial orders; both refine xn < ... < x1."""

    LEX = "lex"
    DEGLEX = "deglex"

    def key(self, m: Monomial):
        """Sort key: monomials sort ascending in the order under this key."""
        if self is TermOrder.LEX:
            return m.exponents
        return (m.degree(), m.exponents)

    def compare(self, a: Monomial, b: Monomial) -> int:
        """Three-way comparison: -1 if a < b, 0 if equal, +1 if a > b."""
        if a.n != b.n:
            raise ValueError(f"dimension mismatch: {a.n} vs {b.n}")
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return -1
        if ka > kb:
            return 1
        return 0


class Polynomial:
    """A sparse polynomial over Q: a finite map from Monomial to nonzero Fraction.

    Instances are immutable by convention; all arithmetic returns new
    objects.  Dimension n is fixed at construction and operands must agree.
    """

    __slots__ = ("n", "_terms")

    def __init__(
        self,
        n: int,
        terms: Mapping[Monomial, Scalar] | Iterable[tuple[Monomial, Scalar]] = (),
    ) -> None:
        if n < 1:
            raise ValueError("dimension must be at least 1")
        items = terms.items() if isinstance(terms, Mapping) else terms
        store: dict[Monomial, Fraction] = {}
        for mono, coeff in items:
            if mono.n != n:
                raise ValueError(f"monomial dimension {mono.n} != {n}")
            c = store.get(mono, Fraction(0)) + Fraction(coeff)
            if c:
                store[mono] = c
            else:
                store.pop(mono, None)
        self.n = n
        self._terms = store

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(n)

    @classmethod
    def constant(cls, c: Scalar, n: int) -> "Polynomial":
        return cls(n, {Monomial.unit(n): c})

    @classmethod
    def variable(cls, i: int, n: int) -> "Polynomial":
        return cls(n, {Monomial.variable(i, n): 1})

    @classmethod
    def from_monomial(cls, m: Monomial, coeff: Scalar = 1) -> "Polynomial":
        return cls(m.n, {m: coeff})

    def is_zero(self) -> bool:
        return not self._terms

    def monomials(self) -> list[Monomial]:
        return list(self._terms)

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(m, Fraction(0))

    def items(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def degree(self) -> int:
        """Total degree; the zero polynomial has degree -1 by convention."""
        if not self._terms:
            return -1
        return max(m.degree() for m in self._terms)

    def __add__(self, other: "Polynomial | Scalar") -> "Polynomial":
        other = self._coerce(other)
        merged = dict(self._terms)
        for m, c in other._terms.items():
            merged[m] = merged.get(m, Fraction(0)) + c
        return Polynomial(self.n, merged)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "Polynomial | Scalar") -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other: "Polynomial | Scalar") -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial.zero(self.n)
            return Polynomial(self.n, {m: c * other for m, c in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        acc: dict[Monomial, Fraction] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = ma * mb
                acc[m] = acc.get(m, Fraction(0)) + ca * cb
        return Polynomial(self.n, acc)

    def __rmul__(self, other: Scalar) -> "Polynomial":
        return self * other

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("power must be non-negative")
        out = Polynomial.constant(1, self.n)
        for _ in range(k):
            out = out * self
        return out

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        """Evaluate at a point given as a coordinate sequence."""
        if len(point) != self.n:
            raise ValueError(f"point has length {len(point)}, expected {self.n}")
        total = Fraction(0)
        for m, c in self._terms.items():
            total += c * m.evaluate(point)
        return total

    def _coerce(self, other: "Polynomial | Scalar") -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.n != self.n:
                raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
            return other
        return Polynomial.constant(other, self.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"Polynomial({render_polynomial(self)!r})"


def leading_monomial(f: Polynomial, order: TermOrder) -> Monomial:
    """The order-largest monomial of a nonzero polynomial."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no leading monomial")
    return max(f.monomials(), key=order.key)


def leading_coefficient(f: Polynomial, order: TermOrder) -> Fraction:
    return f.coefficient(leading_monomial(f, order))


def normal_form(f: Polynomial, basis: Sequence[Polynomial], order: TermOrder) -> Polynomial:
    """Fully reduce f modulo a list of nonzero polynomials.

    At each step the order-largest reducible monomial of the work
    polynomial is cancelled against the first basis element whose leading
    monomial divides it, so the result is deterministic given the basis
    list order.  The remainder contains no monomial divisible by any
    basis leading monomial.
    """
    leads = []
    for g in basis:
        if g.is_zero():
            raise ValueError("basis elements must be nonzero")
        if g.n != f.n:
            raise ValueError(f"dimension mismatch: {f.n} vs {g.n}")
        lm = leading_monomial(g, order)
        leads.append((lm, g.coefficient(lm), g))

    work = f
    while True:
        hit = None
        for m in sorted(work.monomials(), key=order.key, reverse=True):
            for lm, lc, g in leads:
                if lm.divides(m):
                    hit = (m, lm, lc, g)
                    break
            if hit:
                break
        if hit is None:
            return work
        m, lm, lc, g = hit
        factor = Polynomial.from_monomial(m.quotient(lm), work.coefficient(m) / lc)
        work = work - factor * g


def field_polynomial(i: int, q: int, n: int) -> Polynomial:
    """The univariate product (x_i - 0)(x_i - 1)...(x_i - (q-1)) in dimension n.

    These n polynomials vanish exactly on the grid {0,...,q-1}^n and form
    a Groebner basis of its vanishing ideal under any admissible order.
    """
    if q < 2:
        raise ValueError("alphabet size q must be at least 2")
    x = Polynomial.variable(i, n)
    f = Polynomial.constant(1, n)
    for j in range(q):
        f = f * (x - j)
    return f


def indicator_polynomial(q: int) -> Polynomial:
    """The unique univariate polynomial of degree q-1 with p(0)=0 and p(i)=1
    for 1 <= i <= q-1.

    For q=2 this is x itself; composing with it collapses {1,...,q-1}
    onto 1 while fixing 0.
    """
    if q < 2:
        raise ValueError("alphabet size q must be at least 2")
    x = Polynomial.variable(1, 1)
    prod = Polynomial.constant(1, 1)
    fact = 1
    for j in range(1, q):
        prod = prod * (x - j)
        fact *= j
    sign = -1 if (q - 1) % 2 else 1
    return Polynomial.constant(1, 1) - prod * Fraction(sign, fact)


def binary_lift(g: Polynomial, q: int) -> Polynomial:
    """Substitute the 0/1 indicator for every variable of g.

    If g vanishes on a set of 0/1 points, the lift vanishes on every grid
    point whose support matches one of them, and its leading monomial is
    the (q-1)-th coordinatewise power of lm(g) under any admissible order.
    """
    p = indicator_polynomial(q)
    n = g.n

    def embed(i: int) -> Polynomial:
        # p written in x_i inside dimension n
        terms = {}
        for um, c in p.items():
            e = um.exponents[0]
            terms[Monomial(tuple(e if k == i - 1 else 0 for k in range(n)))] = c
        return Polynomial(n, terms)

    # powers[i][e] = p(x_i)^e, built on demand
    powers: dict[int, list[Polynomial]] = {}

    def embedded_power(i: int, e: int) -> Polynomial:
        cache = powers.setdefault(i, [Polynomial.constant(1, n), embed(i)])
        while len(cache) <= e:
            cache.append(cache[-1] * cache[1])
        return cache[e]

    out = Polynomial.zero(n)
    for m, c in g.items():
        term = Polynomial.constant(c, n)
        for i, e in enumerate(m.exponents, start=1):
            if e:
                term = term * embedded_power(i, e)
        out = out + term
    return out


def render_monomial(m: Monomial) -> str:
    """Text form like ``x1^2*x3``; the unit monomial renders as ``1``."""
    parts = []
    for i, e in enumerate(m.exponents, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


def render_polynomial(f: Polynomial, order: TermOrder = TermOrder.DEGLEX) -> str:
    """Render with terms in decreasing order, e.g. ``-1/2*x1^2 + 3/2*x1``."""
    if f.is_zero():
        return "0"
    pieces = []
    for m in sorted(f.monomials(), key=order.key, reverse=True):
        c = f.coefficient(m)
        mono = render_monomial(m)
        mag = abs(c)
        if mono == "1":
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        pieces.append(("-" if c < 0 else "+", body))
    sign, body = pieces[0]
    out = body if sign == "+" else f"-{body}"
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


_TOKEN = re.compile(r"\s*(?:(x\d+)|(\d+)|(\^)|(\*)|(/)|(\+)|(-))")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match:
            if text[pos:].strip():
                raise ValueError(f"cannot parse polynomial near {text[pos:pos + 10]!r}")
            break
        tokens.append(match.group(match.lastindex))
        pos = match.end()
    return tokens


def parse_polynomial(text: str, n: int) -> Polynomial:
    """Parse the grammar produced by render_polynomial in dimension n."""
    tokens = _tokenize(text)
    if not tokens:
        raise ValueError("empty polynomial text")
    pos = 0
    terms: list[tuple[Monomial, Fraction]] = []

    def peek() -> str | None:
        return tokens[pos] if pos < len(tokens) else None

    def take() -> str:
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def parse_number() -> Fraction:
        tok = take()
        if not tok.isdigit():
            raise ValueError(f"expected a number, got {tok!r}")
        value = Fraction(int(tok))
        if peek() == "/":
            take()
            den = take()
            if not den.isdigit() or int(den) == 0:
                raise ValueError(f"bad denominator {den!r}")
            value /= int(den)
        return value

    def parse_term(sign: int) -> tuple[Monomial, Fraction]:
        coeff = Fraction(sign)
        expo = [0] * n
        saw_factor = False
        while True:
            tok = peek()
            if tok is None:
                break
            if tok.isdigit():
                coeff *= parse_number()
            elif tok.startswith("x"):
                take()
                idx = int(tok[1:])
                if not 1 <= idx <= n:
                    raise ValueError(f"variable {tok} out of range for dimension {n}")
                e = 1
                if peek() == "^":
                    take()
                    etok = take()
                    if not etok.isdigit():
                        raise ValueError(f"bad exponent {etok!r}")
                    e = int(etok)
                expo[idx - 1] += e
            else:
                raise ValueError(f"unexpected token {tok!r}")
            saw_factor = True
            if peek() == "*":
                take()
                continue
            break
        if not saw_factor:
            raise ValueError("empty term in polynomial text")
        return Monomial(tuple(expo)), coeff

    sign = 1
    if peek() in {"+", "-"}:
        sign = -1 if take() == "-" else 1
    terms.append(parse_term(sign))
    while peek() is not None:
        tok = take()
        if tok == "+":
            sign = 1
        elif tok == "-":
            sign = -1
        else:
            raise ValueError(f"expected '+' or '-', got {tok!r}")
        terms.append(parse_term(sign))

    return Polynomial(n, terms)
