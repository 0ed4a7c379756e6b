"""Vanishing ideals of finite point sets: Groebner bases by evaluation.

For a finite nonempty set V inside {0,...,q-1}^n the vanishing ideal
I(V) in Q[x1,...,xn] has a finite normal set: the standard monomials,
those not divisible by the leading monomial of any ideal element.  The
number of standard monomials always equals |V|.

The construction walks candidate monomials in increasing order.  A
candidate whose evaluation vector on V is independent of the ones found
so far is standard; a dependent candidate yields a monic generator whose
tail is supported on the standard monomials below it.  The generators
collected this way form the reduced Groebner basis of I(V).

All linear algebra is exact.  Rows are kept as primitive integer vectors
(rescaling a row never changes its span), with an integer bookkeeping
vector expressing each row in terms of the original evaluation vectors;
the rational generator coefficients come from one exact division at the
end.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .polyring import (
    Monomial,
    Polynomial,
    TermOrder,
    leading_monomial,
)
from .tuples import EmptyPointSetError, Point, PointSet

__all__ = [
    "GroebnerBasis",
    "StandardMonomialSet",
    "vanishing_basis",
    "interpolate",
    "certify_groebner",
    "non_shatter_certificate",
]


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis, generators sorted by increasing leading
    monomial."""

    order: TermOrder
    generators: tuple[Polynomial, ...]

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.generators)

    def leading_monomials(self) -> tuple[Monomial, ...]:
        return tuple(leading_monomial(g, self.order) for g in self.generators)


@dataclass(frozen=True)
class StandardMonomialSet:
    """The normal set of an ideal, sorted ascending in its order."""

    order: TermOrder
    monomials: tuple[Monomial, ...]

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.monomials)

    def __contains__(self, m: object) -> bool:
        return m in self.monomials

    def as_set(self) -> frozenset[Monomial]:
        return frozenset(self.monomials)

    def exponent_vectors(self) -> frozenset[Point]:
        return frozenset(m.exponents for m in self.monomials)


def _strip_content(vec: list[int], comb: dict[int, int]) -> tuple[list[int], dict[int, int]]:
    g = 0
    for x in vec:
        g = math.gcd(g, x)
        if g == 1:
            return vec, comb
    for c in comb.values():
        g = math.gcd(g, c)
        if g == 1:
            return vec, comb
    if g > 1:
        vec = [x // g for x in vec]
        comb = {k: c // g for k, c in comb.items()}
    return vec, comb


def _reduce_against(
    vec: list[int],
    comb: dict[int, int],
    rows: list[tuple[int, list[int], dict[int, int]]],
) -> tuple[list[int], dict[int, int]]:
    # Every row is zero at the pivots of all rows inserted before it, so a
    # single pass in insertion order clears every pivot position for good.
    for pivot, rvec, rcomb in rows:
        b = vec[pivot]
        if not b:
            continue
        a = rvec[pivot]
        vec = [a * x - b * y for x, y in zip(vec, rvec)]
        merged = {k: a * c for k, c in comb.items()}
        for k, c in rcomb.items():
            cur = merged.get(k, 0) - b * c
            if cur:
                merged[k] = cur
            else:
                merged.pop(k, None)
        vec, comb = _strip_content(vec, merged)
    return vec, comb


def vanishing_basis(
    v: PointSet, order: TermOrder = TermOrder.DEGLEX
) -> tuple[GroebnerBasis, StandardMonomialSet]:
    """Reduced Groebner basis and standard monomials of I(V).

    Candidates are visited in increasing order, skipping multiples of the
    leading monomials already found, so the standard monomials come out
    as exactly the |V| order-minimal monomials with independent
    evaluation vectors.
    """
    if not len(v):
        raise EmptyPointSetError("the vanishing ideal of the empty set is the whole ring")
    pts = v.points
    n = v.n

    heap: list[tuple] = []
    seen: set[Point] = set()

    def push(m: Monomial) -> None:
        if m.exponents not in seen:
            seen.add(m.exponents)
            heapq.heappush(heap, (order.key(m), m.exponents))

    push(Monomial.unit(n))

    standard: list[Monomial] = []
    rows: list[tuple[int, list[int], dict[int, int]]] = []
    generators: list[Polynomial] = []
    leads: list[Monomial] = []

    while heap:
        _, expo = heapq.heappop(heap)
        m = Monomial(expo)
        if any(lead.divides(m) for lead in leads):
            continue
        vec = [m.evaluate(p) for p in pts]
        vec, comb = _reduce_against(vec, {-1: 1}, rows)
        if any(vec):
            pivot = next(i for i, x in enumerate(vec) if x)
            comb[len(standard)] = comb.pop(-1)
            rows.append((pivot, vec, comb))
            standard.append(m)
            for i in range(1, n + 1):
                push(m * Monomial.variable(i, n))
        else:
            alpha = comb.pop(-1)
            terms: dict[Monomial, Fraction] = {m: Fraction(1)}
            for k, c in comb.items():
                terms[standard[k]] = Fraction(c, alpha)
            generators.append(Polynomial(n, terms))
            leads.append(m)

    if len(standard) != len(pts):
        raise AssertionError(
            f"engine error: found {len(standard)} standard monomials for {len(pts)} points"
        )
    return (
        GroebnerBasis(order, tuple(generators)),
        StandardMonomialSet(order, tuple(standard)),
    )


def interpolate(
    v: PointSet,
    values: Mapping[Point, int | Fraction],
    order: TermOrder = TermOrder.DEGLEX,
) -> Polynomial:
    """The unique polynomial supported on the standard monomials of I(V)
    taking the prescribed value at every point of V."""
    if not len(v):
        raise EmptyPointSetError("cannot interpolate over the empty set")
    keys = {tuple(k) for k in values}
    if keys != set(v.points):
        missing = sorted(set(v.points) - keys)
        extra = sorted(keys - set(v.points))
        raise ValueError(f"values must cover V exactly (missing {missing}, extra {extra})")

    _, sm = vanishing_basis(v, order)
    mons = sm.monomials
    matrix = [[Fraction(m.evaluate(p)) for m in mons] for p in v.points]
    rhs = [Fraction(values[p]) for p in v.points]
    coeffs = _solve_square(matrix, rhs)
    return Polynomial(v.n, {m: c for m, c in zip(mons, coeffs) if c})


def _solve_square(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    # Exact Gaussian elimination; pivot on the first row with a nonzero entry.
    size = len(matrix)
    a = [row[:] + [b] for row, b in zip(matrix, rhs)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col]), None)
        if pivot is None:
            raise ArithmeticError("singular evaluation matrix")
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(size):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return [a[r][size] for r in range(size)]


def certify_groebner(v: PointSet, basis: Sequence[Polynomial], order: TermOrder) -> bool:
    """Certify that a list of polynomials is a Groebner basis of I(V).

    The test is the standard counting argument: every element must vanish
    on V, every variable must have a pure power among the leading
    monomials (otherwise the normal set is infinite), and the number of
    monomials divisible by no leading monomial must equal |V|.  Accepts
    reduced and non-reduced bases alike.
    """
    n, q = v.n, v.q
    for g in basis:
        if g.n != n:
            raise ValueError(f"dimension mismatch: {g.n} vs {n}")
        if any(g.evaluate(p) != 0 for p in v):
            return False
    leads = [leading_monomial(g, order) for g in basis if not g.is_zero()]

    for i in range(1, n + 1):
        pure_power = Monomial.variable(i, n).power(q)
        if not any(lm.divides(pure_power) for lm in leads):
            return False

    free = 0
    for expo in _box(n, q):
        m = Monomial(expo)
        if not any(lm.divides(m) for lm in leads):
            free += 1
            if free > len(v):
                return False
    return free == len(v)


def _box(n: int, q: int) -> Iterator[Point]:
    if n == 0:
        yield ()
        return
    for c in range(q):
        for rest in _box(n - 1, q):
            yield (c,) + rest


def non_shatter_certificate(v: PointSet, coords: Iterable[int], witness: Sequence[int]) -> Polynomial:
    """A polynomial vanishing on V whose leading monomial is the full power
    product over the given coordinates.

    The witness is a pattern no point of V matches on the coordinates; for
    each coordinate j the factor is the product of (x_j - i) over all
    alphabet values i except the witness value, so the product vanishes
    wherever any coordinate avoids the witness value, which is everywhere
    on V.  Its leading monomial under any admissible order is
    prod_j x_j^(q-1).
    """
    n, q = v.n, v.q
    cs = sorted(set(int(c) for c in coords))
    if any(not 1 <= c <= n for c in cs):
        raise ValueError(f"coordinates {cs} out of range 1..{n}")
    if len(witness) != n:
        raise ValueError(f"witness has length {len(witness)}, expected {n}")
    if any(not 0 <= w < q for w in witness):
        raise ValueError(f"witness {tuple(witness)} has coordinates outside 0..{q - 1}")
    for p in v:
        if all(p[c - 1] == witness[c - 1] for c in cs):
            raise ValueError(
                f"witness {tuple(witness)} matches point {p} on coordinates {cs}"
            )

    out = Polynomial.constant(1, n)
    for c in cs:
        x = Polynomial.variable(c, n)
        for i in range(q):
            if i != witness[c - 1]:
                out = out * (x - i)
    return out
