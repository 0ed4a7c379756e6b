"""Independent brute-force oracles used to cross-check the package.

Everything here is deliberately written from scratch against the bare
definitions: dense rational Gaussian elimination over explicit evaluation
matrices, direct restriction counting for shattering, naive prefix scans
for the ballot condition.  No code is shared with the package beyond the
raw point tuples, so agreement is meaningful evidence.
"""

from fractions import Fraction
from itertools import combinations, product


def lex_key(exponents):
    return tuple(exponents)


def deglex_key(exponents):
    return (sum(exponents), tuple(exponents))


def box(n, q):
    return sorted(product(range(q), repeat=n))


def eval_monomial(exponents, point):
    value = 1
    for e, c in zip(exponents, point):
        value *= c**e
    return value


def _eliminate(rows, vec):
    """Reduce vec against echelon rows in place; return the reduced vector."""
    vec = list(vec)
    for pivot, row in rows:
        if vec[pivot]:
            factor = vec[pivot] / row[pivot]
            vec = [a - factor * b for a, b in zip(vec, row)]
    return vec


def reference_sm(points, q, key):
    """Standard monomial exponent vectors of I(points), smallest-first greedy.

    A monomial is standard iff its evaluation vector on the points is
    linearly independent of the evaluation vectors of all order-smaller
    monomials; scanning the box in increasing order and keeping the
    independent ones therefore yields exactly the standard set.
    """
    points = sorted(set(points))
    n = len(points[0])
    rows = []
    kept = []
    for exponents in sorted(product(range(q), repeat=n), key=key):
        vec = [Fraction(eval_monomial(exponents, p)) for p in points]
        reduced = _eliminate(rows, vec)
        pivot = next((i for i, a in enumerate(reduced) if a), None)
        if pivot is not None:
            rows.append((pivot, reduced))
            kept.append(tuple(exponents))
            if len(kept) == len(points):
                break
    return set(kept)


def reference_shatters(points, q, coords):
    coords = sorted(coords)
    seen = {tuple(p[i - 1] for i in coords) for p in points}
    return len(seen) == q ** len(coords)


def reference_shattered_sets(points, q):
    n = len(points[0])
    out = []
    for r in range(n + 1):
        for coords in combinations(range(1, n + 1), r):
            if reference_shatters(points, q, coords):
                out.append(frozenset(coords))
    return set(out)


def reference_ballot(values, q):
    full = 0
    for index, value in enumerate(values, start=1):
        if value == q - 1:
            full += 1
        if index % 2 == 1 and full > (index + 1) // 2 - 1:
            return False
    return True


def rank_of(matrix):
    rows = []
    for raw in matrix:
        reduced = _eliminate(rows, [Fraction(a) for a in raw])
        pivot = next((i for i, a in enumerate(reduced) if a), None)
        if pivot is not None:
            rows.append((pivot, reduced))
    return len(rows)
