#!/usr/bin/env python3
"""Tabulate the shattering bounds against their extremal constructions.

Three tables: the level-count bound against the extremal system that meets
it, the sphere bound on its attainment diagonal n = s + d, and, where the
sphere is small enough to search exhaustively, the best subsystem below the
diagonal (the bound is strict there for q > 2).
"""

import argparse
from itertools import combinations

from shatterbasis.closedform import bound
from shatterbasis.tuples import PointSet, hamming_sphere, km_extremal, shattered_family

SEARCH_LIMIT = 14  # exhaustive best-subsystem search caps at 2^14 candidates


def max_shattered_size(v: PointSet) -> int:
    return max((len(s) for s in shattered_family(v)), default=0)


def best_without_large_shattered(v: PointSet, s: int) -> int:
    points = list(v)
    for size in range(len(points), 0, -1):
        for chosen in combinations(points, size):
            sub = PointSet(v.n, v.q, chosen)
            if max_shattered_size(sub) <= s:
                return size
    return 0


def level_count_table(n_max: int, s_max: int, q_max: int) -> None:
    print("level-count bound vs extremal construction")
    print(f"{'n':>3} {'s':>3} {'q':>3} {'bound':>7} {'attained':>9} {'gap':>5}")
    for q in range(2, q_max + 1):
        for n in range(1, n_max + 1):
            for s in range(0, min(s_max, n - 1) + 1):
                value = bound("km", n, s=s, q=q).value
                attained = len(km_extremal(n, s, q))
                print(f"{n:>3} {s:>3} {q:>3} {value:>7} {attained:>9} {value - attained:>5}")
    print()


def sphere_diagonal_table(n_max: int, q_max: int) -> None:
    print("sphere bound on the attainment diagonal n = s + d")
    print(f"{'n':>3} {'d':>3} {'s':>3} {'q':>3} {'bound':>7} {'attained':>9} {'gap':>5}")
    for q in range(2, q_max + 1):
        for n in range(2, n_max + 1):
            for d in range(1, n):
                s = n - d
                value = bound("hamming", n, d=d, s=s, q=q).value
                attained = len(hamming_sphere(n, d, q))
                print(
                    f"{n:>3} {d:>3} {s:>3} {q:>3} {value:>7} {attained:>9} "
                    f"{value - attained:>5}"
                )
    print()


def strict_gap_table(n_max: int, q_max: int) -> None:
    print("below the diagonal (s + d < n): exhaustive best vs bound")
    print(f"{'n':>3} {'d':>3} {'s':>3} {'q':>3} {'bound':>7} {'best':>6} {'gap':>5}")
    for q in range(3, q_max + 1):
        for n in range(2, n_max + 1):
            for d in range(1, n):
                for s in range(1, n - d):
                    sphere = hamming_sphere(n, d, q)
                    if len(sphere) > SEARCH_LIMIT:
                        continue
                    value = bound("hamming", n, d=d, s=s, q=q).value
                    best = best_without_large_shattered(sphere, s)
                    print(
                        f"{n:>3} {d:>3} {s:>3} {q:>3} {value:>7} {best:>6} "
                        f"{value - best:>5}"
                    )
    print()


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=4)
    parser.add_argument("--s-max", type=int, default=2)
    parser.add_argument("--q-max", type=int, default=3)
    args = parser.parse_args()
    level_count_table(args.n_max, args.s_max, args.q_max)
    sphere_diagonal_table(args.n_max, args.q_max)
    strict_gap_table(args.n_max, args.q_max)


if __name__ == "__main__":
    main()
