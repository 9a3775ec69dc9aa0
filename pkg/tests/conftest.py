"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the library's own decision paths:
hull membership is decided by subset enumeration with exact row reduction,
dominance by a direct prefix-sum comparison, and partition enumeration by a
plain recursive generator.
"""

from fractions import Fraction
from itertools import combinations

import pytest

import polyidp as pp
from polyidp.partitions import Dominance


def solve_exact(matrix, rhs):
    """Row-reduce an m x n rational system; returns the unique solution,
    None if inconsistent, or "underdetermined"."""
    m, n = len(matrix), len(matrix[0])
    rows = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(rhs[i])]
            for i in range(m)]
    piv_cols, r = [], 0
    for c in range(n):
        p = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        rows[r] = [v / rows[r][c] for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if rows[i][n] != 0:
            return None
    if len(piv_cols) < n:
        return "underdetermined"
    out = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        out[c] = rows[i][n]
    return out


def hull_member_oracle(vertices, x, t=1) -> bool:
    """Caratheodory route: x is in t*conv(vertices) iff some subset of at
    most dim+1 vertices carries it with nonnegative weights summing to t."""
    dim = len(x)
    vs = sorted(set(map(tuple, vertices)))
    for size in range(1, dim + 2):
        for subset in combinations(vs, size):
            matrix = [[subset[j][i] for j in range(size)] for i in range(dim)]
            matrix.append([1] * size)
            sol = solve_exact(matrix, list(x) + [t])
            if isinstance(sol, list) and all(c >= 0 for c in sol):
                return True
    return False


def dominated_oracle(a, b) -> bool:
    """Prefix-sum comparison, written from scratch."""
    if sum(a) != sum(b):
        return False
    n = max(len(a), len(b))
    a = tuple(a) + (0,) * (n - len(a))
    b = tuple(b) + (0,) * (n - len(b))
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa > sb:
            return False
    return True


def partitions_of(total, max_len) -> list[tuple[int, ...]]:
    """All partitions of ``total`` with at most ``max_len`` parts."""
    out = []

    def rec(prefix, remaining, bound):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if len(prefix) == max_len:
            return
        for part in range(min(bound, remaining), 0, -1):
            prefix.append(part)
            rec(prefix, remaining - part, part)
            prefix.pop()

    rec([], total, total)
    return out


def length3_partitions(max_part) -> list[tuple[int, int, int]]:
    return [(a, b, c)
            for a in range(max_part + 1)
            for b in range(a + 1)
            for c in range(b + 1)
            if a > 0]


def incomparable_pairs(max_part) -> list[tuple[tuple, tuple]]:
    by_size: dict[int, list] = {}
    for q in length3_partitions(max_part):
        by_size.setdefault(sum(q), []).append(q)
    return [(a, b)
            for group in by_size.values()
            for a, b in combinations(group, 2)
            if pp.compare_dominance(a, b) is Dominance.INCOMPARABLE]


@pytest.fixture(scope="session")
def two_pm_family_parts8():
    """All 2PM incomparable same-size length-3 pairs with parts <= 8,
    with their polytopes built once so dilation caches are shared."""
    family = []
    for a, b in incomparable_pairs(8):
        p = pp.from_generators([a, b], 3)
        if pp.is_2pm(p):
            family.append((a, b, p))
    return family


@pytest.fixture(scope="session")
def incomparable_pairs_parts10():
    return incomparable_pairs(10)
