"""Exact rational linear algebra: phase-1 simplex feasibility and Gaussian
elimination.  No floating point anywhere; every answer is exact.
"""

from __future__ import annotations

from fractions import Fraction


def feasible_combination(points, target, total=None) -> list[Fraction] | None:
    """Nonnegative coefficients c with sum c_j points_j = target, and
    sum(c) = total unless ``total`` is None.

    Decided by a phase-1 simplex with Bland's anti-cycling rule (entering:
    lowest eligible column index; leaving: lowest basis index among minimum
    ratios), so it terminates on every input.  Returns one feasible
    coefficient vector, or None when the system is infeasible.
    """
    points = [tuple(p) for p in points]
    if not points:
        return None
    dim = len(points[0])
    target = tuple(target)
    if len(target) != dim:
        raise ValueError(f"point dimension {dim} != target dimension {len(target)}")

    # rows: one per coordinate, plus the coefficient-sum row when requested
    n = len(points)
    rows = [[Fraction(p[i]) for p in points] for i in range(dim)]
    rhs = [Fraction(t) for t in target]
    if total is not None:
        rows.append([Fraction(1)] * n)
        rhs.append(Fraction(total))
    m = len(rows)
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-v for v in rows[i]]
            rhs[i] = -rhs[i]

    # basis[i] = column index, or -1 while the artificial of row i is basic
    basis = [-1] * m
    art_rows = set(range(m))

    while True:
        if all(rhs[i] == 0 for i in art_rows):
            break
        entering = -1
        for j in range(n):
            if j in basis:
                continue
            if sum(rows[i][j] for i in art_rows) > 0:
                entering = j
                break
        if entering < 0:
            return None  # artificials stuck at a positive value: infeasible
        leaving = -1
        best = None
        bland_id = lambda i: basis[i] if basis[i] >= 0 else n + i
        for i in range(m):
            a = rows[i][entering]
            if a > 0:
                ratio = rhs[i] / a
                if best is None or ratio < best:
                    best = ratio
                    leaving = i
                elif ratio == best and bland_id(i) < bland_id(leaving):
                    leaving = i
        if leaving < 0:
            return None  # cannot happen: phase-1 objective is bounded
        piv = rows[leaving][entering]
        rows[leaving] = [v / piv for v in rows[leaving]]
        rhs[leaving] /= piv
        for i in range(m):
            if i == leaving:
                continue
            f = rows[i][entering]
            if f:
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[leaving])]
                rhs[i] -= f * rhs[leaving]
        basis[leaving] = entering
        art_rows.discard(leaving)

    coeffs = [Fraction(0)] * n
    for i, b in enumerate(basis):
        if b >= 0:
            coeffs[b] = rhs[i]
    return coeffs


def gaussian_solve(matrix, vector) -> list[Fraction] | None:
    """Solve a square system exactly by elimination with partial pivoting on
    nonzero entries; None when the matrix is singular."""
    n = len(matrix)
    a = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(vector[i])] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        inv = a[col][col]
        a[col] = [v / inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]
