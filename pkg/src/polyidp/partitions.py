"""Partitions, dominance order, and maximal antichains.

A partition is a weakly decreasing tuple of nonnegative integers; trailing
zeros never matter, so ``(7, 6)`` and ``(7, 6, 0)`` denote the same object.
A lattice point is any tuple of nonnegative integers of a fixed ambient
length.  Everything here is a pure function over plain tuples.
"""

from __future__ import annotations

from enum import Enum
from itertools import permutations

from .errors import EmptyInput, SizeMismatch

Partition = tuple[int, ...]
LatticePoint = tuple[int, ...]


class Dominance(Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def is_partition(parts) -> bool:
    """True iff ``parts`` is a weakly decreasing sequence of nonnegative ints."""
    parts = tuple(parts)
    if any(not isinstance(p, int) or isinstance(p, bool) or p < 0 for p in parts):
        return False
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def trim(parts) -> Partition:
    """Drop trailing zeros: the canonical form of a partition."""
    parts = tuple(parts)
    k = len(parts)
    while k > 0 and parts[k - 1] == 0:
        k -= 1
    return parts[:k]


def pad(parts, length: int) -> tuple[int, ...]:
    """Extend with trailing zeros up to ``length`` (error if too long already)."""
    parts = trim(parts)
    if len(parts) > length:
        raise ValueError(f"partition {parts} has more than {length} nonzero parts")
    return parts + (0,) * (length - len(parts))


def size(parts) -> int:
    return sum(parts)


def compare_dominance(a, b) -> Dominance:
    """Dominance comparison of two partitions of the same size.

    ``a`` is dominated by ``b`` when every prefix sum of ``a`` is at most the
    corresponding prefix sum of ``b``.  Defined only for equal sizes; raises
    SizeMismatch otherwise.
    """
    a, b = trim(a), trim(b)
    if sum(a) != sum(b):
        raise SizeMismatch(f"dominance undefined across sizes {sum(a)} != {sum(b)}")
    if a == b:
        return Dominance.EQUAL
    n = max(len(a), len(b))
    a = a + (0,) * (n - len(a))
    b = b + (0,) * (n - len(b))
    le = ge = True
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa > sb:
            le = False
        if sa < sb:
            ge = False
        if not (le or ge):
            return Dominance.INCOMPARABLE
    if le:
        return Dominance.LESS
    if ge:
        return Dominance.GREATER
    return Dominance.INCOMPARABLE


def dominated_by(a, b) -> bool:
    """True iff ``a`` is dominated by ``b`` (equality included)."""
    return compare_dominance(a, b) in (Dominance.LESS, Dominance.EQUAL)


def partition_sum(parts: list) -> Partition:
    """Coordinatewise sum of partitions, zero-padded to a common length."""
    parts = [trim(p) for p in parts]
    if not parts:
        raise EmptyInput("partition_sum of an empty list")
    n = max(len(p) for p in parts)
    return trim(tuple(sum(p[i] if i < len(p) else 0 for p in parts) for i in range(n)))


def enumerate_dominated(lam, max_length: int) -> set[Partition]:
    """All partitions of |lam| with at most ``max_length`` parts dominated by lam.

    Direct enumeration: partitions are generated part by part (weakly
    decreasing) and a branch is cut as soon as a prefix sum exceeds the
    corresponding prefix sum of lam, which keeps this usable as an oracle
    independent of any other code path.
    """
    if max_length < 1:
        raise ValueError("max_length must be at least 1")
    lam = trim(lam)
    total = sum(lam)
    prefix = []
    acc = 0
    for i in range(max_length):
        acc += lam[i] if i < len(lam) else 0
        prefix.append(acc)

    out: set[Partition] = set()

    def extend(chosen: list[int], remaining: int, bound: int) -> None:
        depth = len(chosen)
        if remaining == 0:
            out.add(tuple(chosen))
            return
        if depth == max_length:
            return
        # the remaining slots cap how large this part must be
        slots = max_length - depth
        lo = -(-remaining // slots)  # ceil: parts are weakly decreasing
        hi = min(bound, remaining, prefix[depth] - (total - remaining))
        for part in range(hi, lo - 1, -1):
            chosen.append(part)
            extend(chosen, remaining - part, part)
            chosen.pop()

    extend([], total, total)
    return out


def antichain_max(cands) -> set[Partition]:
    """The pairwise dominance-maximal elements of a set of partitions.

    Partitions of different sizes are never comparable, so each size class
    is reduced on its own and the results are unioned.
    """
    by_size: dict[int, list[Partition]] = {}
    for p in cands:
        by_size.setdefault(sum(p), []).append(trim(p))
    out: set[Partition] = set()
    for group in by_size.values():
        group = list(set(group))
        for p in group:
            if any(q != p and compare_dominance(p, q) is Dominance.LESS for q in group):
                continue
            out.add(p)
    return out


def orbit(point, length: int) -> set[LatticePoint]:
    """Distinct coordinate permutations of ``point`` padded to ``length``."""
    return set(permutations(pad(point, length)))
