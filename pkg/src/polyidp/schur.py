"""Supports of Schur polynomials and of their dilated multisubset sums.

Membership in a Schur support is decided through dominance (a point is an
exponent vector of s_lam exactly when its sorted form is dominated by lam),
never by expanding polynomials.  The Kostka backtracking in
:mod:`polyidp.tableaux` is the independent brute-force route the tests pit
against this one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .errors import EmptyInput, LengthExceedsAmbient
from .partitions import (
    LatticePoint,
    Partition,
    compare_dominance,
    Dominance,
    enumerate_dominated,
    orbit,
    partition_sum,
    trim,
)


@dataclass(frozen=True)
class SchurSum:
    """A formal sum of Schur polynomials given by its generator partitions."""

    generators: tuple[Partition, ...]
    ambient: int

    def __post_init__(self):
        if not self.generators:
            raise EmptyInput("a Schur sum needs at least one generator")
        object.__setattr__(
            self, "generators", tuple(trim(g) for g in self.generators)
        )
        for g in self.generators:
            if len(g) > self.ambient:
                raise LengthExceedsAmbient(
                    f"generator {g} needs more than {self.ambient} coordinates"
                )


def in_schur_support(alpha, lam) -> bool:
    """True iff ``alpha`` is an exponent vector of the Schur polynomial of
    ``lam``: equal sizes and sorted(alpha) dominated by lam."""
    if sum(alpha) != sum(lam):
        return False
    sorted_alpha = tuple(sorted(alpha, reverse=True))
    return compare_dominance(sorted_alpha, lam) in (Dominance.LESS, Dominance.EQUAL)


def schur_support(lam, n: int) -> set[LatticePoint]:
    """All exponent vectors of s_lam in ``n`` variables: the coordinate
    permutations of every partition dominated by lam with at most n parts."""
    lam = trim(lam)
    if len(lam) > n:
        raise LengthExceedsAmbient(f"{lam} does not fit in {n} variables")
    points: set[LatticePoint] = set()
    for nu in enumerate_dominated(lam, n):
        points |= orbit(nu, n)
    return points


def ts_summands(s: SchurSum, t: int) -> list[Partition]:
    """Shapes of the dilated sum: one coordinatewise sum per size-``t``
    multisubset of the generators, in lexicographic index order.  Repeats
    coming from distinct multisubsets are kept."""
    if t < 1:
        raise ValueError("t must be a positive integer")
    return [
        partition_sum([s.generators[i] for i in idx])
        for idx in combinations_with_replacement(range(len(s.generators)), t)
    ]


def ts_support(s: SchurSum, t: int) -> set[LatticePoint]:
    """Union of the summand supports of the dilated sum."""
    points: set[LatticePoint] = set()
    for lam in set(ts_summands(s, t)):
        points |= schur_support(lam, s.ambient)
    return points


def supports_point(s: SchurSum, t: int, x) -> bool:
    """Membership in ts_support without materializing the whole set."""
    return any(in_schur_support(x, lam) for lam in set(ts_summands(s, t)))
