"""Symmetric lattice polytopes spanned by the permutation orbits of
partitions: exact membership, dilated lattice-point enumeration, maximal
lattice partitions, and the three-facet triangle used in dimension 3.

Geometry is exact rational throughout; membership is phase-1 simplex
feasibility of a convex-combination system.  Because the hull is a union of
permutation orbits, a sorted point lies in tP exactly when its prefix sums
are bounded by a mixture of t generator prefix profiles (the orbit of a
vector contains, in its hull, precisely the vectors it majorizes), so the
simplex runs on the k-column profile system rather than the n!*k-column
vertex system.  A dominance shortcut certifies the easy inside points first
(any point whose sorted form is dominated by a sum of t generators lies in
tP by symmetry and convexity); certificates and cross-checks still use the
full vertex list.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .errors import EmptyInput, LengthExceedsAmbient, PreconditionViolated
from .exactlp import feasible_combination
from .partitions import (
    Dominance,
    LatticePoint,
    Partition,
    antichain_max,
    compare_dominance,
    dominated_by,
    orbit,
    pad,
    partition_sum,
    trim,
)


class SymmetricPolytope:
    """Convex hull of the coordinate-permutation orbits of generator
    partitions.  Immutable after construction; caches memoize membership
    and enumeration per dilation."""

    def __init__(self, generators: tuple[Partition, ...], ambient: int):
        if not generators:
            raise EmptyInput("a polytope needs at least one generator")
        gens = tuple(trim(g) for g in generators)
        for g in gens:
            if len(g) > ambient:
                raise LengthExceedsAmbient(
                    f"generator {g} needs more than {ambient} coordinates"
                )
        self.ambient = ambient
        self.generators = gens
        vertices: set[LatticePoint] = set()
        for g in gens:
            vertices |= orbit(g, ambient)
        self.vertices = frozenset(vertices)
        sizes = {sum(g) for g in gens}
        self.uniform_size = sizes.pop() if len(sizes) == 1 else None
        self._vertex_list = sorted(self.vertices)
        self._coord_min = min(min(v) for v in self._vertex_list)
        self._coord_max = max(max(v) for v in self._vertex_list)
        self._size_min = min(sum(g) for g in gens)
        self._size_max = max(sum(g) for g in gens)
        # prefix profile of a generator: (sum of 1 largest, ..., n largest)
        self._profiles = []
        for g in {pad(g, ambient) for g in gens}:
            acc, profile = 0, []
            for part in g:
                acc += part
                profile.append(acc)
            self._profiles.append(tuple(profile))
        self._profiles.sort()
        self._prefix_max = tuple(
            max(pr[j] for pr in self._profiles) for j in range(ambient)
        )
        self._suffix_min = tuple(
            min(pr[-1] - pr[ambient - 2 - j] if j < ambient - 1 else pr[-1]
                for pr in self._profiles)
            for j in range(ambient)
        )
        self._member_cache: dict[tuple[LatticePoint, int], bool] = {}
        self._gen_sums_cache: dict[int, list[Partition]] = {}
        self._lattice_cache: dict[int, frozenset[LatticePoint]] = {}
        self._mlp: set[Partition] | None = None

    def __repr__(self):
        return f"SymmetricPolytope(n={self.ambient}, generators={list(self.generators)})"

    def _generator_sums(self, t: int) -> list[Partition]:
        """Distinct sums of t generators with repetition, the dominance
        certificates for membership in tP."""
        if t not in self._gen_sums_cache:
            sums = {
                partition_sum([self.generators[i] for i in idx])
                for idx in combinations_with_replacement(range(len(self.generators)), t)
            }
            self._gen_sums_cache[t] = sorted(sums)
        return self._gen_sums_cache[t]

    def _decide(self, key: LatticePoint, t: int) -> bool:
        """Membership of a sorted point in tP.

        Cheap necessary bounds first, then the dominance certificate, then
        the exact simplex on the profile system: key is in tP iff some
        nonnegative mixture of generator profiles with weight t covers every
        prefix sum of key and matches its total (slack columns absorb the
        inequality rows; the total row is exact).
        """
        total = sum(key)
        if not (t * self._size_min <= total <= t * self._size_max):
            return False
        if any(not t * self._coord_min <= c <= t * self._coord_max for c in key):
            return False
        n = self.ambient
        prefix = []
        acc = 0
        for c in key:
            acc += c
            prefix.append(acc)
        if any(prefix[j] > t * self._prefix_max[j] for j in range(n)):
            return False
        if any(total - (prefix[n - 2 - j] if j < n - 1 else 0)
               < t * self._suffix_min[j] for j in range(n)):
            return False
        for s in self._generator_sums(t):
            if sum(s) == total and dominated_by(key, s):
                return True
        columns = [pr + (1,) for pr in self._profiles]
        for j in range(n - 1):
            slack = [0] * (n + 1)
            slack[j] = -1
            columns.append(tuple(slack))
        return feasible_combination(columns, tuple(prefix) + (t,)) is not None


def from_generators(gens, n: int) -> SymmetricPolytope:
    """Build the symmetric polytope spanned by the orbits of ``gens``."""
    return SymmetricPolytope(tuple(tuple(g) for g in gens), n)


def contains(p: SymmetricPolytope, x, t: int = 1) -> bool:
    """Exact membership of ``x`` in the dilation tP."""
    x = tuple(x)
    if len(x) != p.ambient:
        raise ValueError(f"point {x} does not have {p.ambient} coordinates")
    key = tuple(sorted(x, reverse=True))
    cached = p._member_cache.get((key, t))
    if cached is None:
        cached = p._decide(key, t)
        p._member_cache[(key, t)] = cached
    return cached


def barycentric(p: SymmetricPolytope, x, t: int = 1):
    """A certificate for ``x`` in tP: vertex -> coefficient with nonnegative
    entries summing to t, or None when x is outside.  Certificates are not
    unique; only feasibility is promised."""
    x = tuple(x)
    coeffs = feasible_combination(p._vertex_list, x, t)
    if coeffs is None:
        return None
    return {v: c for v, c in zip(p._vertex_list, coeffs) if c != 0}


def _sorted_box_candidates(p: SymmetricPolytope, t: int):
    """Weakly decreasing tuples inside the bounding box of t-times-vertices
    with an admissible coordinate sum."""
    n = p.ambient
    lo, hi = t * p._coord_min, t * p._coord_max
    smin, smax = t * p._size_min, t * p._size_max

    def rec(prefix: list[int], bound: int, total: int):
        depth = len(prefix)
        if depth == n:
            if smin <= total <= smax:
                yield tuple(prefix)
            return
        slots = n - depth
        for part in range(min(bound, hi), lo - 1, -1):
            if total + part > smax:
                continue
            if total + part + (slots - 1) * min(part, hi) < smin:
                break
            prefix.append(part)
            yield from rec(prefix, part, total + part)
            prefix.pop()

    yield from rec([], hi, 0)


def lattice_points(p: SymmetricPolytope, t: int = 1) -> frozenset[LatticePoint]:
    """All integer points of the dilation tP.

    Enumerates the weakly decreasing candidates in the coordinate bounding
    box (on the size hyperplane when all generators share a size), decides
    each with the membership machinery, and closes under coordinate
    permutations, which is exact because tP is symmetric.
    """
    if t < 1:
        raise ValueError("t must be a positive integer")
    cached = p._lattice_cache.get(t)
    if cached is not None:
        return cached
    points: set[LatticePoint] = set()
    for cand in _sorted_box_candidates(p, t):
        if contains(p, cand, t):
            points |= orbit(cand, p.ambient)
    result = frozenset(points)
    p._lattice_cache[t] = result
    return result


def mlp(p: SymmetricPolytope) -> set[Partition]:
    """The dominance-maximal partitions among the lattice points of P."""
    if p._mlp is None:
        decreasing = [
            trim(x) for x in lattice_points(p, 1) if all(a >= b for a, b in zip(x, x[1:]))
        ]
        p._mlp = antichain_max(decreasing)
    return set(p._mlp)


def is_2pm(p: SymmetricPolytope) -> bool:
    """True iff exactly two partitions are dominance-maximal in P."""
    return len(mlp(p)) == 2


@dataclass(frozen=True)
class Region3D:
    """The triangle with corners lam, mu and iota = (mu1, n-mu1-lam3, lam3),
    cut out by three facet inequalities in the coordinates (x, y, z):

        (lam3-mu3)*x - (lam1-mu1)*z <= mu1*lam3 - mu3*lam1
        x >= mu1
        z <= lam3

    Both lam and mu meet the first (slanted) facet with equality.  The
    predicate is meaningful for points on the common size hyperplane.
    """

    lam: Partition
    mu: Partition
    iota: LatticePoint
    slant_x: int
    slant_z: int
    slant_rhs: int
    x_min: int
    z_max: int

    def contains_point(self, point, strict: bool = False) -> bool:
        x, _, z = point
        if sum(point) != sum(self.lam):
            return False
        lhs = self.slant_x * x + self.slant_z * z
        if strict:
            return lhs < self.slant_rhs and x > self.x_min and z < self.z_max
        return lhs <= self.slant_rhs and x >= self.x_min and z <= self.z_max


def region_3d(lam, mu) -> Region3D:
    """The Region3D for an incomparable same-size pair of length-3
    partitions; inputs are swapped if needed so lam1 > mu1 (and therefore
    lam3 > mu3)."""
    try:
        lam = pad(lam, 3)
        mu = pad(mu, 3)
    except ValueError as exc:
        raise PreconditionViolated(str(exc)) from None
    if sum(lam) != sum(mu):
        raise PreconditionViolated(f"sizes differ: {sum(lam)} != {sum(mu)}")
    if compare_dominance(lam, mu) is not Dominance.INCOMPARABLE:
        raise PreconditionViolated(f"{lam} and {mu} are dominance-comparable")
    if lam[0] < mu[0]:
        lam, mu = mu, lam
    n = sum(lam)
    iota = (mu[0], n - mu[0] - lam[2], lam[2])
    return Region3D(
        lam=lam,
        mu=mu,
        iota=iota,
        slant_x=lam[2] - mu[2],
        slant_z=-(lam[0] - mu[0]),
        slant_rhs=mu[0] * lam[2] - mu[2] * lam[0],
        x_min=mu[0],
        z_max=lam[2],
    )
