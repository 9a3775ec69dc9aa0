"""Theorem-level checkers with machine-checkable certificates.

Every operation returns (or feeds) a :class:`Report`: a verdict plus the
witnesses that make a Pass auditable and the counterexamples that make a
Fail reproducible.  Checks are falsification-grade: both halves of every
claim are tested against independent routes (dominance vs exact LP, tableau
certificates vs a complete sumset dynamic program, closed forms vs Gaussian
elimination), and an outcome that contradicts the underlying theory is
reported loudly instead of being swallowed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from .errors import NoWitness, PreconditionViolated, SingularMatrix
from .exactlp import feasible_combination, gaussian_solve
from .partitions import (
    Dominance,
    LatticePoint,
    Partition,
    compare_dominance,
    dominated_by,
    pad,
    partition_sum,
    trim,
)
from .polytope import SymmetricPolytope, contains, is_2pm, lattice_points, mlp
from .schur import SchurSum, in_schur_support, ts_summands
from .tableaux import content, decompose_tableau, ssyt_witness

PASS = "Pass"
FAIL = "Fail"


@dataclass
class Report:
    """Verdict of one verification run.

    ``verdict`` is Fail exactly when ``counterexamples`` is nonempty; stats
    hold deterministic counts only, so serialized reports are byte-identical
    across runs of the same inputs.
    """

    kind: str
    instance: dict
    verdict: str
    witnesses: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    def __post_init__(self):
        if (self.verdict == FAIL) != bool(self.counterexamples):
            raise ValueError("verdict must be Fail iff counterexamples exist")

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "instance": self.instance,
            "verdict": self.verdict,
            "witnesses": self.witnesses,
            "counterexamples": self.counterexamples,
            "stats": self.stats,
        }


def _verdict(counterexamples) -> str:
    return FAIL if counterexamples else PASS


def _point(x) -> list[int]:
    return [int(c) for c in x]


def _frac(value: Fraction) -> str:
    return str(value)


@lru_cache(maxsize=256)
def _orbit_polytope(generators: tuple[Partition, ...], n: int) -> SymmetricPolytope:
    """Shared polytope objects so per-dilation caches survive across the
    many per-point calls the suites make."""
    return SymmetricPolytope(generators, n)


def _sorted_classes(points) -> list[LatticePoint]:
    return sorted({tuple(sorted(x, reverse=True)) for x in points})


def check_snp(s: SchurSum, t: int, polytope: SymmetricPolytope | None = None,
              certificates: bool = False) -> Report:
    """Verify both halves of the dilated-sum saturation claim at one t.

    (a) the Newton polytope of the dilated sum equals the t-fold dilation of
    the base hull, established by mutual vertex membership with exact LP;
    (b) every lattice point of the dilation is an exponent vector of some
    summand.  A saturation check against the wrong hull proves nothing, so
    (a) is never assumed.
    """
    if t < 1:
        raise ValueError("t must be a positive integer")
    p = polytope if polytope is not None else _orbit_polytope(s.generators, s.ambient)
    summands = ts_summands(s, t)
    distinct = sorted(set(summands))
    q = _orbit_polytope(tuple(distinct), s.ambient)

    counterexamples: list[dict] = []
    witnesses: list[dict] = []
    scaled = frozenset(tuple(t * c for c in v) for v in p.vertices)
    hull_lp_checks = 0
    if scaled != q.vertices:
        for v in sorted(q.vertices):
            hull_lp_checks += 1
            if not contains(p, v, t):
                counterexamples.append(
                    {"point": _point(v), "reason": "summand-orbit-point-outside-dilation"}
                )
        for v in sorted(scaled):
            hull_lp_checks += 1
            if not contains(q, v, 1):
                counterexamples.append(
                    {"point": _point(v), "reason": "dilation-vertex-outside-newton-polytope"}
                )

    pts = lattice_points(p, t)
    classes = _sorted_classes(pts)
    for x in classes:
        hit = next((lam for lam in distinct if in_schur_support(x, lam)), None)
        if hit is None:
            counterexamples.append({"point": _point(x), "reason": "unsaturated"})
        elif certificates:
            witnesses.append({"point": _point(x), "dominated_by": _point(hit)})

    return Report(
        kind="SNP",
        instance={"n": s.ambient, "generators": [_point(g) for g in s.generators], "t": t},
        verdict=_verdict(counterexamples),
        witnesses=witnesses,
        counterexamples=counterexamples,
        stats={
            "points": len(pts),
            "classes": len(classes),
            "summands": len(summands),
            "distinct_summands": len(distinct),
            "hull_lp_checks": hull_lp_checks,
        },
    )


def decompose_point(s: SchurSum, t: int, x) -> list[LatticePoint] | None:
    """Write ``x`` as a sum of t exponent vectors, one per generator of the
    first summand shape that supports it.

    Searches the multisubset sums in lexicographic index order; on a hit,
    builds the deterministic tableau witness for that shape and content and
    strips it into per-generator tableaux whose contents are the summands.
    None when no summand supports ``x``.
    """
    if t < 1:
        raise ValueError("t must be a positive integer")
    x = tuple(int(c) for c in x)
    if len(x) != s.ambient:
        raise ValueError(f"point {x} does not have {s.ambient} coordinates")
    for idx in combinations_with_replacement(range(len(s.generators)), t):
        lam = partition_sum([s.generators[i] for i in idx])
        if not in_schur_support(x, lam):
            continue
        witness = ssyt_witness(lam, x)
        if witness is None:
            raise NoWitness(
                f"dominance admits {x} in the support of {lam} but no tableau exists"
            )
        shapes = [s.generators[i] for i in idx]
        pieces = decompose_tableau(witness, shapes)
        return [content(piece, s.ambient) for piece in pieces]
    return None


def _reachable_sums(p: SymmetricPolytope, t: int) -> frozenset[LatticePoint]:
    """Iterated sumsets of the base lattice points, capped to the bounding
    box of each intermediate dilation: the complete decomposability oracle."""
    base = lattice_points(p, 1)
    reach = base
    for j in range(2, t + 1):
        lo, hi = j * p._coord_min, j * p._coord_max
        smin, smax = j * p._size_min, j * p._size_max
        nxt = set()
        for a in reach:
            for b in base:
                c = tuple(u + v for u, v in zip(a, b))
                if smin <= sum(c) <= smax and all(lo <= u <= hi for u in c):
                    nxt.add(c)
        reach = frozenset(nxt)
    return reach


def check_idp(p: SymmetricPolytope, t: int, certificates: bool = False) -> Report:
    """Check that every lattice point of tP splits into t lattice points of P.

    Two independent routes per point: the constructive tableau certificate
    (via the dominance-maximal generators) and the complete sumset dynamic
    program.  The verdict follows the DP; any disagreement between routes or
    an invalid certificate is itself reported as a counterexample.
    """
    if t < 1:
        raise ValueError("t must be a positive integer")
    base = lattice_points(p, 1)
    pts = lattice_points(p, t)
    reachable = _reachable_sums(p, t) if t > 1 else base
    s = SchurSum(tuple(sorted(mlp(p))), p.ambient)

    counterexamples: list[dict] = []
    witnesses: list[dict] = []
    cert_found = cert_absent = cert_invalid = 0
    for x in sorted(pts):
        dp_ok = x in reachable
        try:
            pieces = decompose_point(s, t, x)
        except NoWitness as exc:
            pieces = None
            cert_invalid += 1
            counterexamples.append(
                {"point": _point(x), "reason": "witness-missing", "detail": str(exc)}
            )
        else:
            if pieces is None:
                cert_absent += 1
            else:
                cert_found += 1
                valid = (
                    len(pieces) == t
                    and tuple(sum(v) for v in zip(*pieces)) == x
                    and all(piece in base for piece in pieces)
                )
                if not valid:
                    cert_invalid += 1
                    counterexamples.append(
                        {"point": _point(x), "reason": "certificate-invalid",
                         "pieces": [_point(q) for q in pieces]}
                    )
                elif not dp_ok:
                    counterexamples.append(
                        {"point": _point(x), "reason": "sumset-oracle-inconsistent"}
                    )
                elif certificates:
                    witnesses.append(
                        {"point": _point(x), "pieces": [_point(q) for q in pieces]}
                    )
        if not dp_ok:
            counterexamples.append({"point": _point(x), "reason": "no-decomposition"})

    return Report(
        kind="IDP",
        instance={"n": p.ambient, "generators": [_point(g) for g in p.generators], "t": t},
        verdict=_verdict(counterexamples),
        witnesses=witnesses,
        counterexamples=counterexamples,
        stats={
            "points": len(pts),
            "base_points": len(base),
            "cert_found": cert_found,
            "cert_absent": cert_absent,
            "cert_invalid": cert_invalid,
        },
    )


def mlp_report(p: SymmetricPolytope) -> Report:
    """Plain computation report: the dominance-maximal lattice partitions."""
    maximal = sorted(mlp(p))
    return Report(
        kind="MLP",
        instance={"n": p.ambient, "generators": [_point(g) for g in p.generators]},
        verdict=PASS,
        witnesses=[{"mlp": [_point(m) for m in maximal]}],
        stats={"lattice_points": len(lattice_points(p, 1)), "mlp": len(maximal)},
    )


def decompose_report(rows, shapes: list) -> Report:
    """Plain computation report: a tableau split into summand tableaux."""
    pieces = decompose_tableau(rows, shapes)
    letters = max((max(r) for piece in pieces for r in piece if r), default=0)
    return Report(
        kind="Decompose",
        instance={"shape": _point(trim(tuple(len(r) for r in rows))),
                  "shapes": [_point(trim(s)) for s in shapes]},
        verdict=PASS,
        witnesses=[
            {"shape": _point(trim(tuple(len(r) for r in piece))),
             "rows": [list(r) for r in piece],
             "content": _point(content(piece, letters)) if letters else []}
            for piece in pieces
        ],
        stats={"pieces": len(pieces)},
    )


def check_2pm(p: SymmetricPolytope) -> Report:
    """Report whether exactly two partitions are dominance-maximal in P."""
    maximal = sorted(mlp(p))
    ok = len(maximal) == 2
    return Report(
        kind="2PM",
        instance={"n": p.ambient, "generators": [_point(g) for g in p.generators]},
        verdict=PASS if ok else FAIL,
        witnesses=[{"mlp": [_point(m) for m in maximal]}],
        counterexamples=[] if ok else [{"mlp": [_point(m) for m in maximal],
                                        "count": len(maximal)}],
        stats={"lattice_points": len(lattice_points(p, 1)), "mlp": len(maximal)},
    )


def _validated_pair(lam, mu) -> tuple[Partition, Partition]:
    try:
        lam3, mu3 = pad(lam, 3), pad(mu, 3)
    except ValueError as exc:
        raise PreconditionViolated(str(exc)) from None
    if sum(lam3) != sum(mu3):
        raise PreconditionViolated(f"sizes differ: {sum(lam3)} != {sum(mu3)}")
    if compare_dominance(lam3, mu3) is not Dominance.INCOMPARABLE:
        raise PreconditionViolated(f"{lam3} and {mu3} are dominance-comparable")
    return lam3, mu3


def lemma41_check(lam, mu) -> Report:
    """The difference-one dichotomy for an incomparable same-size length-3
    pair: either some coordinate differs by exactly one (Pass), or the
    midpoint-style point gamma certifies a third maximal partition, so no
    polytope with these two as its maximal pair exists (Fail, with gamma and
    its triangle coefficients as the certificate)."""
    lam, mu = _validated_pair(lam, mu)
    instance = {"lam": _point(lam), "mu": _point(mu)}
    diffs = [abs(a - b) for a, b in zip(lam, mu)]
    if 0 in diffs:
        # unreachable for incomparable inputs; reported, never swallowed
        return Report(
            kind="Lemma41", instance=instance, verdict=FAIL,
            counterexamples=[{"reason": "zero-coordinate-difference",
                              "differences": diffs}],
            stats={"min_difference": min(diffs)},
        )
    if min(diffs) == 1:
        return Report(
            kind="Lemma41", instance=instance, verdict=PASS,
            witnesses=[{"difference_one_coordinates":
                        [i + 1 for i, d in enumerate(diffs) if d == 1]}],
            stats={"min_difference": 1},
        )

    if lam[0] < mu[0]:
        lam, mu = mu, lam
    n = sum(lam)
    iota = (mu[0], n - mu[0] - lam[2], lam[2])
    gamma = (mu[0] + 1, n - mu[0] - lam[2], lam[2] - 1)
    problems = []
    if not all(gamma[i] >= gamma[i + 1] for i in range(2)) or gamma[2] < 0:
        problems.append("gamma-not-a-partition")
    for other in (lam, mu):
        if compare_dominance(trim(gamma), other) is not Dominance.INCOMPARABLE:
            problems.append(f"gamma-comparable-with-{_point(other)}")
    coeffs = feasible_combination([lam, mu, iota], gamma, 1)
    if coeffs is None:
        problems.append("gamma-outside-triangle")
    if problems:
        # would contradict the construction; surfaced as a counterexample
        return Report(
            kind="Lemma41", instance=instance, verdict=FAIL,
            counterexamples=[{"reason": "gamma-construction-failed",
                              "gamma": _point(gamma), "problems": problems}],
            stats={"min_difference": min(diffs)},
        )
    return Report(
        kind="Lemma41", instance=instance, verdict=FAIL,
        witnesses=[{"gamma": _point(gamma), "iota": _point(iota),
                    "barycentric": [_frac(c) for c in coeffs]}],
        counterexamples=[{"reason": "not-2-partition-maximal",
                          "gamma": _point(gamma),
                          "antichain": [_point(lam), _point(mu), _point(gamma)]}],
        stats={"min_difference": min(diffs)},
    )


def matrix_identities(lam, mu) -> Report:
    """Check the closed forms for det([lam mu iota]) and for the triangle
    coordinates of gamma against direct expansion and exact elimination."""
    try:
        lam, mu = pad(lam, 3), pad(mu, 3)
    except ValueError as exc:
        raise PreconditionViolated(str(exc)) from None
    if sum(lam) != sum(mu):
        raise PreconditionViolated(f"sizes differ: {sum(lam)} != {sum(mu)}")
    if lam[0] == mu[0] or lam[2] == mu[2]:
        raise SingularMatrix(
            f"first or last coordinates agree for {lam} and {mu}"
        )
    n = sum(lam)
    iota = (mu[0], n - mu[0] - lam[2], lam[2])
    gamma = (mu[0] + 1, n - mu[0] - lam[2], lam[2] - 1)
    a = [[lam[i], mu[i], iota[i]] for i in range(3)]
    det_direct = (
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    )
    det_formula = n * (lam[2] - mu[2]) * (lam[0] - mu[0])
    solved = gaussian_solve(a, gamma)
    closed = [
        Fraction(1, lam[0] - mu[0]),
        Fraction(1, lam[2] - mu[2]),
        1 + Fraction(lam[1] - mu[1], (lam[0] - mu[0]) * (lam[2] - mu[2])),
    ]
    counterexamples = []
    if det_direct != det_formula:
        counterexamples.append(
            {"reason": "determinant-mismatch",
             "direct": det_direct, "formula": det_formula}
        )
    if solved is None or solved != closed:
        counterexamples.append(
            {"reason": "solve-mismatch",
             "elimination": None if solved is None else [_frac(c) for c in solved],
             "closed_form": [_frac(c) for c in closed]}
        )
    if sum(closed) != 1:
        counterexamples.append(
            {"reason": "coefficients-do-not-sum-to-one",
             "sum": _frac(sum(closed))}
        )
    return Report(
        kind="Matrix",
        instance={"lam": _point(lam), "mu": _point(mu)},
        verdict=_verdict(counterexamples),
        witnesses=[{"determinant": det_direct,
                    "coefficients": [_frac(c) for c in closed],
                    "gamma": _point(gamma), "iota": _point(iota)}],
        counterexamples=counterexamples,
        stats={"size": n},
    )


def thm43_witness(lam, mu, t: int, x) -> int:
    """Smallest k with sorted(x) dominated by (t-k)*lam + k*mu.

    Defined on incomparable same-size length-3 pairs whose orbit polytope
    has exactly two maximal partitions, and on lattice points of the t-fold
    dilation.  When the pair differs by one in the last coordinate (after
    orienting the first coordinates downward) and the closed-form index
    t*lam3 - z lands in [0, t], that index is additionally asserted to
    work; a miss on either route raises NoWitness rather than returning
    silently.  (The index can land outside [0, t]: points like t*(6,6,6)
    for the pair (8,5,5), (7,7,4) have a last coordinate above t*lam3, and
    then only the search applies.)
    """
    if t < 1:
        raise ValueError("t must be a positive integer")
    lam, mu = _validated_pair(lam, mu)
    p = _orbit_polytope(tuple(sorted((trim(lam), trim(mu)))), 3)
    if not is_2pm(p):
        raise PreconditionViolated(f"{lam}, {mu} is not a 2-partition-maximal pair")
    x = tuple(int(c) for c in x)
    if x not in lattice_points(p, t):
        raise PreconditionViolated(f"{x} is not a lattice point of the {t}-fold dilation")
    sorted_x = tuple(sorted(x, reverse=True))

    result = None
    for k in range(t + 1):
        target = partition_sum([lam] * (t - k) + [mu] * k)
        if dominated_by(sorted_x, target):
            result = k
            break
    if result is None:
        raise NoWitness(
            f"no mixture of {lam} and {mu} dominates {sorted_x} at t={t}"
        )

    big, small = (lam, mu) if lam[0] > mu[0] else (mu, lam)
    if big[2] - small[2] == 1:
        z = sorted_x[2]
        k_closed = t * big[2] - z
        if 0 <= k_closed <= t:
            target = partition_sum([big] * (t - k_closed) + [small] * k_closed)
            if not dominated_by(sorted_x, target):
                raise NoWitness(
                    f"closed-form index {k_closed} fails for {sorted_x} at t={t}"
                )
    return result


@dataclass(frozen=True)
class ExploreConfig:
    """Bounds and switches for the conjecture explorer.

    ``samples`` = 0 walks the whole family exhaustively, otherwise that many
    seeded random instances are drawn.  ``basis`` chooses whether the Schur
    sum is rebuilt from the dominance-maximal partitions of the hull or
    taken verbatim from the generators.
    """

    ambient: int
    generator_count: int
    max_part: int
    max_dilation: int
    filter: str = "all"
    seed: int = 0
    samples: int = 0
    stop_on_first: bool = False
    basis: str = "mlp"

    def __post_init__(self):
        if min(self.ambient, self.generator_count, self.max_part, self.max_dilation) < 1:
            raise PreconditionViolated("all explorer bounds must be positive")
        if self.ambient > 5:
            raise PreconditionViolated("ambient dimensions above 5 are outside the supported envelope")
        if self.max_part > 29:
            raise PreconditionViolated("parts of 30 or more are outside the supported envelope")
        if self.filter not in ("all", "2pm-only", "same-size-only"):
            raise PreconditionViolated(f"unknown filter {self.filter!r}")
        if self.basis not in ("mlp", "generators"):
            raise PreconditionViolated(f"unknown basis {self.basis!r}")
        if self.samples < 0 or self.seed < 0:
            raise PreconditionViolated("seed and sample count must be nonnegative")

    def to_dict(self) -> dict:
        return {
            "ambient": self.ambient,
            "generator_count": self.generator_count,
            "max_part": self.max_part,
            "max_dilation": self.max_dilation,
            "filter": self.filter,
            "seed": self.seed,
            "samples": self.samples,
            "stop_on_first": self.stop_on_first,
            "basis": self.basis,
        }


def _all_partitions(max_len: int, max_part: int) -> list[Partition]:
    """Nonempty partitions with at most max_len parts, each at most max_part."""
    out: list[Partition] = []

    def rec(prefix: list[int], bound: int):
        if prefix:
            out.append(tuple(prefix))
        if len(prefix) == max_len:
            return
        for part in range(bound, 0, -1):
            prefix.append(part)
            rec(prefix, part)
            prefix.pop()

    rec([], max_part)
    return sorted(out)


def _instances(cfg: ExploreConfig):
    if cfg.samples == 0:
        pool = _all_partitions(cfg.ambient, cfg.max_part)
        yield from combinations_with_replacement(pool, cfg.generator_count)
        return
    for i in range(cfg.samples):
        rng = random.Random(f"{cfg.seed}:{i}")
        gens = []
        for _ in range(cfg.generator_count):
            length = rng.randint(1, cfg.ambient)
            parts = sorted((rng.randint(1, cfg.max_part) for _ in range(length)),
                           reverse=True)
            gens.append(tuple(parts))
        yield tuple(sorted(gens))


def explore_conjecture(cfg: ExploreConfig) -> Report:
    """Sweep generator families and run the saturation check at every
    dilation up to the configured bound, collecting counterexamples.

    Deterministic for a fixed config: instances are enumerated (or drawn
    from per-index seeded generators) in a fixed order and results
    aggregated in that order.
    """
    counterexamples: list[dict] = []
    instances = checked = snp_checks = total_points = 0
    for gens in _instances(cfg):
        instances += 1
        p = _orbit_polytope(tuple(gens), cfg.ambient)
        if cfg.filter == "same-size-only" and len({sum(g) for g in gens}) != 1:
            continue
        if cfg.filter == "2pm-only" and not is_2pm(p):
            continue
        checked += 1
        basis_gens = tuple(sorted(mlp(p))) if cfg.basis == "mlp" else tuple(gens)
        s = SchurSum(basis_gens, cfg.ambient)
        for t in range(1, cfg.max_dilation + 1):
            report = check_snp(s, t, polytope=p)
            snp_checks += 1
            total_points += report.stats["points"]
            if not report.passed:
                counterexamples.append(
                    {"generators": [_point(g) for g in gens],
                     "basis": cfg.basis, "t": t,
                     "points": report.counterexamples}
                )
                if cfg.stop_on_first:
                    break
        if cfg.stop_on_first and counterexamples:
            break
    return Report(
        kind="Explore",
        instance=cfg.to_dict(),
        verdict=_verdict(counterexamples),
        witnesses=[],
        counterexamples=counterexamples,
        stats={
            "instances": instances,
            "checked": checked,
            "snp_checks": snp_checks,
            "points": total_points,
        },
    )
