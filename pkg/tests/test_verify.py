import json
import random
from fractions import Fraction

import pytest

from polyidp import (
    NoWitness,
    PreconditionViolated,
    SchurSum,
    SingularMatrix,
    check_2pm,
    check_idp,
    check_snp,
    decompose_point,
    dominated_by,
    explore_conjecture,
    from_generators,
    in_schur_support,
    lattice_points,
    lemma41_check,
    matrix_identities,
    thm43_witness,
    ts_summands,
)
from polyidp.verify import ExploreConfig, Report, _reachable_sums, mlp_report
from conftest import solve_exact


def test_report_invariant():
    with pytest.raises(ValueError):
        Report(kind="SNP", instance={}, verdict="Fail")
    with pytest.raises(ValueError):
        Report(kind="SNP", instance={}, verdict="Pass", counterexamples=[{"x": 1}])


def test_report_round_trips_through_json():
    rep = check_snp(SchurSum(((2, 1),), 3), 1)
    doc = json.loads(json.dumps(rep.to_dict()))
    assert list(doc) == ["kind", "instance", "verdict", "witnesses",
                        "counterexamples", "stats"]
    assert doc["verdict"] == "Pass"


def test_check_snp_examples():
    assert check_snp(SchurSum(((5, 1, 1), (4, 3, 0)), 3), 2).passed
    for t in (1, 2, 3, 4):
        assert check_snp(SchurSum(((3, 2, 1),), 3), t).passed
    rep = check_snp(SchurSum(((2, 1),), 3), 1)
    assert rep.passed and rep.stats["points"] == 7


def test_check_snp_finds_cross_size_gap():
    """The minimal falsifying instance: generators of sizes 1 and 3 leave
    the all-ones point of the double dilation without a supporting summand
    (summand sizes only reach 2, 4 and 6)."""
    rep = check_snp(SchurSum(((1,), (1, 1, 1)), 3), 2)
    assert not rep.passed
    assert {"point": [1, 1, 1], "reason": "unsaturated"} in rep.counterexamples


def test_check_idp_examples():
    p = from_generators([(5, 1, 1), (4, 3, 0)], 3)
    rep = check_idp(p, 2, certificates=True)
    assert rep.passed
    assert rep.stats["cert_absent"] == 0 and rep.stats["cert_invalid"] == 0
    by_point = {tuple(w["point"]): w["pieces"] for w in rep.witnesses}
    pieces = by_point[(8, 5, 1)]
    assert len(pieces) == 2
    assert [a + b for a, b in zip(*pieces)] == [8, 5, 1]
    base = lattice_points(p, 1)
    assert all(tuple(q) in base for q in pieces)

    assert check_idp(from_generators([(1, 1, 1)], 3), 7).passed
    assert check_idp(from_generators([(10, 2, 1), (7, 6, 0)], 3), 3).passed


def test_check_idp_fails_off_hyperplane():
    # the cross-size 2PM polytope genuinely lacks the decomposition
    # property: (1,1,1) is in 2P but is no sum of two lattice points
    p = from_generators([(1,), (1, 1, 1)], 3)
    rep = check_idp(p, 2)
    assert not rep.passed
    assert any(ce["point"] == [1, 1, 1] and ce["reason"] == "no-decomposition"
               for ce in rep.counterexamples)


def test_reachable_sums_is_the_full_sumset():
    p = from_generators([(3, 1), (2, 2)], 3)
    base = lattice_points(p, 1)
    direct = {tuple(a + b for a, b in zip(x, y)) for x in base for y in base}
    assert _reachable_sums(p, 2) == frozenset(direct)


def test_decompose_point_examples():
    s = SchurSum(((5, 1, 1), (4, 3, 0)), 3)
    pieces = decompose_point(s, 2, (8, 5, 1))
    assert pieces is not None and len(pieces) == 2
    assert tuple(a + b for a, b in zip(*pieces)) == (8, 5, 1)
    assert dominated_by(tuple(sorted(pieces[0], reverse=True)), (5, 1, 1))
    assert dominated_by(tuple(sorted(pieces[1], reverse=True)), (4, 3, 0))

    assert decompose_point(SchurSum(((3, 2),), 2), 1, (2, 3)) == [(2, 3)]

    s3 = SchurSum(((2, 2, 1), (4, 3, 1), (2, 2, 0)), 4)
    pieces = decompose_point(s3, 3, (3, 4, 6, 4))
    assert pieces is not None and len(pieces) == 3
    assert tuple(sum(v) for v in zip(*pieces)) == (3, 4, 6, 4)
    for piece, shape in zip(pieces, ((2, 2, 1), (4, 3, 1), (2, 2, 0))):
        assert in_schur_support(piece, shape)


def test_decompose_point_absent_when_unsupported():
    s = SchurSum(((1,), (1, 1, 1)), 3)
    assert decompose_point(s, 2, (1, 1, 1)) is None


def test_decompose_point_searches_summands_in_order():
    s = SchurSum(((5, 1, 1), (4, 3, 0)), 3)
    assert ts_summands(s, 2) == [(10, 2, 2), (9, 4, 1), (8, 6)]
    # (8,5,1) is supported by the middle summand only, so the pieces come
    # from splitting one tableau of shape (9,4,1)
    pieces = decompose_point(s, 2, (8, 5, 1))
    assert dominated_by(tuple(sorted(map(sum, zip(*pieces)), reverse=True)), (9, 4, 1))


def test_lemma41_difference_one_cases():
    rep = lemma41_check((10, 2, 1), (7, 6, 0))
    assert rep.passed
    assert rep.witnesses[0]["difference_one_coordinates"] == [3]
    rep = lemma41_check((5, 1, 1), (4, 3, 0))
    assert rep.passed
    assert rep.witnesses[0]["difference_one_coordinates"] == [1, 3]


def test_lemma41_gamma_witness():
    rep = lemma41_check((8, 2, 2), (6, 6, 0))
    assert not rep.passed
    assert rep.counterexamples[0]["reason"] == "not-2-partition-maximal"
    assert rep.counterexamples[0]["gamma"] == [7, 4, 1]
    assert rep.witnesses[0]["barycentric"] == ["1/2", "1/2", "0"]
    # gamma really is a third maximal element
    p = from_generators([(8, 2, 2), (6, 6, 0)], 3)
    assert not check_2pm(p).passed


def test_lemma41_preconditions():
    with pytest.raises(PreconditionViolated):
        lemma41_check((3, 2, 1), (3, 2, 1))
    with pytest.raises(PreconditionViolated):
        lemma41_check((3, 1), (2, 1))


def test_matrix_identities_examples():
    rep = matrix_identities((10, 2, 1), (7, 6, 0))
    assert rep.passed
    assert rep.witnesses[0]["determinant"] == 39
    rep = matrix_identities((8, 2, 2), (6, 6, 0))
    assert rep.passed
    assert rep.witnesses[0]["determinant"] == 48
    assert rep.witnesses[0]["coefficients"] == ["1/2", "1/2", "0"]


def test_matrix_identities_singular():
    with pytest.raises(SingularMatrix):
        matrix_identities((3, 2, 1), (3, 2, 1))
    with pytest.raises(SingularMatrix):
        matrix_identities((4, 2, 1), (4, 3, 0))


def test_matrix_identities_against_cramer_oracle():
    """Closed forms vs an independent Cramer-style solve on seeded pairs;
    the 500-pair run is in the acceptance suite."""
    rng = random.Random(99)
    done = 0
    while done < 60:
        lam = tuple(sorted((rng.randint(0, 50) for _ in range(3)), reverse=True))
        n = sum(lam)
        mu1 = rng.randint(0, 50)
        mu2 = rng.randint(0, mu1)
        mu = (mu1, mu2, n - mu1 - mu2)
        if mu[2] < 0 or mu[2] > mu2:
            continue
        if lam[0] == mu[0] or lam[2] == mu[2]:
            continue
        rep = matrix_identities(lam, mu)
        assert rep.passed
        iota = (mu[0], n - mu[0] - lam[2], lam[2])
        gamma = (mu[0] + 1, n - mu[0] - lam[2], lam[2] - 1)
        matrix = [[lam[i], mu[i], iota[i]] for i in range(3)]
        solution = solve_exact(matrix, gamma)
        assert isinstance(solution, list)
        assert [str(c) for c in solution] == rep.witnesses[0]["coefficients"]
        assert sum(solution) == 1
        done += 1


def test_thm43_witness_examples():
    assert thm43_witness((5, 1, 1), (4, 3, 0), 2, (8, 5, 1)) == 1
    assert thm43_witness((5, 1, 1), (4, 3, 0), 1, (5, 1, 1)) == 0
    assert thm43_witness((5, 1, 1), (4, 3, 0), 2, (10, 2, 2)) == 0


def test_thm43_witness_point_above_closed_form_range():
    # the last coordinate of 4*(6,6,6) exceeds 4*lam3 for this pair, so
    # only the linear search applies; it must still find a mixture
    k = thm43_witness((8, 5, 5), (7, 7, 4), 4, (24, 24, 24))
    assert 0 <= k <= 4
    assert dominated_by(
        (24, 24, 24),
        tuple(
            (4 - k) * a + k * b for a, b in zip((8, 5, 5), (7, 7, 4))
        ),
    )


def test_thm43_witness_preconditions():
    with pytest.raises(PreconditionViolated):
        thm43_witness((3, 2, 1), (3, 2, 1), 1, (3, 2, 1))     # comparable
    with pytest.raises(PreconditionViolated):
        thm43_witness((8, 2, 2), (6, 6, 0), 1, (8, 2, 2))     # not 2PM
    with pytest.raises(PreconditionViolated):
        thm43_witness((5, 1, 1), (4, 3, 0), 1, (6, 1, 0))     # outside P


def test_certificate_soundness_everywhere():
    """Every decomposition summed and membership-checked; every triangle
    certificate reproduces gamma."""
    p = from_generators([(4, 2, 1), (3, 3, 1)], 3)
    base = lattice_points(p, 1)
    s = SchurSum(((4, 2, 1), (3, 3, 1)), 3)
    for t in (2, 3):
        for x in sorted(lattice_points(p, t)):
            pieces = decompose_point(s, t, x)
            assert pieces is not None
            assert len(pieces) == t
            assert tuple(sum(v) for v in zip(*pieces)) == x
            assert all(piece in base for piece in pieces)
    rep = lemma41_check((8, 2, 2), (6, 6, 0))
    coeffs = [Fraction(c) for c in rep.witnesses[0]["barycentric"]]
    corners = [(8, 2, 2), (6, 6, 0), rep.witnesses[0]["iota"]]
    gamma = rep.witnesses[0]["gamma"]
    assert [sum(c * v[i] for c, v in zip(coeffs, corners)) for i in range(3)] == gamma
    assert sum(coeffs) == 1 and all(c >= 0 for c in coeffs)


def test_explore_same_size_passes_both_bases():
    for basis in ("mlp", "generators"):
        rep = explore_conjecture(ExploreConfig(
            ambient=3, generator_count=2, max_part=4, max_dilation=2,
            filter="same-size-only", basis=basis))
        assert rep.passed
        assert rep.stats["instances"] > rep.stats["checked"] > 0


def test_explore_single_generator_passes():
    rep = explore_conjecture(ExploreConfig(
        ambient=3, generator_count=1, max_part=4, max_dilation=4))
    assert rep.passed


def test_explore_length2_passes():
    rep = explore_conjecture(ExploreConfig(
        ambient=2, generator_count=2, max_part=5, max_dilation=3))
    assert rep.passed


def test_explore_finds_cross_size_counterexample():
    """Unfiltered sweeps report the size-graded gap; the minimal instance
    is 2PM, so even the 2pm-only filter sees it."""
    rep = explore_conjecture(ExploreConfig(
        ambient=3, generator_count=2, max_part=2, max_dilation=2,
        filter="2pm-only", stop_on_first=True))
    assert not rep.passed
    first = rep.counterexamples[0]
    assert first["generators"] == [[1], [1, 1, 1]]
    assert first["t"] == 2
    assert {"point": [1, 1, 1], "reason": "unsaturated"} in first["points"]


def test_explore_is_deterministic():
    cfg = ExploreConfig(ambient=3, generator_count=2, max_part=3,
                        max_dilation=2, seed=42, samples=25)
    a = json.dumps(explore_conjecture(cfg).to_dict())
    b = json.dumps(explore_conjecture(cfg).to_dict())
    assert a == b


def test_explore_rejects_out_of_envelope_bounds():
    with pytest.raises(PreconditionViolated):
        ExploreConfig(ambient=6, generator_count=2, max_part=3, max_dilation=2)
    with pytest.raises(PreconditionViolated):
        ExploreConfig(ambient=3, generator_count=2, max_part=30, max_dilation=2)
    with pytest.raises(PreconditionViolated):
        ExploreConfig(ambient=3, generator_count=2, max_part=3, max_dilation=2,
                      filter="sometimes")


def test_check_2pm_and_mlp_reports():
    p = from_generators([(10, 2, 1), (7, 6, 0)], 3)
    rep = check_2pm(p)
    assert rep.passed
    assert rep.witnesses[0]["mlp"] == [[7, 6], [10, 2, 1]]
    rep = mlp_report(p)
    assert rep.passed and rep.kind == "MLP"
    bad = check_2pm(from_generators([(10, 2, 2), (7, 7, 0)], 3))
    assert not bad.passed
    assert [8, 5, 1] in bad.counterexamples[0]["mlp"]
