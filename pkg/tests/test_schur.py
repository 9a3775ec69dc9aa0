from itertools import permutations, product
from math import comb

import pytest

from polyidp import (
    EmptyInput,
    LengthExceedsAmbient,
    SchurSum,
    in_schur_support,
    kostka,
    schur_support,
    ts_summands,
    ts_support,
)
from conftest import dominated_oracle, partitions_of


def test_in_schur_support_examples():
    assert in_schur_support((1, 2, 0), (2, 1, 0))
    assert not in_schur_support((8, 5, 1), (10, 2, 2))
    assert in_schur_support((0, 0, 0), (0, 0, 0))
    assert not in_schur_support((1, 1), (1,))  # size mismatch


def test_schur_support_examples():
    sup = schur_support((2, 1, 0), 3)
    assert len(sup) == 7
    assert sup == set(permutations((2, 1, 0))) | {(1, 1, 1)}
    assert schur_support((1, 1, 1), 3) == {(1, 1, 1)}
    assert schur_support((2, 1, 1), 3) == set(permutations((2, 1, 1)))


def test_schur_support_rejects_long_partition():
    with pytest.raises(LengthExceedsAmbient):
        schur_support((1, 1, 1), 2)


def test_support_membership_matches_kostka_small():
    # dominance route against the tableau-count route; the exhaustive
    # size-8 range runs in the acceptance suite
    for n in range(7):
        for lam in partitions_of(n, 4):
            for alpha in product(range(n + 1), repeat=3):
                if sum(alpha) != n:
                    continue
                assert in_schur_support(alpha, lam) == (kostka(lam, alpha) > 0)


def test_schur_support_is_permutation_closed():
    for lam in partitions_of(6, 3):
        sup = schur_support(lam, 3)
        for x in sup:
            assert set(permutations(x)) <= sup


def test_rado_monotonicity():
    for n in range(1, 8):
        parts = partitions_of(n, 3)
        for lam in parts:
            for mu in parts:
                if dominated_oracle(lam, mu):
                    assert schur_support(lam, 3) <= schur_support(mu, 3)


def test_ts_summands_k2():
    s = SchurSum(((5, 1, 1), (4, 3, 0)), 3)
    assert ts_summands(s, 2) == [(10, 2, 2), (9, 4, 1), (8, 6)]
    lam, mu = (3, 1), (2, 2)
    s2 = SchurSum((lam, mu), 2)
    assert ts_summands(s2, 3) == [(9, 3), (8, 4), (7, 5), (6, 6)]


def test_ts_summands_counts():
    for k in (1, 2, 3):
        gens = tuple((i + 1,) for i in range(k))
        s = SchurSum(gens, 3)
        for t in (1, 2, 3, 4):
            assert len(ts_summands(s, t)) == comb(k + t - 1, t)


def test_ts_summands_single_generator():
    s = SchurSum(((3, 1),), 2)
    assert ts_summands(s, 3) == [(9, 3)]


def test_ts_support_examples():
    s = SchurSum(((5, 1, 1), (4, 3, 0)), 3)
    assert ts_support(s, 1) == schur_support((5, 1, 1), 3) | schur_support((4, 3, 0), 3)
    assert (8, 5, 1) in ts_support(s, 2)
    assert ts_support(SchurSum(((1,),), 2), 2) == {(2, 0), (1, 1), (0, 2)}


def test_ts_support_duplicate_generators_collapse():
    s = SchurSum(((2, 1), (2, 1)), 3)
    assert ts_support(s, 2) == schur_support((4, 2), 3)


def test_schur_sum_validation():
    with pytest.raises(EmptyInput):
        SchurSum((), 3)
    with pytest.raises(LengthExceedsAmbient):
        SchurSum(((1, 1, 1, 1),), 3)
