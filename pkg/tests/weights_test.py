import random

import pytest

from lattice_rr.arith.weights import \
    WeightVector, lift_point, pairwise_gcds, project_point, reduce, residues_r
from lattice_rr.counting.lattice_oracles import count_bruteforce, lattice_points
from lattice_rr.errors import InvalidInput, NotCoprimeTotal


NON_COPRIME_WEIGHTS = WeightVector(1235, 6545, 2652)
NON_COPRIME_DEGREE = 1710721


def test_derived_quantities():
    w = WeightVector(19, 77, 12)
    assert w.abs_w == 108
    assert w.bar_w == 17556


def test_weights_need_to_be_positive():
    with pytest.raises(InvalidInput):
        WeightVector(0, 1, 2)


def test_pairwise_gcds():
    assert pairwise_gcds(NON_COPRIME_WEIGHTS) == (5, 13, 17)
    assert pairwise_gcds(WeightVector(19, 77, 12)) == (1, 1, 1)
    assert pairwise_gcds(WeightVector(2, 2, 3)) == (2, 1, 1)


def test_residues_of_non_coprime_weights():
    assert residues_r(NON_COPRIME_WEIGHTS, NON_COPRIME_DEGREE) == (1, 2, 3)
    assert residues_r(WeightVector(19, 77, 12), 1528) == (0, 0, 0)
    assert residues_r(WeightVector(2, 2, 3), 5) == (0, 0, 1)


def test_residues_need_total_coprime_weights():
    with pytest.raises(NotCoprimeTotal):
        residues_r(WeightVector(2, 4, 6), 10)
    with pytest.raises(NotCoprimeTotal):
        reduce(WeightVector(2, 4, 6), 10)


def test_reduce_non_coprime_weights():
    red = reduce(NON_COPRIME_WEIGHTS, NON_COPRIME_DEGREE)
    assert red.v == WeightVector(19, 77, 12)
    assert red.e == 1528
    assert red.residues == (1, 2, 3)


def test_reduce_pairwise_coprime_is_identity():
    red = reduce(WeightVector(19, 77, 12), 1528)
    assert red.v == WeightVector(19, 77, 12) and red.e == 1528 and red.residues == (0, 0, 0)


def test_reduce_detects_empty_triangle():
    assert reduce(WeightVector(2, 2, 3), 1).e < 0


def _random_total_coprime(rng: random.Random, max_weight: int) -> WeightVector:
    while True:
        w = WeightVector(*(rng.randint(1, max_weight) for _ in range(3)))
        if w.total_gcd == 1:
            return w


def test_reduction_invariants_and_idempotence():
    rng = random.Random(11)
    for _ in range(500):
        w = _random_total_coprime(rng, 30)
        d = rng.randint(0, 500)
        red = reduce(w, d)
        assert sum(x * r for x, r in zip(w.as_tuple, red.residues)) + red.e * red.gcd_product == d
        assert red.v.is_pairwise_coprime
        assert (red.v.w0, red.v.w1, red.v.w2) == (
            w.w0 // (red.w01 * red.w02), w.w1 // (red.w01 * red.w12), w.w2 // (red.w02 * red.w12))
        if red.e >= 0:
            again = reduce(red.v, red.e)
            assert again.v == red.v and again.e == red.e and again.residues == (0, 0, 0)


def test_reduction_keeps_the_number_of_points():
    rng = random.Random(12)
    for _ in range(300):
        w = _random_total_coprime(rng, 30)
        d = rng.randint(0, 500)
        red = reduce(w, d)
        assert count_bruteforce(w, d) == count_bruteforce(red.v, red.e)


def test_residues_are_canonical_representatives():
    rng = random.Random(13)
    for _ in range(300):
        w = _random_total_coprime(rng, 40)
        w01, w02, w12 = pairwise_gcds(w)
        s = (rng.randrange(w12), rng.randrange(w02), rng.randrange(w01))
        eps = rng.randint(0, 50)
        d = eps * w01 * w02 * w12 + sum(x * s_k for x, s_k in zip(w.as_tuple, s))
        assert residues_r(w, d) == s


def test_lifted_points_solve_the_original_triangle():
    red = reduce(NON_COPRIME_WEIGHTS, NON_COPRIME_DEGREE)
    for point in lattice_points(red.v, red.e).tolist():
        lifted = lift_point(red, tuple(point))
        assert sum(x * a for x, a in zip(NON_COPRIME_WEIGHTS.as_tuple, lifted)) == NON_COPRIME_DEGREE
        assert project_point(red, lifted) == tuple(point)


def test_project_rejects_points_with_wrong_residues():
    red = reduce(NON_COPRIME_WEIGHTS, NON_COPRIME_DEGREE)
    with pytest.raises(InvalidInput):
        project_point(red, (0, 0, 0))
