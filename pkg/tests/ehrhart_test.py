import random
import time
from fractions import Fraction

import pytest

from lattice_rr.arith.weights import WeightVector
from lattice_rr.counting.ehrhart import \
    cohomology_split, count, euler_characteristic, explain_count, intersection_number, \
    pick_area, quadratic_term, virtual_genus
from lattice_rr.errors import NonIntegerChi, NotPairwiseCoprime
from lattice_rr.singularity import correction


GOLDEN = WeightVector(19, 77, 12)
SMALL_COPRIME_WEIGHTS = [WeightVector(1, 1, 1), WeightVector(1, 2, 3), WeightVector(2, 3, 5),
                         WeightVector(3, 4, 5), WeightVector(5, 7, 9), WeightVector(19, 77, 12)]


def test_golden_count():
    assert count(GOLDEN, 1528) == 70
    assert count(WeightVector(1235, 6545, 2652), 1710721) == 70


def test_golden_quadratic_term():
    assert quadratic_term(GOLDEN, 1528) == Fraction(312476, 4389)
    assert 1 + quadratic_term(GOLDEN, 1528) == Fraction(316865, 4389)


def test_golden_count_is_fast():
    count(GOLDEN, 1528)
    start_time = time.perf_counter()
    for _ in range(100):
        count(GOLDEN, 1528)
    assert (time.perf_counter() - start_time) / 100 < 1e-3


def test_small_counts():
    assert count(WeightVector(1, 1, 1), 0) == 1
    assert count(WeightVector(1, 1, 1), 2) == 6
    assert count(WeightVector(2, 2, 3), 1) == 0
    assert count(WeightVector(2, 3, 5), 10) == 4
    assert count(WeightVector(2, 4, 6), 7) == 0
    assert count(WeightVector(2, 4, 6), 8) == count(WeightVector(1, 2, 3), 4)
    assert count(GOLDEN, -3) == 0


def test_euler_characteristic_known_values():
    assert euler_characteristic(GOLDEN, 1528) == 70
    assert euler_characteristic(GOLDEN, 0) == 1
    assert euler_characteristic(GOLDEN, -5) == 0
    with pytest.raises(NotPairwiseCoprime):
        euler_characteristic(WeightVector(2, 2, 3), 5)


def test_euler_characteristic_flags_broken_corrections(monkeypatch):
    monkeypatch.setattr(correction, "r3_term", lambda d, q, k: Fraction(1, 7))
    with pytest.raises(NonIntegerChi):
        euler_characteristic(GOLDEN, 1528)


def test_vanishing_window():
    for w in SMALL_COPRIME_WEIGHTS:
        for d in range(-w.abs_w + 1, 0):
            assert euler_characteristic(w, d) == 0


def test_serre_duality_and_quasi_period():
    for w in SMALL_COPRIME_WEIGHTS:
        for d in range(-3 * w.abs_w, 3 * w.abs_w):
            chi = euler_characteristic(w, d)
            assert chi.denominator == 1
            assert chi == euler_characteristic(w, -w.abs_w - d)
            assert euler_characteristic(w, d + w.bar_w) - chi == d + Fraction(w.bar_w + w.abs_w, 2)


def test_global_correction_is_periodic():
    for w in SMALL_COPRIME_WEIGHTS:
        for d in range(-50, 50):
            assert correction.correction_R_global(w, d) == correction.correction_R_global(w, d + w.bar_w)


def test_cohomology_split_adds_up_to_chi():
    for w in SMALL_COPRIME_WEIGHTS[:5]:
        for d in range(-4 * w.abs_w, 2 * w.abs_w):
            h0, h2 = cohomology_split(w, d)
            assert h0 * h2 == 0
            assert h0 + h2 == euler_characteristic(w, d)


def test_cohomology_split_needs_pairwise_coprime_weights():
    with pytest.raises(NotPairwiseCoprime):
        cohomology_split(WeightVector(2, 4, 5), 10)
    with pytest.raises(NotPairwiseCoprime):
        cohomology_split(WeightVector(1235, 6545, 2652), -20000)


def test_geometric_quantities():
    assert virtual_genus(GOLDEN, 0) == 1
    assert all(virtual_genus(WeightVector(1, 1, 1), d) == Fraction((d - 1) * (d - 2), 2)
               for d in range(-5, 30))
    assert intersection_number(GOLDEN, 1528, 1528 + 108) == Fraction(624952, 4389)
    assert intersection_number(GOLDEN, 1528, 1528 + 108) == 2 * quadratic_term(GOLDEN, 1528)
    assert intersection_number(GOLDEN, 0, 77) == 0
    assert intersection_number(WeightVector(1, 1, 1), 4, 5) == 20
    assert all(quadratic_term(WeightVector(1, 1, 1), d) == Fraction(d * (d + 3), 2) for d in range(30))


def test_pick_area():
    assert pick_area(6, 4) == 7
    assert pick_area(0, 3) == Fraction(1, 2)
    assert pick_area(61, 9) == Fraction(129, 2)


def test_explain_count_of_reduced_weights():
    expl = explain_count(WeightVector(1235, 6545, 2652), 1710721)
    assert expl.reduction.v == GOLDEN and expl.reduction.e == 1528
    assert expl.quadratic == Fraction(312476, 4389)
    assert [t.value for t in expl.local_terms] == [Fraction(-7, 19), Fraction(-38, 77), Fraction(-4, 3)]
    assert expl.local_terms[0].normalized == (19, 12, 8)
    assert expl.correction == Fraction(-9635, 4389)
    assert expl.count == 70


def test_explain_count_of_empty_triangles():
    assert explain_count(WeightVector(2, 4, 6), 7).count == 0
    assert explain_count(WeightVector(2, 2, 3), 1).reduction.is_empty


def test_count_with_large_inputs_is_fast():
    rng = random.Random(23)
    samples = []
    while len(samples) < 20:
        w = WeightVector(*(rng.randint(10**5, 10**6) for _ in range(3)))
        samples.append((w, rng.randint(10**11, 10**12)))

    for w, d in samples:
        start_time = time.perf_counter()
        result = count(w, d)
        assert time.perf_counter() - start_time < 0.05
        assert result >= 0


def test_count_is_consistent_with_pairwise_coprime_pipeline():
    rng = random.Random(29)
    for _ in range(300):
        w = WeightVector(*(rng.randint(1, 200) for _ in range(3)))
        if not w.is_pairwise_coprime:
            continue
        d = rng.randint(0, 3000)
        assert count(w, d) == euler_characteristic(w, d)
