import random

import pytest
from pytest import approx

from lattice_rr.arith.exact_arith import gcd_ext
from lattice_rr.errors import InvalidType
from lattice_rr.numeric.unity_check import r_via_roots, unity_sum_identity
from lattice_rr.singularity.correction import CyclicQuotient, correction_R


def test_roots_of_unity_known_values():
    assert r_via_roots(19, 77, 12, 1528) == approx(-7 / 19, abs=1e-9)
    assert r_via_roots(12, 19, 77, 1528) == approx(-4 / 3, abs=1e-9)
    assert r_via_roots(77, 19, 12, 1528) == approx(-38 / 77, abs=1e-9)
    assert abs(r_via_roots(31, 4, 9, 0)) < 1e-12


def test_roots_of_unity_reject_invalid_types():
    with pytest.raises(InvalidType):
        r_via_roots(12, 3, 5, 1)
    with pytest.raises(InvalidType):
        r_via_roots(1, 1, 1, 0)


def test_roots_of_unity_agree_with_exact_values():
    rng = random.Random(41)
    worst_error, cases = 0.0, 0
    while cases < 1000:
        d = rng.randint(2, 5000)
        a, b = rng.randint(1, d), rng.randint(1, d)
        if gcd_ext(a, d)[0] != 1 or gcd_ext(b, d)[0] != 1:
            continue
        k = rng.randint(-d, 2 * d)
        exact = float(correction_R(CyclicQuotient(d, a, b), k))
        error = abs(r_via_roots(d, a, b, k) - exact)
        worst_error = max(worst_error, error)
        assert error < 1e-8 * (1 + abs(exact)), f"X({d};{a},{b}), k={k}"
        cases += 1
    print(f"worst float error {worst_error:.3e}")


def test_unity_sum_identity_known_values():
    assert unity_sum_identity(2) == approx(0.5)
    assert unity_sum_identity(7) == approx(3.0)
    assert unity_sum_identity(360) == approx(179.5)


def test_unity_sum_identity_up_to_ten_thousand():
    for q in list(range(2, 200)) + list(range(200, 10001, 97)) + [10000]:
        assert abs(unity_sum_identity(q) - (q - 1) / 2) < 1e-9 * q
