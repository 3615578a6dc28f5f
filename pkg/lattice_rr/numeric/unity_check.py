"""Floating point cross-check of the exact correction terms through the
roots-of-unity sum

    R_{X(d;a,b)}(k) = -1/d * sum_{i=1}^{d-1} (1 - z^{-ik}) / ((1 - z^{ia}) (1 - z^{ib}))

with z = exp(2 pi i / d)."""

import logging
import math

import numpy as np

from lattice_rr.arith.exact_arith import is_coprime
from lattice_rr.errors import ImaginaryResidue, InvalidType
from lattice_rr.lattice_config import UnitySettings


logger = logging.getLogger(__name__)


def _one_minus_root(exponents: np.ndarray, order: int) -> np.ndarray:
    # 1 - exp(i t) = -2i sin(t/2) exp(i t/2), no cancellation for small t
    half_angles = np.pi * exponents / order
    return -2j * np.sin(half_angles) * np.exp(1j * half_angles)


def _compensated_sum(values: np.ndarray) -> complex:
    return complex(math.fsum(values.real), math.fsum(values.imag))


def r_via_roots(d: int, a: int, b: int, k: int, settings: UnitySettings = UnitySettings()) -> float:
    if d < 2:
        raise InvalidType(f"order {d} needs to be at least 2")
    if not is_coprime(a, d) or not is_coprime(b, d):
        raise InvalidType(f"X({d};{a},{b}) is not a valid type")

    i = np.arange(1, d, dtype=np.int64)
    # exponents are reduced exactly before turning them into angles
    exp_k = (-i * (k % d)) % d
    exp_a = (i * (a % d)) % d
    exp_b = (i * (b % d)) % d

    terms = _one_minus_root(exp_k, d) / (_one_minus_root(exp_a, d) * _one_minus_root(exp_b, d))
    total = -_compensated_sum(terms) / d

    tolerance = settings.imaginary_tolerance * d
    if abs(total.imag) >= tolerance:
        raise ImaginaryResidue(f"imaginary part {total.imag} of R_X({d};{a},{b})({k}) exceeds {tolerance}")
    if abs(total.imag) >= tolerance / 10:
        logger.warning("imaginary part %g close to the guard for X(%d;%d,%d)", total.imag, d, a, b)
    return total.real


def unity_sum_identity(q: int) -> float:
    """Real part of sum_{i=1}^{q-1} 1 / (1 - z^i) for z = exp(2 pi i / q)."""
    if q < 2:
        return 0.0
    i = np.arange(1, q, dtype=np.int64)
    return _compensated_sum(1 / _one_minus_root(i, q)).real
