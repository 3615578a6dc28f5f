"""Counting pipeline for lattice points on weighted triangles.

For pairwise coprime weights the count is the Euler characteristic

    Eh_w(d) = 1 + d(d+|w|)/(2 w0 w1 w2) + R_w(d)

where R_w is the sum of the three local correction terms. Arbitrary weights
are first divided by their common gcd and then reduced to pairwise coprime
weights, which keeps the number of lattice points."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from lattice_rr.arith.weights import ReductionData, WeightVector, reduce
from lattice_rr.errors import NonIntegerChi, NotPairwiseCoprime
from lattice_rr.singularity.correction import \
    CyclicQuotient, R3Step, correction_R, correction_R_global, local_types, normalize_type, r3_chain


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LocalTerm:
    singularity: CyclicQuotient
    normalized: Tuple[int, int, int]
    value: Fraction
    chain: List[R3Step]


@dataclass(frozen=True)
class CountExplanation:
    weights: WeightVector
    degree: int
    total_gcd: int
    reduction: Optional[ReductionData]
    quadratic: Optional[Fraction]
    local_terms: List[LocalTerm]
    correction: Optional[Fraction]
    count: int


def _ensure_pairwise_coprime(w: WeightVector):
    if not w.is_pairwise_coprime:
        raise NotPairwiseCoprime(f"weights {w} need to be pairwise coprime")


def quadratic_term(w: WeightVector, d: int) -> Fraction:
    _ensure_pairwise_coprime(w)
    return Fraction(d * (d + w.abs_w), 2 * w.bar_w)


def virtual_genus(w: WeightVector, d: int) -> Fraction:
    _ensure_pairwise_coprime(w)
    return 1 + Fraction(d * (d - w.abs_w), 2 * w.bar_w)


def intersection_number(w: WeightVector, d1: int, d2: int) -> Fraction:
    _ensure_pairwise_coprime(w)
    return Fraction(d1 * d2, w.bar_w)


def euler_characteristic(w: WeightVector, d: int) -> Fraction:
    chi = 1 + quadratic_term(w, d) + correction_R_global(w, d)
    if chi.denominator != 1:
        raise NonIntegerChi(f"chi({w}, {d}) = {chi} is not an integer")
    return chi


def count(w: WeightVector, d: int) -> int:
    if d < 0:
        return 0
    g = w.total_gcd
    if d % g != 0:
        return 0
    if g > 1:
        logger.debug("dividing weights %s and degree %d by their gcd %d", w, d, g)
    w, d = w.scaled_down(g), d // g

    red = reduce(w, d)
    if red.is_empty:
        return 0
    return int(euler_characteristic(red.v, red.e))


def cohomology_split(w: WeightVector, d: int) -> Tuple[int, int]:
    """(h0, h2) of the degree d sheaf; their sum is the Euler characteristic."""
    _ensure_pairwise_coprime(w)
    h0 = count(w, d) if d >= 0 else 0
    h2 = count(w, -w.abs_w - d) if d <= -w.abs_w else 0
    return h0, h2


def pick_area(interior: int, boundary: int) -> Fraction:
    return interior + Fraction(boundary, 2) - 1


def _local_term(x: CyclicQuotient, d: int) -> LocalTerm:
    normalized = normalize_type(x, d)
    chain = r3_chain(*normalized) if not x.is_smooth else []
    return LocalTerm(x, normalized, correction_R(x, d), chain)


def explain_count(w: WeightVector, d: int) -> CountExplanation:
    g = w.total_gcd
    if d < 0 or d % g != 0:
        return CountExplanation(w, d, g, None, None, [], None, 0)

    red = reduce(w.scaled_down(g), d // g)
    if red.is_empty:
        return CountExplanation(w, d, g, red, None, [], None, 0)

    v, e = red.v, red.e
    terms = [_local_term(x, e) for x in local_types(v)]
    correction = sum((t.value for t in terms), Fraction(0))
    return CountExplanation(
        w, d, g, red, quadratic_term(v, e), terms, correction,
        int(euler_characteristic(v, e)))
