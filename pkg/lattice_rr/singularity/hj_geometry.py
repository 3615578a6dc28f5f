"""Hirzebruch-Jung resolution data of X(d;1,q) and the invariants built on it."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from lattice_rr.arith.exact_arith import gcd_ext, is_coprime
from lattice_rr.errors import DimensionMismatch, InvalidInput
from lattice_rr.singularity.correction import correction_table


RationalVector = List[Fraction]


@dataclass(frozen=True)
class HJData:
    d: int
    c: Tuple[int, ...]
    q: Tuple[int, ...]
    qbar: Tuple[int, ...]

    def __post_init__(self):
        if not len(self.c) == len(self.q) == len(self.qbar):
            raise InvalidInput("c, q and qbar need to be of the same length!")
        if any(c_i < 2 for c_i in self.c):
            raise InvalidInput("self-intersections need to be at most -2!")

    @property
    def n(self) -> int:
        return len(self.c)


def _check_hj_input(d: int, q: int):
    if d < 2 or not 1 <= q < d:
        raise InvalidInput(f"expected d >= 2 and 1 <= q < d, got d={d}, q={q}")
    if not is_coprime(d, q):
        raise InvalidInput(f"d={d} and q={q} need to be coprime")


def hj_expand(d: int, q: int) -> HJData:
    _check_hj_input(d, q)
    c, qs, qbars = [], [], []
    q_prev, q_cur = d, q
    qbar_prev, qbar_cur = 0, 1
    while q_cur != 0:
        c_i = -(-q_prev // q_cur)
        c.append(c_i)
        qs.append(q_cur)
        qbars.append(qbar_cur)
        q_prev, q_cur = q_cur, c_i * q_cur - q_prev
        qbar_prev, qbar_cur = qbar_cur, c_i * qbar_cur - qbar_prev
    return HJData(d, tuple(c), tuple(qs), tuple(qbars))


def hj_fold(c: Sequence[int]) -> Fraction:
    """Evaluate c_1 - 1/(c_2 - 1/(... - 1/c_n))."""
    value = Fraction(c[-1])
    for c_i in reversed(c[:-1]):
        value = c_i - 1 / value
    return value


def intersection_matrix(h: HJData) -> np.ndarray:
    matrix = np.zeros((h.n, h.n), dtype=object)
    for i, c_i in enumerate(h.c):
        matrix[i, i] = -c_i
        if i + 1 < h.n:
            matrix[i, i + 1] = matrix[i + 1, i] = 1
    return matrix


def exact_determinant(matrix) -> int:
    rows = [list(row) for row in matrix]
    n, det = len(rows), Fraction(1)

    for k in range(n):
        pivot_row = next((i for i in range(k, n) if rows[i][k] != 0), None)
        if pivot_row is None:
            return 0
        if pivot_row != k:
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
            det = -det

        pivot = rows[k][k]
        det *= pivot
        support = [j for j in range(k + 1, n) if rows[k][j] != 0]
        for i in range(k + 1, n):
            if rows[i][k] == 0:
                continue
            factor = Fraction(rows[i][k]) / pivot
            for j in support:
                rows[i][j] -= factor * rows[k][j]

    if det.denominator != 1:
        raise ArithmeticError("determinant of an integer matrix came out fractional")
    return int(det)


def relative_canonical(h: HJData) -> RationalVector:
    return [Fraction(q_i + qbar_i, h.d) - 1 for q_i, qbar_i in zip(h.q, h.qbar)]


def lct(d: int, q: int) -> Fraction:
    h = hj_expand(d, q)
    return min(Fraction(q_i + qbar_i, d) for q_i, qbar_i in zip(h.q, h.qbar))


def delta_top(h: HJData, e_d: Sequence[Fraction]) -> Fraction:
    if len(e_d) != h.n:
        raise DimensionMismatch(f"expected {h.n} multiplicities, got {len(e_d)}")
    e_vec = np.array([Fraction(x) for x in e_d], dtype=object)
    kappa = np.array(relative_canonical(h), dtype=object)
    quad = np.dot(e_vec, np.dot(intersection_matrix(h), e_vec - kappa))
    return -Fraction(quad) / 2


def gorenstein_index(d: int, q: int) -> int:
    _check_hj_input(d, q)
    return d // gcd_ext(d, q + 1)[0]


def canonical_multiple_degree(d: int, q: int, ell: int) -> int:
    # K_X has local degree -(1+q) on X(d;1,q)
    _check_hj_input(d, q)
    return ell * (d - 1 - q) % d


@dataclass(frozen=True)
class BlacheBoundEntry:
    ell: int
    degree: int
    correction: Fraction
    bound: Fraction

    @property
    def holds(self) -> bool:
        return abs(self.correction) <= self.bound


@dataclass(frozen=True)
class BlacheBoundReport:
    d: int
    q: int
    gorenstein_index: int
    entries: List[BlacheBoundEntry] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(e.holds for e in self.entries)


@dataclass(frozen=True)
class BlacheDiffEntry:
    ell: int
    difference: Fraction
    bound: Fraction

    @property
    def holds(self) -> bool:
        return self.difference <= self.bound


@dataclass(frozen=True)
class BlacheDiffReport:
    d: int
    q: int
    bound: Fraction
    entries: List[BlacheDiffEntry] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(e.holds for e in self.entries)

    @property
    def max_difference(self) -> Fraction:
        return max((e.difference for e in self.entries), default=Fraction(0))

    @property
    def attained_at(self) -> List[int]:
        return [e.ell for e in self.entries if e.difference == self.bound]


def canonical_corrections(d: int, q: int, max_ell: int) -> List[Fraction]:
    """R_X(l K_X) for l = 0 .. max_ell, signed."""
    table = correction_table(d, q)
    return [table[canonical_multiple_degree(d, q, ell)] for ell in range(max_ell + 1)]


def blache_bound_report(d: int, q: int) -> BlacheBoundReport:
    index = gorenstein_index(d, q)
    corrections = canonical_corrections(d, q, index)
    entries = [BlacheBoundEntry(ell, canonical_multiple_degree(d, q, ell), corrections[ell],
                                Fraction((ell - 1) * (index - ell), index))
               for ell in range(2, index)]
    return BlacheBoundReport(d, q, index, entries)


def blache_diff_report(d: int, q: int) -> BlacheDiffReport:
    bound = 1 - lct(d, q)
    corrections = canonical_corrections(d, q, d)
    entries = [BlacheDiffEntry(ell, abs(corrections[ell + 1] - corrections[ell]), bound)
               for ell in range(1, d)]
    return BlacheDiffReport(d, q, bound, entries)
