import logging
from dataclasses import dataclass
from typing import Sequence, Tuple

from lattice_rr.arith.exact_arith import gcd_ext, gcd3, mod_inverse
from lattice_rr.errors import InvalidInput, NotCoprimeTotal


logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]


@dataclass(frozen=True)
class WeightVector:
    w0: int
    w1: int
    w2: int

    def __post_init__(self):
        if min(self.w0, self.w1, self.w2) < 1:
            raise InvalidInput(f"weights {self.as_tuple} mustn't be negative or zero!")

    @staticmethod
    def of(weights: Sequence[int]) -> "WeightVector":
        if len(weights) != 3:
            raise InvalidInput(f"expected 3 weights, got {len(weights)}")
        return WeightVector(int(weights[0]), int(weights[1]), int(weights[2]))

    @property
    def as_tuple(self) -> Triple:
        return (self.w0, self.w1, self.w2)

    @property
    def abs_w(self) -> int:
        return self.w0 + self.w1 + self.w2

    @property
    def bar_w(self) -> int:
        return self.w0 * self.w1 * self.w2

    @property
    def total_gcd(self) -> int:
        return gcd3(self.w0, self.w1, self.w2)

    @property
    def is_pairwise_coprime(self) -> bool:
        return pairwise_gcds(self) == (1, 1, 1)

    def scaled_down(self, g: int) -> "WeightVector":
        return WeightVector(self.w0 // g, self.w1 // g, self.w2 // g)

    def __str__(self) -> str:
        return f"({self.w0},{self.w1},{self.w2})"


@dataclass(frozen=True)
class ReductionData:
    w01: int
    w02: int
    w12: int
    v: WeightVector
    r0: int
    r1: int
    r2: int
    e: int

    @property
    def residues(self) -> Triple:
        return (self.r0, self.r1, self.r2)

    @property
    def gcd_product(self) -> int:
        return self.w01 * self.w02 * self.w12

    @property
    def is_empty(self) -> bool:
        return self.e < 0


def pairwise_gcds(w: WeightVector) -> Triple:
    return (gcd_ext(w.w0, w.w1)[0], gcd_ext(w.w0, w.w2)[0], gcd_ext(w.w1, w.w2)[0])


def _ensure_total_coprime(w: WeightVector):
    g = w.total_gcd
    if g != 1:
        raise NotCoprimeTotal(f"weights {w} share the common divisor {g}")


def residues_r(w: WeightVector, d: int) -> Triple:
    """The residue r_k of any solution's k-th coordinate modulo the gcd of
    the other two weights; it only depends on d, not on the chosen solution."""
    _ensure_total_coprime(w)
    w01, w02, w12 = pairwise_gcds(w)
    # d = sum w_k a_k, and modulo w_ij only w_k * a_k survives
    return (
        mod_inverse(w.w0, w12) * d % w12,
        mod_inverse(w.w1, w02) * d % w02,
        mod_inverse(w.w2, w01) * d % w01)


def reduce(w: WeightVector, d: int) -> ReductionData:
    _ensure_total_coprime(w)
    w01, w02, w12 = pairwise_gcds(w)
    r0, r1, r2 = residues_r(w, d)

    rest = d - (w.w0 * r0 + w.w1 * r1 + w.w2 * r2)
    e, remainder = divmod(rest, w01 * w02 * w12)
    if remainder != 0:
        raise ArithmeticError(f"reduction of {w}, {d} is not exact, this is a bug")

    v = WeightVector(w.w0 // (w01 * w02), w.w1 // (w01 * w12), w.w2 // (w02 * w12))
    logger.debug("reduced w=%s, d=%d to v=%s, e=%d, r=%s", w, d, v, e, (r0, r1, r2))
    return ReductionData(w01, w02, w12, v, r0, r1, r2, e)


def lift_point(red: ReductionData, point: Triple) -> Triple:
    """Map a lattice point of T_{v,e} onto the corresponding point of T_{w,d}."""
    i, j, k = point
    return (red.w12 * i + red.r0, red.w02 * j + red.r1, red.w01 * k + red.r2)


def project_point(red: ReductionData, point: Triple) -> Triple:
    a0, a1, a2 = point
    moduli = (red.w12, red.w02, red.w01)
    if any((a - r) % m != 0 for a, r, m in zip(point, red.residues, moduli)):
        raise InvalidInput(f"point {point} doesn't match the residues {red.residues}")
    return ((a0 - red.r0) // red.w12, (a1 - red.r1) // red.w02, (a2 - red.r2) // red.w01)
