"""Local Riemann-Roch correction terms of cyclic quotient singularities.

The fast path evaluates R_{X(d;1,q)}(k) by iterating the division rule

    R_{X(d;1,q)}(k) = -R_{X(q;1,d mod q)}(k mod q) - {k/q} - k(k+1+q-d)/(2dq)

so the number of steps is the length of the Euclidean algorithm on (d, q).
The Delta-invariant is computed independently by counting lattice points,
and R_X(k) = -Delta_X(-k) ties both paths together."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from lattice_rr.arith.exact_arith import frac_part, gcd_ext, is_coprime, mod_inverse
from lattice_rr.arith.weights import WeightVector
from lattice_rr.errors import InvalidType, NotPairwiseCoprime


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CyclicQuotient:
    """The type X(d;a,b), with a and b kept as residues modulo d."""
    d: int
    a: int
    b: int

    def __post_init__(self):
        if self.d < 1:
            raise InvalidType(f"order {self.d} mustn't be negative or zero!")
        object.__setattr__(self, "a", self.a % self.d)
        object.__setattr__(self, "b", self.b % self.d)
        if not is_coprime(self.a, self.d) or not is_coprime(self.b, self.d):
            raise InvalidType(f"weights of X({self.d};{self.a},{self.b}) need to be units mod {self.d}")

    @property
    def is_smooth(self) -> bool:
        return self.d == 1

    def __str__(self) -> str:
        return f"X({self.d};{self.a},{self.b})"


@dataclass(frozen=True)
class R3Step:
    d: int
    q: int
    k: int
    sign: int
    term: Fraction

    @property
    def contribution(self) -> Fraction:
        return self.sign * self.term


def normalize_type(x: CyclicQuotient, k: int) -> Tuple[int, int, int]:
    if x.is_smooth:
        return (1, 0, 0)
    a_inv = mod_inverse(x.a, x.d)
    return (x.d, a_inv * x.b % x.d, a_inv * k % x.d)


def _check_order_pair(d: int, q: int):
    if d < 1:
        raise InvalidType(f"order {d} mustn't be negative or zero!")
    if not is_coprime(d, q):
        raise InvalidType(f"X({d};1,{q}) is not a valid type, gcd({d},{q}) != 1")


def r3_term(d: int, q: int, k: int) -> Fraction:
    """One summand -{k/q} - k(k+1+q-d)/(2dq) of the division rule, for 0 <= k < d."""
    return -frac_part(Fraction(k, q)) - Fraction(k * (k + 1 + q - d), 2 * d * q)


def r3_chain(d: int, q: int, k: int) -> List[R3Step]:
    _check_order_pair(d, q)
    q, k = q % d, k % d
    steps, sign = [], 1
    while d > 1:
        steps.append(R3Step(d, q, k, sign, r3_term(d, q, k)))
        d, q, k, sign = q, d % q, k % q, -sign
    return steps


def correction_R_1q(d: int, q: int, k: int) -> Fraction:
    return sum((step.contribution for step in r3_chain(d, q, k)), Fraction(0))


def recursion_steps(d: int, q: int) -> int:
    _check_order_pair(d, q)
    steps, q = 0, q % d
    while d > 1:
        d, q = q, d % q
        steps += 1
    return steps


def correction_R_blowup(d: int, q: int, k: int) -> Tuple[Fraction, int]:
    """Naive variant that peels off one exceptional curve per step:
    R_{X(d;1,q)}(k) = -k(k+1+q-d)/(2dq) + R_{X(q;1,-(d mod q))}(k mod q).
    Takes d-1 steps on X(d;1,d-1), i.e. exponential in the input size."""
    _check_order_pair(d, q)
    q, k = q % d, k % d
    total, steps = Fraction(0), 0
    while d > 1:
        total -= Fraction(k * (k + 1 + q - d), 2 * d * q)
        d, q = q, -(d % q) % q
        k %= d
        steps += 1
    return total, steps


def correction_table(d: int, q: int) -> List[Fraction]:
    """R_{X(d;1,q)}(k) for every k in [0, d).

    All k share the same Euclidean chain, so the terms are accumulated as
    integers over the common denominator of the whole chain."""
    _check_order_pair(d, q)
    chain = []
    d_i, q_i = d, q % d
    while d_i > 1:
        chain.append((d_i, q_i))
        d_i, q_i = q_i, d_i % q_i

    denominator = 1
    for d_i, q_i in chain:
        step_den = 2 * d_i * q_i
        denominator = denominator * step_den // gcd_ext(denominator, step_den)[0]
    multipliers = [denominator // (2 * d_i * q_i) for d_i, q_i in chain]
    logger.debug("correction table of X(%d;1,%d): %d steps, common denominator %d",
                 d, q, len(chain), denominator)

    table = []
    for k in range(d):
        total, sign, k_i = 0, 1, k
        for (d_i, q_i), mult in zip(chain, multipliers):
            num = 2 * d_i * (k_i % q_i) + k_i * (k_i + 1 + q_i - d_i)
            total -= sign * num * mult
            sign, k_i = -sign, k_i % q_i
        table.append(Fraction(total, denominator))
    return table


def correction_R(x: CyclicQuotient, k: int) -> Fraction:
    d, q, k_norm = normalize_type(x, k)
    return correction_R_1q(d, q, k_norm)


def local_types(w: WeightVector) -> Tuple[CyclicQuotient, CyclicQuotient, CyclicQuotient]:
    """The three singular points X(w_i; w_j, w_k) of the weighted plane."""
    if not w.is_pairwise_coprime:
        raise NotPairwiseCoprime(f"weights {w} need to be pairwise coprime")
    return (
        CyclicQuotient(w.w0, w.w1, w.w2),
        CyclicQuotient(w.w1, w.w0, w.w2),
        CyclicQuotient(w.w2, w.w0, w.w1))


def correction_R_global(w: WeightVector, d: int) -> Fraction:
    return sum((correction_R(x, d) for x in local_types(w)), Fraction(0))


def a_count(p: int, q: int, r: int) -> int:
    """Number of (i, j) >= 1 with p*i + q*j <= q*r."""
    bound, count = q * r, 0
    # loop over the variable with the larger coefficient
    outer, inner = (p, q) if p >= q else (q, p)
    i = 1
    while outer * i + inner <= bound:
        count += (bound - outer * i) // inner
        i += 1
    return count


def delta_comb(p: int, q: int, r: int) -> Fraction:
    return Fraction(r * (q * r - p - q + 1), 2 * p)


def delta_invariant(x: CyclicQuotient, k: int) -> Fraction:
    if x.is_smooth:
        return Fraction(0)
    p = x.d
    # X(p;a,b) at k is X(p;-1,q) at k' with q = -a^-1 b, k' = -a^-1 k
    a_inv = mod_inverse(x.a, p)
    q = -a_inv * x.b % p
    k_conv = -a_inv * k % p
    r = mod_inverse(q, p) * k_conv % p
    return a_count(p, q, r) - delta_comb(p, q, r)
