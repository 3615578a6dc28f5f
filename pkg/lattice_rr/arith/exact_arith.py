"""Exact integer and rational primitives shared by all other modules.

Integers are plain Python ints (unbounded), rationals are `fractions.Fraction`
which keeps its values normalized, so equality is structural."""

from fractions import Fraction
from typing import Tuple, Union

from lattice_rr.errors import NotCoprime


BigInt = int
Rational = Fraction
RationalLike = Union[int, Fraction]
GcdResult = Tuple[int, int, int]


def gcd_ext(a: int, b: int) -> GcdResult:
    """Return (g, x, y) with g = gcd(|a|, |b|) >= 0 and a*x + b*y = g."""
    last_remainder, remainder = abs(a), abs(b)
    x, last_x, y, last_y = 0, 1, 1, 0

    while remainder:
        last_remainder, (quotient, remainder) = remainder, divmod(last_remainder, remainder)
        x, last_x = last_x - quotient * x, x
        y, last_y = last_y - quotient * y, y

    return (
        last_remainder,
        last_x * (-1 if a < 0 else 1),
        last_y * (-1 if b < 0 else 1))


def gcd3(a: int, b: int, c: int) -> int:
    return gcd_ext(gcd_ext(a, b)[0], c)[0]


def canonical_residue(k: int, m: int) -> int:
    if m < 1:
        raise ValueError(f"modulus {m} mustn't be negative or zero!")
    # python's modulo already yields the representative in [0, m)
    return k % m


def mod_inverse(a: int, m: int) -> int:
    if m < 1:
        raise ValueError(f"modulus {m} mustn't be negative or zero!")
    if m == 1:
        return 0

    g, x, _ = gcd_ext(a, m)
    if g != 1:
        raise NotCoprime(f"{a} is not invertible modulo {m} (gcd = {g})")
    return x % m


def frac_part(x: RationalLike) -> Fraction:
    x = Fraction(x)
    return Fraction(x.numerator % x.denominator, x.denominator)


def is_coprime(a: int, b: int) -> bool:
    return gcd_ext(a, b)[0] == 1
