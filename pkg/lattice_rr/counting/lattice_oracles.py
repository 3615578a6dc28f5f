import logging
from typing import Tuple

import numpy as np
import numba

from lattice_rr.arith.weights import WeightVector
from lattice_rr.errors import TooLarge
from lattice_rr.lattice_config import OracleSettings


logger = logging.getLogger(__name__)

MAX_KERNEL_INT = 2**62


@numba.njit
def _count_triangle_points(w_outer: int, w_inner: int, w_last: int, degree: int) -> int:
    count = 0
    for i in range(degree // w_outer + 1):
        rest_i = degree - w_outer * i
        for j in range(rest_i // w_inner + 1):
            if (rest_i - w_inner * j) % w_last == 0:
                count += 1
    return count


@numba.njit
def _fill_triangle_points(w0: int, w1: int, w2: int, degree: int, points: np.ndarray) -> int:
    num_points = 0
    for i in range(degree // w0 + 1):
        rest_i = degree - w0 * i
        for j in range(rest_i // w1 + 1):
            rest_j = rest_i - w1 * j
            if rest_j % w2 == 0:
                if num_points < points.shape[0]:
                    points[num_points, 0] = i
                    points[num_points, 1] = j
                    points[num_points, 2] = rest_j // w2
                num_points += 1
    return num_points


@numba.njit
def _series_coefficients(weights: np.ndarray, max_degree: int) -> np.ndarray:
    coeffs = np.zeros(max_degree + 1, dtype=np.int64)
    coeffs[0] = 1
    for w in weights:
        for n in range(w, max_degree + 1):
            coeffs[n] += coeffs[n - w]
    return coeffs


def _guard_bruteforce(w_outer: int, w_inner: int, d: int, settings: OracleSettings):
    iterations = (d // w_outer + 1) * (d // w_inner + 1)
    if d >= MAX_KERNEL_INT or iterations > settings.max_bruteforce_iterations:
        raise TooLarge(f"brute force needs ~{iterations} iterations, "
                       f"limit is {settings.max_bruteforce_iterations}")
    if iterations > settings.max_bruteforce_iterations // 2:
        logger.warning("brute force close to its iteration limit (%d iterations)", iterations)


def count_bruteforce(w: WeightVector, d: int, settings: OracleSettings = OracleSettings()) -> int:
    """Counts T_{w,d} by enumeration, looping over the two largest weights."""
    if d < 0:
        return 0
    w_outer, w_inner, w_last = sorted(w.as_tuple, reverse=True)
    _guard_bruteforce(w_outer, w_inner, d, settings)
    return int(_count_triangle_points(w_outer, w_inner, w_last, d))


def lattice_points(w: WeightVector, d: int, settings: OracleSettings = OracleSettings()) -> np.ndarray:
    """All points of T_{w,d} as an (n, 3) array in lexicographic order."""
    if d < 0:
        return np.zeros((0, 3), dtype=np.int64)
    _guard_bruteforce(w.w0, w.w1, d, settings)
    num_points = count_bruteforce(w, d, settings)
    points = np.zeros((num_points, 3), dtype=np.int64)
    _fill_triangle_points(w.w0, w.w1, w.w2, d, points)
    return points


def boundary_split(w: WeightVector, d: int, settings: OracleSettings = OracleSettings()) -> Tuple[int, int]:
    """(interior, boundary) points, boundary points having a zero coordinate."""
    points = lattice_points(w, d, settings)
    boundary = int(np.count_nonzero(np.any(points == 0, axis=1)))
    return points.shape[0] - boundary, boundary


def series_coefficients(w: WeightVector, max_degree: int,
                        settings: OracleSettings = OracleSettings()) -> np.ndarray:
    """Coefficients of t^0 .. t^max_degree in 1 / prod(1 - t^{w_i})."""
    if max_degree > settings.max_series_degree:
        raise TooLarge(f"series degree {max_degree} exceeds the limit {settings.max_series_degree}")
    weights = np.array(w.as_tuple, dtype=np.int64)
    return _series_coefficients(weights, max(max_degree, 0))


def count_series(w: WeightVector, d: int, settings: OracleSettings = OracleSettings()) -> int:
    if d < 0:
        return 0
    return int(series_coefficients(w, d, settings)[d])
