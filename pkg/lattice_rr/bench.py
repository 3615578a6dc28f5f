import time
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from lattice_rr.arith.weights import WeightVector
from lattice_rr.counting.ehrhart import count
from lattice_rr.counting.lattice_oracles import count_series
from lattice_rr.lattice_config import BenchSettings
from lattice_rr.singularity.correction import \
    correction_R_1q, correction_R_blowup, recursion_steps


@dataclass
class FibStepResult:
    n: int
    d: int
    q: int
    steps: int
    value: Fraction
    seconds: float

    @property
    def expected_steps(self) -> int:
        return self.n - 1

    @property
    def holds(self) -> bool:
        return self.steps == self.expected_steps


@dataclass
class BlowupResult:
    d: int
    fast_steps: int
    blowup_steps: int
    fast_seconds: float
    blowup_seconds: float
    agree: bool


@dataclass
class RandomBenchResult:
    weights: WeightVector
    degree: int
    count: int
    fast_seconds: float
    series_count: Optional[int] = None
    series_seconds: Optional[float] = None

    @property
    def agree(self) -> bool:
        return self.series_count is None or self.series_count == self.count


def fibonacci_pair(n: int) -> Tuple[int, int]:
    """(F_{n+1}, F_n) with F_1 = F_2 = 1."""
    f_n, f_next = 1, 1
    for _ in range(n - 1):
        f_n, f_next = f_next, f_n + f_next
    return f_next, f_n


def run_fib_bench(max_n: int, show_progress: bool = False) -> List[FibStepResult]:
    results = []
    for n in tqdm(range(1, max_n + 1), desc="fib", disable=not show_progress):
        d, q = fibonacci_pair(n)
        start_time = time.perf_counter()
        value = correction_R_1q(d, q, d // 2)
        seconds = time.perf_counter() - start_time
        results.append(FibStepResult(n, d, q, recursion_steps(d, q), value, seconds))
    return results


def run_blowup_bench(max_exponent: int, show_progress: bool = False) -> List[BlowupResult]:
    results = []
    for exponent in tqdm(range(1, max_exponent + 1), desc="blowup", disable=not show_progress):
        d = 2**exponent
        q, k = d - 1, d // 2

        start_time = time.perf_counter()
        fast_value = correction_R_1q(d, q, k)
        fast_seconds = time.perf_counter() - start_time

        start_time = time.perf_counter()
        blowup_value, blowup_steps = correction_R_blowup(d, q, k)
        blowup_seconds = time.perf_counter() - start_time

        results.append(BlowupResult(d, recursion_steps(d, q), blowup_steps,
                                    fast_seconds, blowup_seconds, fast_value == blowup_value))
    return results


def run_random_bench(settings: BenchSettings = BenchSettings(),
                     show_progress: bool = False) -> List[RandomBenchResult]:
    rng = np.random.default_rng(settings.seed)
    compare = settings.series_compare \
        and settings.degree <= settings.oracle_config.max_series_degree
    results = []

    for _ in tqdm(range(settings.num_samples), desc="random", disable=not show_progress):
        w = WeightVector(*(int(x) for x in rng.integers(1, settings.max_weight + 1, size=3)))
        start_time = time.perf_counter()
        fast_count = count(w, settings.degree)
        result = RandomBenchResult(w, settings.degree, fast_count, time.perf_counter() - start_time)

        if compare:
            start_time = time.perf_counter()
            result.series_count = count_series(w, settings.degree, settings.oracle_config)
            result.series_seconds = time.perf_counter() - start_time
        results.append(result)
    return results
