import logging
from dataclasses import dataclass, field
from fractions import Fraction
from multiprocessing.pool import ThreadPool
from typing import Callable, List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from lattice_rr.arith.exact_arith import frac_part, is_coprime
from lattice_rr.arith.weights import WeightVector, reduce
from lattice_rr.counting.ehrhart import \
    cohomology_split, count, euler_characteristic, virtual_genus
from lattice_rr.counting.lattice_oracles import count_bruteforce, series_coefficients
from lattice_rr.errors import TooLarge
from lattice_rr.lattice_config import VerifySettings
from lattice_rr.numeric.unity_check import r_via_roots
from lattice_rr.singularity.correction import \
    CyclicQuotient, a_count, correction_R, correction_R_1q, correction_R_blowup, \
    correction_R_global, delta_comb, delta_invariant, recursion_steps
from lattice_rr.singularity.hj_geometry import \
    blache_bound_report, blache_diff_report, exact_determinant, hj_expand, hj_fold, \
    intersection_matrix, lct, relative_canonical


logger = logging.getLogger(__name__)


@dataclass
class CheckOutcome:
    name: str
    cases: int = 0
    failures: int = 0
    first_failure: Optional[str] = None
    worst_error: Optional[float] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def check(self, case: str, predicate: Callable[[], bool]):
        self.cases += 1
        try:
            ok = predicate()
        except TooLarge:
            raise
        except (ArithmeticError, ValueError) as exc:
            ok, case = False, f"{case} raised {exc!r}"
        if not ok:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = case
                logger.debug("check %s failed on %s", self.name, case)


@dataclass
class VerifyReport:
    settings: VerifySettings
    outcomes: List[CheckOutcome] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(o.passed for o in self.outcomes)

    @property
    def total_cases(self) -> int:
        return sum(o.cases for o in self.outcomes)

    @property
    def worst_float_error(self) -> float:
        errors = [o.worst_error for o in self.outcomes if o.worst_error is not None]
        return max(errors, default=0.0)


def _randint(rng: np.random.Generator, low: int, high: int) -> int:
    """Uniform integer in [low, high]."""
    return int(rng.integers(low, high + 1))


def _random_weights(rng: np.random.Generator, max_weight: int) -> WeightVector:
    return WeightVector(*(_randint(rng, 1, max_weight) for _ in range(3)))


def _random_pairwise_coprime(rng: np.random.Generator, max_weight: int) -> WeightVector:
    for _ in range(1000):
        w = _random_weights(rng, max_weight)
        if w.is_pairwise_coprime:
            return w
    return WeightVector(1, 1, 1)


def _random_unit(rng: np.random.Generator, d: int) -> int:
    while True:
        a = _randint(rng, 1, d)
        if is_coprime(a, d):
            return a


def _random_coprime_pair(rng: np.random.Generator, max_order: int) -> Tuple[int, int]:
    d = _randint(rng, 2, max_order)
    q = _random_unit(rng, d) % d
    return d, q


def _random_type(rng: np.random.Generator, max_order: int) -> CyclicQuotient:
    d = _randint(rng, 2, max_order)
    return CyclicQuotient(d, _random_unit(rng, d), _random_unit(rng, d))


def _fibonacci_pairs(max_n: int) -> List[Tuple[int, int, int]]:
    pairs, f_n, f_next = [], 1, 1
    for n in range(1, max_n + 1):
        pairs.append((n, f_next, f_n))
        f_n, f_next = f_next, f_n + f_next
    return pairs


def check_golden_values(rng: np.random.Generator, settings: VerifySettings) -> CheckOutcome:
    outcome = CheckOutcome("golden_values")
    outcome.check("count(19,77,12; 1528)", lambda: count(WeightVector(19, 77, 12), 1528) == 70)
    outcome.check("count(1235,6545,2652; 1710721)",
                  lambda: count(WeightVector(1235, 6545, 2652), 1710721) == 70)
    outcome.check("R(19,77,12; 1528)", lambda: correction_R_global(
        WeightVector(19, 77, 12), 1528) == Fraction(-9635, 4389))
    return outcome


def check_oracle_equivalence(rng: np.random.Generator, settings: VerifySettings) -> CheckOutcome:
    outcome = CheckOutcome("oracle_equivalence")
    for case in range(settings.num_cases):
        w = _random_weights(rng, settings.max_weight)
        if case % 5 == 0 and settings.max_weight >= 2:
            g = _randint(rng, 2, min(3, settings.max_weight))
            w = WeightVector(*(g * max(1, x // g) for x in w.as_tuple))
        d = _randint(rng, 0, settings.max_degree)
        series = series_coefficients(w, d, settings.oracle_config)
        outcome.check(f"w={w}, d={d}", lambda: count(w, d)
                      == count_bruteforce(w, d, settings.oracle_config) == int(series[d]))
    return outcome


def check_reduction(rng: np.random.Generator, settings: VerifySettings) -> CheckOutcome:
    outcome = CheckOutcome("reduction")
    for _ in range(settings.num_cases // 4 + 1):
        w = _random_weights(rng, settings.max_weight)
        if w.total_gcd != 1:
            continue
        d = _randint(rng, 0, settings.max_degree)

        def reduction_holds() -> bool:
            red = reduce(w, d)
            reconstructed = sum(x * r for x, r in zip(w.as_tuple, red.residues)) \
                + red.e * red.gcd_product
            return reconstructed == d and red.v.is_pairwise_coprime \
                and count_bruteforce(w, d, settings.oracle_config) \
                == count_bruteforce(red.v, red.e, settings.oracle_config)

        outcome.check(f"w={w}, d={d}", reduction_holds)
    return outcome


def check_bridge(rng: np.random.Generator, settings: VerifySettings) -> CheckOutcome:
    outcome = CheckOutcome("correction_delta_bridge")
    for _ in range(settings.num_cases):
        x = _random_type(rng, settings.max_type_order)
        k = _randint(rng, -3 * x.d, 3 * x.d)
        outcome.check(f"{x}, k={k}", lambda: correction_R(x, k) == -delta_invariant(x, -k))
    return outcome


def check_symmetries(rng: np.random.Generator, settings: VerifySettings) -> CheckOutcome:
    outcome = CheckOutcome("periodicity_duality")
    for _ in range(settings.num_cases):
        x = _random_type(rng, settings.max_type_order)
        k = _randint(rng, -3 * x.d, 3 * x.d)
        outcome.check(f"{x}, k={k} periodic", lambda: correction_R(x, k) == correction_R(x, k + x.d))
        outcome.check(f"{x}, k={k} dual",
                      lambda: correction_R(x, k) == correction_R(x, -(x.a + x.b) - k))
        outcome.check(f"{x} zero point", lambda: correction_R(x, x.d - x.a - x.b) == 0)
    return outcome


def check_fractional_identities(rng: np.random.Generator, settings: VerifySettings) -> CheckOutcome:
    outcome = CheckOutcome("fractional_identities")
    for _ in range(settings.num_cases):
        d, q = _random_coprime_pair(rng, settings.max_type_order)
        k = _randint(rng, 0, 2 * d)
        outcome.check(f"fpart d={d}, q={q}, k={k}", lambda: correction_R_1q(d, q, k)
                      + correction_R_1q(d, d - q, k) + frac_part(Fraction(k, d)) == 0)
        p, q_ord = _random_unit(rng, d), d
        outcome.check(f"R(X({q_ord};{p},1))(-{p})", lambda: correction_R(
            CyclicQuotient(q_ord, p, 1), -p) == -Fraction(q_ord - 1, 2 * q_ord))
    return outcome


def check_lattice_identities(rng: np.random.Generator, settings: VerifySettings) -> CheckOutcome:
    outcome = CheckOutcome("lattice_identities")
    for _ in range(settings.num_cases // 4 + 1):
        q, p = _random_coprime_pair(rng, min(settings.max_type_order, 30))
        r = _randint(rng, 0, 6)
        w = WeightVector(p, q, 1)
        outcome.check(f"A({p},{q},{r})", lambda: count(w, q * r - p - q) == a_count(p, q, r))
        outcome.check(f"g({p},{q},1)({q * r + 1})", lambda: virtual_genus(w, q * r + 1)
                      == delta_comb(p, q, r) - Fraction(p + q, 2 * p * q) + 1)
    return outcome


def check_global_identities(rng: np.random.Generator, settings: VerifySettings) -> CheckOutcome:
    outcome = CheckOutcome("global_identities")
    for _ in range(4):
        w = _random_pairwise_coprime(rng, settings.max_weight)
        for d in range(-w.abs_w + 1, 0):
            outcome.check(f"w={w}, d={d} vanishes", lambda: euler_characteristic(w, d) == 0)
        for d in range(-2 * w.abs_w, 2 * w.abs_w):
            outcome.check(f"w={w}, d={d} serre", lambda: euler_characteristic(w, d)
                          == euler_characteristic(w, -w.abs_w - d))
            outcome.check(f"w={w}, d={d} period", lambda: euler_characteristic(w, d + w.bar_w)
                          - euler_characteristic(w, d) == d + Fraction(w.bar_w + w.abs_w, 2))
            outcome.check(f"w={w}, d={d} h0+h2", lambda: sum(cohomology_split(w, d))
                          == euler_characteristic(w, d))
    return outcome


def check_resolution(rng: np.random.Generator, settings: VerifySettings) -> CheckOutcome:
    outcome = CheckOutcome("resolution_invariants")
    for _ in range(settings.num_cases // 4 + 1):
        d, q = _random_coprime_pair(rng, settings.max_type_order)

        def resolution_holds() -> bool:
            h = hj_expand(d, q)
            qs, qbars = (d,) + h.q + (0,), (0,) + h.qbar
            cross_ok = all(qs[i] * qbars[i + 1] - qs[i + 1] * qbars[i] == d for i in range(h.n))
            kappa_ok = all(-1 < x <= 0 for x in relative_canonical(h))
            return cross_ok and kappa_ok and hj_fold(h.c) == Fraction(d, q) \
                and abs(exact_determinant(intersection_matrix(h))) == d \
                and lct(d, q) >= Fraction(2, d)

        outcome.check(f"d={d}, q={q}", resolution_holds)
        outcome.check(f"blache d={d}, q={q}", lambda: blache_bound_report(d, q).holds
                      and blache_diff_report(d, q).holds)
    return outcome


def check_roots_of_unity(rng: np.random.Generator, settings: VerifySettings) -> CheckOutcome:
    outcome = CheckOutcome("roots_of_unity", worst_error=0.0)
    for _ in range(settings.num_float_cases):
        x = _random_type(rng, settings.max_float_order)
        k = _randint(rng, 0, x.d - 1)

        def agrees() -> bool:
            exact = correction_R(x, k)
            error = abs(r_via_roots(x.d, x.a, x.b, k) - float(exact))
            outcome.worst_error = max(outcome.worst_error, error)
            return error < 1e-8 * (1 + abs(float(exact)))

        outcome.check(f"{x}, k={k}", agrees)
    return outcome


def check_recursion_depth(rng: np.random.Generator, settings: VerifySettings) -> CheckOutcome:
    outcome = CheckOutcome("recursion_depth")
    for n, f_next, f_n in _fibonacci_pairs(60):
        outcome.check(f"fib n={n}", lambda: recursion_steps(f_next, f_n) == n - 1)
    for _ in range(settings.num_cases // 4 + 1):
        d, q = _random_coprime_pair(rng, settings.max_type_order)
        k = _randint(rng, 0, d - 1)
        outcome.check(f"blowup d={d}, q={q}, k={k}",
                      lambda: correction_R_blowup(d, q, k)[0] == correction_R_1q(d, q, k))
    return outcome


ALL_CHECKS = [
    check_golden_values,
    check_oracle_equivalence,
    check_reduction,
    check_bridge,
    check_symmetries,
    check_fractional_identities,
    check_lattice_identities,
    check_global_identities,
    check_resolution,
    check_roots_of_unity,
    check_recursion_depth
]


def _check_oracle_limits(settings: VerifySettings):
    # random weights may all be 1, the worst case for brute force
    oracle = settings.oracle_config
    iterations = (settings.max_degree + 1) ** 2
    if iterations > oracle.max_bruteforce_iterations:
        raise TooLarge(f"max degree {settings.max_degree} needs ~{iterations} brute force iterations, "
                       f"limit is {oracle.max_bruteforce_iterations}")
    if settings.max_degree > oracle.max_series_degree:
        raise TooLarge(f"max degree {settings.max_degree} exceeds the series limit {oracle.max_series_degree}")


def run_verify(settings: VerifySettings = VerifySettings(), show_progress: bool = False) -> VerifyReport:
    _check_oracle_limits(settings)

    def run_check(job: Tuple[int, Callable]) -> CheckOutcome:
        index, check_func = job
        rng = np.random.default_rng([settings.seed, index])
        return check_func(rng, settings)

    jobs = list(enumerate(ALL_CHECKS))
    with ThreadPool(settings.num_workers) as pool:
        outcomes = list(tqdm(pool.imap_unordered(run_check, jobs), total=len(jobs),
                             desc="verify", disable=not show_progress))

    outcomes.sort(key=lambda o: o.name)
    report = VerifyReport(settings, outcomes)
    logger.debug("verify checked %d cases, worst float error %g",
                 report.total_cases, report.worst_float_error)
    return report
