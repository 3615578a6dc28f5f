"""Command line front end, run as `python -m lattice_rr <command> ...`.

Exit codes: 0 success, 1 failed verification, 2 usage error, 3 domain error."""

import argparse
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence

from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from lattice_rr.arith.weights import WeightVector, reduce
from lattice_rr.bench import run_blowup_bench, run_fib_bench, run_random_bench
from lattice_rr.counting.ehrhart import count, euler_characteristic, explain_count, pick_area
from lattice_rr.errors import DomainError
from lattice_rr.lattice_config import BenchSettings, VerifySettings
from lattice_rr.report_json import dumps
from lattice_rr.singularity.correction import CyclicQuotient, correction_R, delta_invariant
from lattice_rr.singularity.hj_geometry import \
    blache_bound_report, blache_diff_report, hj_expand, intersection_matrix, lct, relative_canonical
from lattice_rr.verify import run_verify


logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


@dataclass
class CommandResult:
    payload: Dict[str, Any]
    text: Any
    exit_code: int = EXIT_OK


def _nonnegative_int(value: str) -> int:
    try:
        number = int(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"{value!r} is not an integer") from exc
    if number < 0:
        raise argparse.ArgumentTypeError(f"{value} mustn't be negative")
    return number


def _positive_int(value: str) -> int:
    number = _nonnegative_int(value)
    if number == 0:
        raise argparse.ArgumentTypeError("value mustn't be zero")
    return number


def _vec(values: Sequence[Any]) -> str:
    return "[" + ",".join(str(x) for x in values) + "]"


def _tup(values: Sequence[Any]) -> str:
    return "(" + ",".join(str(x) for x in values) + ")"


def _signed(value: Fraction) -> str:
    return f"- {-value}" if value < 0 else f"+ {value}"


def cmd_count(args) -> CommandResult:
    w = WeightVector(args.w0, args.w1, args.w2)
    if not args.explain:
        result = count(w, args.d)
        return CommandResult({"weights": w.as_tuple, "degree": args.d, "count": result}, str(result))

    expl = explain_count(w, args.d)
    lines = [f"w = {w}, d = {args.d}", f"gcd(w) = {expl.total_gcd}"]
    red = expl.reduction
    if red is None:
        lines.append(f"{expl.total_gcd} does not divide {args.d}, the triangle is empty")
    else:
        lines += [f"w01 = {red.w01}, w02 = {red.w02}, w12 = {red.w12}",
                  f"r = {_tup(red.residues)}", f"v = {red.v}", f"e = {red.e}"]
        if red.is_empty:
            lines.append("e < 0, the triangle is empty")
        else:
            v0, v1, v2 = red.v.as_tuple
            labels = [f"X({v0};{v1},{v2})", f"X({v1};{v0},{v2})", f"X({v2};{v0},{v1})"]
            lines.append(f"quadratic term = {expl.quadratic}")
            for label, term in zip(labels, expl.local_terms):
                d_n, q_n, k_n = term.normalized
                lines.append(f"R_{label}({red.e}) = R_X({d_n};1,{q_n})({k_n}) = {term.value}")
                lines += [f"  d={s.d} q={s.q} k={s.k}: {'+' if s.sign > 0 else '-'}({s.term})"
                          for s in term.chain]
            lines.append(f"R = {expl.correction}")
            lines.append(f"count = 1 {_signed(expl.quadratic)} {_signed(expl.correction)} = {expl.count}")
    lines.append(str(expl.count))

    payload = {"weights": w.as_tuple, "degree": args.d, "count": expl.count, "total_gcd": expl.total_gcd,
               "reduction": red, "quadratic": expl.quadratic, "correction": expl.correction,
               "local_terms": [{"type": t.singularity, "normalized": t.normalized, "value": t.value,
                                "chain": [{"d": s.d, "q": s.q, "k": s.k, "sign": s.sign, "term": s.term}
                                          for s in t.chain]}
                               for t in expl.local_terms]}
    return CommandResult(payload, "\n".join(lines))


def cmd_correction(args) -> CommandResult:
    x = CyclicQuotient(args.d, args.a, args.b)
    value = correction_R(x, args.k)
    return CommandResult({"type": x, "k": args.k, "value": value}, str(value))


def cmd_delta(args) -> CommandResult:
    x = CyclicQuotient(args.d, args.a, args.b)
    value = delta_invariant(x, args.k)
    return CommandResult({"type": x, "k": args.k, "value": value}, str(value))


def cmd_chi(args) -> CommandResult:
    w = WeightVector(args.w0, args.w1, args.w2)
    value = euler_characteristic(w, args.d)
    return CommandResult({"weights": w.as_tuple, "degree": args.d, "chi": value}, str(value))


def cmd_reduce(args) -> CommandResult:
    red = reduce(WeightVector(args.w0, args.w1, args.w2), args.d)
    text = "\n".join([f"w01 = {red.w01}, w02 = {red.w02}, w12 = {red.w12}",
                      f"r = {_tup(red.residues)}", f"v = {red.v}", f"e = {red.e}"])
    return CommandResult({"reduction": red}, text)


def cmd_hj(args) -> CommandResult:
    h = hj_expand(args.d, args.q)
    payload = {"hj": h, "kappa": relative_canonical(h), "matrix": intersection_matrix(h)}
    return CommandResult(payload, f"c={_vec(h.c)} q={_vec(h.q)} qbar={_vec(h.qbar)}")


def cmd_lct(args) -> CommandResult:
    value = lct(args.d, args.q)
    return CommandResult({"d": args.d, "q": args.q, "lct": value}, str(value))


def cmd_blache(args) -> CommandResult:
    bound_rep = blache_bound_report(args.d, args.q)
    diff_rep = blache_diff_report(args.d, args.q)

    lines = [f"gorenstein index I = {bound_rep.gorenstein_index}"]
    lines += [f"l={e.ell} k={e.degree} R={e.correction} bound={e.bound} holds={e.holds}"
              for e in bound_rep.entries]
    lines.append(f"difference bound 1 - lct = {diff_rep.bound}")
    lines.append("differences = " + ", ".join(str(e.difference) for e in diff_rep.entries))
    lines.append(f"max difference {diff_rep.max_difference} attained at l = {_vec(diff_rep.attained_at)}")
    holds = bound_rep.holds and diff_rep.holds
    lines.append(f"holds = {holds}")

    payload = {
        "d": args.d, "q": args.q, "gorenstein_index": bound_rep.gorenstein_index,
        "bound_entries": [{"ell": e.ell, "degree": e.degree, "correction": e.correction,
                           "bound": e.bound, "holds": e.holds} for e in bound_rep.entries],
        "diff_bound": diff_rep.bound,
        "diff_entries": [{"ell": e.ell, "difference": e.difference, "holds": e.holds}
                         for e in diff_rep.entries],
        "attained_at": diff_rep.attained_at,
        "holds": holds}
    return CommandResult(payload, "\n".join(lines), EXIT_OK if holds else EXIT_FAILED)


def cmd_pick(args) -> CommandResult:
    area = pick_area(args.i, args.b)
    return CommandResult({"interior": args.i, "boundary": args.b, "area": area}, str(area))


def cmd_verify(args) -> CommandResult:
    settings = VerifySettings(max_weight=args.max_weight, max_degree=args.max_degree,
                              max_type_order=args.max_type_order, num_cases=args.cases,
                              seed=args.seed, num_workers=args.workers)
    report = run_verify(settings, show_progress=not args.json)

    table = Table(title="verify")
    for column in ("check", "cases", "failures", "first failure"):
        table.add_column(column)
    for o in report.outcomes:
        table.add_row(o.name, str(o.cases), str(o.failures), o.first_failure or "")
    table.caption = f"checked {report.total_cases} cases, worst float error {report.worst_float_error:.3e}"

    payload = {"passed": report.passed, "total_cases": report.total_cases,
               "worst_float_error": report.worst_float_error,
               "checks": [{"name": o.name, "cases": o.cases, "failures": o.failures,
                           "first_failure": o.first_failure} for o in report.outcomes]}
    return CommandResult(payload, table, EXIT_OK if report.passed else EXIT_FAILED)


def cmd_bench(args) -> CommandResult:
    table = Table(title="bench")
    if args.fib is not None:
        results = run_fib_bench(args.fib, show_progress=not args.json)
        for column in ("n", "d", "q", "steps", "expected", "seconds"):
            table.add_column(column)
        for r in results:
            table.add_row(str(r.n), str(r.d), str(r.q), str(r.steps),
                          str(r.expected_steps), f"{r.seconds:.2e}")
        payload = {"fib": [{"n": r.n, "d": r.d, "q": r.q, "steps": r.steps,
                            "expected_steps": r.expected_steps, "seconds": r.seconds}
                           for r in results]}
        ok = all(r.holds for r in results)

    elif args.blowup is not None:
        results = run_blowup_bench(args.blowup, show_progress=not args.json)
        for column in ("d", "fast steps", "blowup steps", "fast seconds", "blowup seconds"):
            table.add_column(column)
        for r in results:
            table.add_row(str(r.d), str(r.fast_steps), str(r.blowup_steps),
                          f"{r.fast_seconds:.2e}", f"{r.blowup_seconds:.2e}")
        payload = {"blowup": results}
        ok = all(r.agree for r in results)

    else:
        settings = BenchSettings(max_weight=args.max_weight, degree=args.degree,
                                 num_samples=args.samples, seed=args.seed)
        results = run_random_bench(settings, show_progress=not args.json)
        for column in ("weights", "degree", "count", "fast seconds", "series seconds"):
            table.add_column(column)
        for r in results:
            series = "-" if r.series_seconds is None else f"{r.series_seconds:.2e}"
            table.add_row(str(r.weights), str(r.degree), str(r.count), f"{r.fast_seconds:.2e}", series)
        payload = {"random": [{"weights": r.weights.as_tuple, "degree": r.degree, "count": r.count,
                               "fast_seconds": r.fast_seconds, "series_count": r.series_count,
                               "series_seconds": r.series_seconds} for r in results]}
        ok = all(r.agree for r in results)

    payload["passed"] = ok
    return CommandResult(payload, table, EXIT_OK if ok else EXIT_FAILED)


def _add_command(subparsers, name: str, func: Callable, help_text: str,
                 common: argparse.ArgumentParser) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(name, help=help_text, parents=[common])
    parser.set_defaults(func=func)
    return parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine readable output")
    common.add_argument("--verbose", action="store_true", help="debug diagnostics on stderr")

    parser = argparse.ArgumentParser(
        prog="lattice_rr", description="lattice points on weighted triangles via Riemann-Roch")
    subparsers = parser.add_subparsers(dest="command", required=True)

    sub = _add_command(subparsers, "count", cmd_count, "number of lattice points of T_{w,d}", common)
    for name in ("w0", "w1", "w2"):
        sub.add_argument(name, type=_positive_int)
    sub.add_argument("d", type=_nonnegative_int)
    sub.add_argument("--explain", action="store_true", help="print the intermediate values")

    for name, func, help_text in (("correction", cmd_correction, "local correction term R_X(k)"),
                                  ("delta", cmd_delta, "Delta-invariant of X at k")):
        sub = _add_command(subparsers, name, func, help_text, common)
        sub.add_argument("d", type=_positive_int)
        sub.add_argument("a", type=int)
        sub.add_argument("b", type=int)
        sub.add_argument("k", type=int)

    for name, func, help_text in (("chi", cmd_chi, "Euler characteristic for pairwise coprime w"),
                                  ("reduce", cmd_reduce, "reduction to pairwise coprime weights")):
        sub = _add_command(subparsers, name, func, help_text, common)
        for w_name in ("w0", "w1", "w2"):
            sub.add_argument(w_name, type=_positive_int)
        sub.add_argument("d", type=int if name == "chi" else _nonnegative_int)

    for name, func, help_text in (("hj", cmd_hj, "Hirzebruch-Jung continued fraction of d/q"),
                                  ("lct", cmd_lct, "log-canonical threshold of X(d;1,q)"),
                                  ("blache", cmd_blache, "Blache bounds of X(d;1,q)")):
        sub = _add_command(subparsers, name, func, help_text, common)
        sub.add_argument("d", type=_positive_int)
        sub.add_argument("q", type=_positive_int)

    sub = _add_command(subparsers, "pick", cmd_pick, "area of a lattice polygon by Pick", common)
    sub.add_argument("i", type=_nonnegative_int)
    sub.add_argument("b", type=_nonnegative_int)

    sub = _add_command(subparsers, "verify", cmd_verify, "run the property suite", common)
    sub.add_argument("--max-weight", type=_positive_int, default=30)
    sub.add_argument("--max-degree", type=_nonnegative_int, default=500)
    sub.add_argument("--max-type-order", type=_positive_int, default=60)
    sub.add_argument("--cases", type=_positive_int, default=400)
    sub.add_argument("--seed", type=int, default=7)
    sub.add_argument("--workers", type=_positive_int, default=4)

    sub = _add_command(subparsers, "bench", cmd_bench, "recursion depth and timing", common)
    mode = sub.add_mutually_exclusive_group(required=True)
    mode.add_argument("--fib", type=_positive_int, metavar="N", nargs="?", const=BenchSettings().fib_steps)
    mode.add_argument("--blowup", type=_positive_int, metavar="N")
    mode.add_argument("--random", action="store_true")
    sub.add_argument("--max-weight", type=_positive_int, default=1000)
    sub.add_argument("--degree", type=_nonnegative_int, default=10**6)
    sub.add_argument("--samples", type=_positive_int, default=20)
    sub.add_argument("--seed", type=int, default=7)
    return parser


def _setup_logging(verbose: bool):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING, format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)], force=True)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    _setup_logging(args.verbose)

    try:
        result = args.func(args)
    except DomainError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        return EXIT_DOMAIN
    except ArithmeticError as exc:
        logger.error("internal consistency failure: %s", exc)
        return EXIT_FAILED

    if args.json:
        print(dumps(result.payload))
    elif isinstance(result.text, str):
        print(result.text)
    else:
        Console().print(result.text)
    return result.exit_code
