"""Command-line entry point: ``subpacket {compute,sweep,verify,bench}``.

Exit codes: 0 success, 1 verification or equivalence failure, 2 usage or
parameter validation error.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Optional, Sequence

from subpacket import kernels
from subpacket.closed_form import normalized_L_closed_form, polynomial_coefficients, subpacketization_level
from subpacket.params import ParameterError, derive_shape, make_parameters
from subpacket.recursion_oracle import normalized_L_via_recursion
from subpacket.sweep import parse_range, sweep, write_csv, write_json
from subpacket.verifier import DEFAULT_GRID, Grid, run_suite

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _fail_usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def cmd_compute(args: argparse.Namespace) -> int:
    try:
        p = make_parameters(args.N, args.K, args.D)
    except ParameterError as exc:
        return _fail_usage(str(exc))
    shape = derive_shape(p)
    print(f"N = {p.N}, K = {p.K}, D = {p.D}")
    print(f"T = {shape.T}, S = {shape.S}")

    if args.via == "recursion":
        print(f"L = {normalized_L_via_recursion(p)}  (via recursion)")
        return EXIT_OK

    res = subpacketization_level(p)
    print(f"L = {res.L}")
    print(f"subpacketization = {res.subpacketization}")
    print(f"multiplier = {res.multiplier}")
    print(f"filtered coefficients = {polynomial_coefficients(p)}")
    if args.via == "both":
        via_rec = normalized_L_via_recursion(p)
        if via_rec != res.L:
            print(f"MISMATCH: recursion gives {via_rec}, closed form gives {res.L}", file=sys.stderr)
            return EXIT_FAILURE
        print("paths agree: recursion == closed form")
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    try:
        ranges = [parse_range(args.N), parse_range(args.K), parse_range(args.D)]
    except ValueError as exc:
        return _fail_usage(str(exc))
    rows, skipped = sweep(*ranges)
    writer = write_csv if args.format == "csv" else write_json
    if args.output in (None, "-"):
        writer(rows, sys.stdout)
    else:
        try:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                writer(rows, fh)
        except OSError as exc:
            print(f"error: cannot write {args.output}: {exc.strerror}", file=sys.stderr)
            return EXIT_FAILURE
    print(f"{len(rows)} rows written, {skipped} invalid triples skipped", file=sys.stderr)
    return EXIT_OK


def parse_grid(text: str) -> Grid:
    """``N=a..b,K=a..b,D=a..b``; omitted axes fall back to the default grid."""
    axes = {"N": DEFAULT_GRID.N, "K": DEFAULT_GRID.K, "D": DEFAULT_GRID.D}
    for part in text.split(","):
        name, sep, spec = part.partition("=")
        name = name.strip()
        if not sep or name not in axes:
            raise ValueError(f"malformed grid component {part!r}: expected N=a..b, K=a..b or D=a..b")
        axes[name] = parse_range(spec)
    return Grid(**axes)


def _fmt_residual(value) -> str:
    return f"{float(value):.3e}"


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        grid = parse_grid(args.grid) if args.grid else DEFAULT_GRID
    except ValueError as exc:
        return _fail_usage(str(exc))
    if next(grid.triples(), None) is None:
        return _fail_usage("grid contains no valid (N, K, D) triple")

    summaries = run_suite(grid, tolerance=args.tolerance, samples=args.samples, seed=args.seed)
    failed = False
    for s in summaries:
        status = "PASS" if s.passed else "FAIL"
        line = (
            f"{status}  {s.identity_name:<24} {s.mode:<8} n={s.instances:<6} "
            f"worst={_fmt_residual(s.worst_residual)} tol={s.tolerance:g} at {s.worst_params}"
        )
        if not s.passed:
            failed = True
            line += f"  [{s.failures} failures, first at {s.first_failure}]"
        print(line)
    print("all identities pass" if not failed else "verification FAILED")
    return EXIT_FAILURE if failed else EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        p = make_parameters(args.N, args.K, args.D)
    except ParameterError as exc:
        return _fail_usage(str(exc))
    if args.repetitions < 1:
        return _fail_usage("requires repetitions >= 1")

    t_rec = t_closed = 0.0
    mismatches = 0
    for _ in range(args.repetitions):
        start = time.perf_counter()
        a = normalized_L_via_recursion(p)
        t_rec += time.perf_counter() - start
        start = time.perf_counter()
        b = normalized_L_closed_form(p)
        t_closed += time.perf_counter() - start
        mismatches += a != b

    reps = args.repetitions
    print(f"N = {p.N}, K = {p.K}, D = {p.D}; {reps} repetitions; kernels: {kernels.BACKEND}")
    print(f"recursion    {t_rec / reps * 1e3:10.3f} ms/eval")
    print(f"closed form  {t_closed / reps * 1e3:10.3f} ms/eval")
    if mismatches:
        print(f"{mismatches} of {reps} repetitions disagree", file=sys.stderr)
        return EXIT_FAILURE
    print("all outputs equal")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subpacket",
        description="Normalized subpacketization level L and subpacketization of multi-message PIR.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_triple(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("-N", type=int, required=True, help="number of servers")
        sp.add_argument("-K", type=int, required=True, help="total number of messages")
        sp.add_argument("-D", type=int, required=True, help="number of demand messages")

    sp = sub.add_parser("compute", help="evaluate L and the subpacketization level")
    add_triple(sp)
    sp.add_argument("--via", choices=("recursion", "closed", "both"), default="closed")
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("sweep", help="tabulate a parameter grid to CSV or JSON")
    sp.add_argument("-N", required=True, metavar="A..B")
    sp.add_argument("-K", required=True, metavar="A..B")
    sp.add_argument("-D", required=True, metavar="A..B")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("-o", "--output", help="output path (default: stdout)")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("verify", help="check every intermediate identity over a grid")
    sp.add_argument("--grid", help="e.g. N=2..4,K=3..10,D=2..4 (default N=2..16,K=3..20,D=2..19)")
    sp.add_argument("--tolerance", type=float, help="override every floating-point tolerance")
    sp.add_argument("--samples", type=int, default=100, help="random rationals per (K, D) for the binomial identities")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bench", help="time recursion vs closed form")
    add_triple(sp)
    sp.add_argument("-r", "--repetitions", type=int, default=10)
    sp.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
