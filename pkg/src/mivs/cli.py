"""Command-line interface.

Subcommands mirror the package surface: solve, policy, curve, export-lp,
gen, bench, serve. Exit codes: 0 success, 2 input error, 3 infeasible,
4 size cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from typing import Optional

from . import bench as bench_mod
from . import io as io_mod
from .errors import (
    BadConstraint,
    BadNumber,
    BadParameters,
    ConflictingConstraints,
    DimensionMismatch,
    DuplicateId,
    EmptyInstance,
    EmptySubset,
    IndexOutOfRange,
    InfeasibleSubset,
    MalformedCsv,
    MivsError,
    NegativeFixedCost,
    NoFeasibleSubset,
    NoFullCoverageVendor,
    NonPositivePrice,
    OutOfRange,
    SolveTimeout,
    TooManyVendors,
    UncoveredItem,
    UnsupportedWidth,
)
from .lp_format import export_integer_program
from .model import Constraints, CoverageMode, Instance
from .money import format_money, format_signed_money
from .policies import policy_cheapest_per_item, policy_single_vendor
from .solver import SolverOptions, solve_exhaustive
from .whatif import compare_solutions, cost_curve

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INFEASIBLE = 3
EXIT_SIZE_CAP = 4

_INPUT_ERRORS = (
    MalformedCsv,
    BadNumber,
    BadParameters,
    DimensionMismatch,
    DuplicateId,
    NonPositivePrice,
    NegativeFixedCost,
    EmptyInstance,
    BadConstraint,
    ConflictingConstraints,
    OutOfRange,
    UnsupportedWidth,
    EmptySubset,
    IndexOutOfRange,
)
_INFEASIBLE_ERRORS = (
    NoFeasibleSubset,
    InfeasibleSubset,
    NoFullCoverageVendor,
    UncoveredItem,
)
_SIZE_ERRORS = (TooManyVendors, SolveTimeout)


def _read_instance(path: str) -> Instance:
    if path == "-":
        return io_mod.parse_bid_csv(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as handle:
        return io_mod.parse_bid_csv(handle.read())


def _vendor_indices(instance: Instance, tokens: list[str]) -> frozenset[int]:
    """Resolve vendor ids (or 1-based indices) from repeatable/comma flags."""
    indices = set()
    for token in tokens:
        for piece in token.split(","):
            piece = piece.strip()
            if not piece:
                continue
            try:
                indices.add(instance.vendor_index(piece))
            except BadConstraint:
                if piece.isdigit() and 1 <= int(piece) <= instance.n:
                    indices.add(int(piece))
                else:
                    raise
    return frozenset(indices)


def _constraints_from_args(instance: Instance, args) -> Constraints:
    cardinality = None
    if getattr(args, "exact_vendors", None) is not None:
        cardinality = args.exact_vendors
    elif getattr(args, "max_vendors", None) is not None:
        cardinality = (1, args.max_vendors)
    return Constraints(
        required=_vendor_indices(instance, args.require or []),
        forbidden=_vendor_indices(instance, args.forbid or []),
        cardinality=cardinality,
        coverage=CoverageMode.PARTIAL if getattr(args, "partial", False) else CoverageMode.FULL,
    )


def _options_from_args(args) -> SolverOptions:
    return SolverOptions(
        pruning=getattr(args, "prune", False),
        workers=getattr(args, "workers", 1),
        vendor_cap=getattr(args, "vendor_cap", 24),
    )


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        print(text)


def _solution_summary(report, instance: Instance) -> str:
    best = report.best
    vendors = ", ".join(
        instance.vendors[j - 1].id for j in best.subset.sorted_members()
    )
    lines = [
        f"optimum id {best.subset.solution_id}: vendors {vendors}",
        f"  acquisition {format_money(best.acquisition_cost)}"
        f"  fixed {format_money(best.fixed_cost)}"
        f"  total {format_money(best.total_cost)}",
        f"  items covered {best.items_covered}/{instance.m}",
        f"  subsets evaluated {report.subsets_evaluated}"
        f" pruned {report.subsets_pruned}"
        f" infeasible {report.subsets_infeasible}"
        f" in {report.wall_time * 1000:.1f} ms",
    ]
    return "\n".join(lines)


def _cmd_solve(args) -> int:
    instance = _read_instance(args.instance)
    constraints = _constraints_from_args(instance, args)
    options = _options_from_args(args)
    report = solve_exhaustive(instance, constraints, options)
    delta = None
    if not constraints.is_trivial:
        baseline = solve_exhaustive(
            instance, Constraints(coverage=constraints.coverage), options
        )
        delta = compare_solutions(baseline.best, report.best)
    if args.json or args.output:
        _emit(io_mod.solution_report_json(report, delta), args.output)
    else:
        print(_solution_summary(report, instance))
        if delta is not None:
            print(
                f"  vs unconstrained optimum: {format_signed_money(delta.total_delta)}"
            )
    return EXIT_OK


def _cmd_policy(args) -> int:
    instance = _read_instance(args.instance)
    alt2 = policy_cheapest_per_item(instance)
    try:
        alt1 = policy_single_vendor(instance)
    except NoFullCoverageVendor:
        if args.alt1:
            raise
        alt1 = None
    if args.json or args.output:
        _emit(io_mod.policies_json(alt1, alt2, instance), args.output)
        return EXIT_OK
    if alt1 is not None and not args.alt2:
        s = alt1.solution
        vendor = instance.vendors[next(iter(s.subset.members)) - 1].id
        print(
            f"single vendor: {vendor}"
            f"  purchasing {format_money(s.acquisition_cost)}"
            f"  total {format_money(s.total_cost)}"
        )
    if not args.alt1:
        s = alt2.solution
        vendors = ", ".join(
            instance.vendors[j - 1].id for j in s.subset.sorted_members()
        )
        print(
            f"cheapest per item: vendors {vendors}"
            f"  acquisition {format_money(s.acquisition_cost)}"
            f"  total {format_money(s.total_cost)}"
        )
    return EXIT_OK


def _cmd_curve(args) -> int:
    instance = _read_instance(args.instance)
    constraints = _constraints_from_args(instance, args)
    options = _options_from_args(args)
    curve = cost_curve(instance, constraints, options, method=args.method)
    if args.json or args.output:
        _emit(io_mod.curve_json(curve, instance), args.output)
        return EXIT_OK
    for entry in curve.entries:
        if entry.solution is None:
            print(f"k={entry.k}: infeasible")
        else:
            marker = "  <- optimum" if entry.k == curve.optimum_k else ""
            print(
                f"k={entry.k}: {format_money(entry.solution.total_cost)}{marker}"
            )
    return EXIT_OK


def _cmd_export_lp(args) -> int:
    instance = _read_instance(args.instance)
    _emit(export_integer_program(instance), args.output)
    return EXIT_OK


def _cmd_gen(args) -> int:
    def parse_range(text: str) -> tuple[int, int]:
        lo, _, hi = text.partition(":")
        try:
            return int(lo), int(hi)
        except ValueError as exc:
            raise BadParameters(f"range must be LO:HI, got {text!r}") from exc

    instance = io_mod.generate_instance(
        m=args.items,
        n=args.vendors,
        seed=args.seed,
        price_range=parse_range(args.price_range),
        fixed_range=parse_range(args.fixed_range),
        bid_density=args.density,
    )
    _emit(io_mod.write_bid_csv(instance), args.output)
    return EXIT_OK


def _cmd_bench(args) -> int:
    def parse_list(text: str) -> list[int]:
        try:
            return [int(piece) for piece in text.split(",") if piece.strip()]
        except ValueError as exc:
            raise BadParameters(f"expected comma-separated ints, got {text!r}") from exc

    records = bench_mod.run_bench(
        vendor_counts=parse_list(args.vendors),
        item_counts=parse_list(args.items),
        workers=args.workers,
        repetitions=args.reps,
        pruning=args.prune,
        vendor_cap=args.vendor_cap,
    )
    _emit(bench_mod.bench_csv(records), args.output)
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(
        max_instances=args.max_instances,
        time_budget=args.time_budget,
        vendor_cap=args.vendor_cap,
        workers=args.workers,
        ui_dir=args.ui,
    )
    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mivs",
        description=(
            "Exact vendor-selection optimizer: minimize item prices plus "
            "per-vendor fixed handling costs over all vendor subsets."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_instance(p):
        p.add_argument("instance", help="bid CSV path, or - for stdin")

    def add_output(p):
        p.add_argument("-o", "--output", help="write result to this file")

    def add_constraint_flags(p):
        p.add_argument(
            "--require",
            action="append",
            metavar="VENDOR",
            help="vendor that must be selected (repeatable, comma-separable)",
        )
        p.add_argument(
            "--forbid",
            action="append",
            metavar="VENDOR",
            help="vendor that must not be selected (repeatable, comma-separable)",
        )
        p.add_argument(
            "--exact-vendors", type=int, metavar="K", help="exactly K vendors"
        )
        p.add_argument(
            "--max-vendors", type=int, metavar="K", help="at most K vendors"
        )
        p.add_argument(
            "--partial",
            action="store_true",
            help="allow uncovered items (report coverage instead of failing)",
        )

    def add_solver_flags(p):
        p.add_argument("--prune", action="store_true", help="enable pruning")
        p.add_argument("--workers", type=int, default=1, help="worker count")
        p.add_argument(
            "--vendor-cap",
            type=int,
            default=24,
            help="refuse exhaustive solves beyond this many vendors",
        )

    p = sub.add_parser("solve", help="find the optimal vendor subset")
    add_instance(p)
    add_constraint_flags(p)
    add_solver_flags(p)
    p.add_argument("--json", action="store_true", help="emit the JSON document")
    add_output(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("policy", help="evaluate the baseline policies")
    add_instance(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--alt1", action="store_true", help="single vendor only")
    group.add_argument("--alt2", action="store_true", help="cheapest per item only")
    p.add_argument("--json", action="store_true", help="emit the JSON document")
    add_output(p)
    p.set_defaults(func=_cmd_policy)

    p = sub.add_parser("curve", help="best total per exact vendor count")
    add_instance(p)
    add_constraint_flags(p)
    add_solver_flags(p)
    p.add_argument(
        "--method",
        choices=("per_k", "sweep"),
        default="per_k",
        help="n constrained solves, or one bucketing sweep",
    )
    p.add_argument("--json", action="store_true", help="emit the JSON document")
    add_output(p)
    p.set_defaults(func=_cmd_curve)

    p = sub.add_parser("export-lp", help="write the integer program in LP format")
    add_instance(p)
    add_output(p)
    p.set_defaults(func=_cmd_export_lp)

    p = sub.add_parser("gen", help="generate a synthetic instance CSV")
    p.add_argument("-m", "--items", type=int, required=True)
    p.add_argument("-n", "--vendors", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--density", type=float, default=1.0, help="bid density (0, 1]")
    p.add_argument("--price-range", default="100:9999", metavar="LO:HI")
    p.add_argument("--fixed-range", default="500:5000", metavar="LO:HI")
    add_output(p)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="scaling benchmark over generated instances")
    p.add_argument("--vendors", default="10,12,14", metavar="N1,N2,...")
    p.add_argument("--items", default="100,200,400", metavar="M1,M2,...")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--prune", action="store_true")
    p.add_argument("--vendor-cap", type=int, default=24)
    add_output(p)
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8787)
    p.add_argument("--max-instances", type=int, default=64)
    p.add_argument("--time-budget", type=float, default=30.0)
    p.add_argument("--vendor-cap", type=int, default=24)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--ui", help="serve this directory of static UI files at /")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _SIZE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE_CAP
    except _INFEASIBLE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except MivsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
