"""Command-line surface.

Subcommands build spindle templates, run the randomized construction,
verify properties, restrict, and probe bad-event frequencies.  Documents
travel on stdin/stdout by default so commands compose in pipes.  Seeds
are always explicit arguments -- there is no environment fallback -- so
identical invocations are byte-identical.

Exit status: 0 success / property holds, 1 property violation (witnesses
printed), 2 usage or I/O error, 3 resampling budget exhausted.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys

from . import core, document, experiments, spindle, transform
from .core import BudgetExceededError, FacetSet, PropertyReport, Spg, Spindle
from .transform import (
    ResamplingExhaustedError,
    Strategy,
    TransformConfig,
    TransformResult,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_EXHAUSTED = 3

WITNESS_LIMIT = 20


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _spg_of(obj) -> Spg:
    if isinstance(obj, Spindle):
        return obj.spg
    if isinstance(obj, TransformResult):
        return obj.spg
    return obj


def _print_report(report: PropertyReport, table, all_witnesses: bool) -> None:
    if report.holds:
        print(f"{report.property.value}: holds")
        return
    print(f"{report.property.value}: VIOLATED ({len(report.witnesses)} witnesses)")
    shown = report.witnesses if all_witnesses else report.witnesses[:WITNESS_LIMIT]
    for w in shown:
        print(f"  - {core.witness_text(w, table)}")
    hidden = len(report.witnesses) - len(shown)
    if hidden > 0:
        print(f"  ... ({hidden} more; use --all-witnesses to print them)")


def _transform_config(args) -> TransformConfig:
    return TransformConfig(
        r=args.r,
        seed=args.seed,
        max_rounds=args.max_rounds,
        strategy=Strategy(args.strategy),
    )


def cmd_build_spindle(args) -> int:
    template = spindle.build_spindle_template(args.dim)
    if args.transform:
        if args.r is None or args.seed is None:
            raise ValueError("--transform requires --r and --seed")
        result = spindle.build_exponential_spindle(args.dim, _transform_config(args))
        print(f"rounds used: {result.rounds_used}", file=sys.stderr)
        sys.stdout.write(document.serialize(result))
    else:
        sys.stdout.write(document.serialize(template.spindle))
    return EXIT_OK


def cmd_transform(args) -> int:
    obj = document.parse(_read_input(args.input))
    if isinstance(obj, TransformResult):
        raise ValueError("input is already a transform result; expected a template")
    template = _spg_of(obj)
    result = transform.construct_with_resampling(template, _transform_config(args))
    if isinstance(obj, Spindle):
        lifted = (
            transform.lift_facet(obj.apex1, args.r),
            transform.lift_facet(obj.apex2, args.r),
        )
        result = dataclasses.replace(result, apices=lifted)
    print(f"rounds used: {result.rounds_used}", file=sys.stderr)
    sys.stdout.write(document.serialize(result))
    return EXIT_OK


_PROPERTY_CHECKS = {
    "adjacency": core.check_adjacency,
    "strong-adjacency": core.check_strong_adjacency,
    "endpoint-count": core.check_endpoint_count,
    "singleton": core.check_singleton,
    "dimension-reduction": core.check_dimension_reduction,
}


def cmd_verify(args) -> int:
    obj = document.parse(_read_input(args.input))
    spg = _spg_of(obj)
    table = spg.symbols

    reports = [core.validate(spg)]
    if reports[0].holds:
        if args.property == "all":
            selected = list(_PROPERTY_CHECKS)
        else:
            selected = [args.property]
        for name in selected:
            reports.append(_PROPERTY_CHECKS[name](spg))

    violated = False
    for report in reports:
        _print_report(report, table, args.all_witnesses)
        violated = violated or not report.holds
    return EXIT_VIOLATION if violated else EXIT_OK


def cmd_restrict(args) -> int:
    obj = document.parse(_read_input(args.input))
    spg = _spg_of(obj)
    labels = [part for part in args.facet.split(",") if part]
    face = FacetSet.from_labels(spg.symbols, labels)
    restricted = core.restrict(spg, face)
    if restricted is None:
        print("restriction: empty")
        return EXIT_OK
    sys.stdout.write(document.serialize(restricted))
    return EXIT_OK


def cmd_stats(args) -> int:
    obj = document.parse(_read_input(args.input))
    spg = _spg_of(obj)
    print(f"dimension: {spg.dimension}")
    print(f"symbols: {spg.symbols.n}")
    print(f"vertices: {len(spg.vertices)}")
    print(f"sets: {len(spg.family())}")
    print(f"edges: {len(spg.edges)}")
    print(f"max-degree: {core.max_degree(spg)}")
    try:
        print(f"diameter: {core.diameter(spg)}")
    except ValueError:
        print("diameter: unreachable (graph is disconnected)")

    apices = None
    if isinstance(obj, Spindle):
        apices = (obj.apex1, obj.apex2)
    elif isinstance(obj, TransformResult) and obj.apices is not None:
        apices = obj.apices
    if apices is not None:
        locate = {fs: vi for vi, vertex in enumerate(spg.vertices) for fs in vertex}
        length = core.graph_distance(spg, locate[apices[0]], locate[apices[1]])
        print(f"spindle-length: {length}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    obj = document.parse(_read_input(args.input))
    template = _spg_of(obj)
    r_values = [int(part) for part in args.r_list.split(",") if part]
    report = experiments.sweep_r(
        template, r_values, args.trials, args.seed,
        max_rounds=args.max_rounds, strategy=Strategy(args.strategy))

    if args.json:
        import json as _json
        payload = {
            "template": report.template,
            "rows": [
                {
                    "r": row.r,
                    "trials": row.trials,
                    "successes": row.successes,
                    "mean_rounds": row.mean_rounds,
                    "mean_round0_bad_events": row.mean_round0_bad_events,
                }
                for row in report.rows
            ],
        }
        sys.stdout.write(_json.dumps(payload, indent=2, sort_keys=True) + "\n")
        return EXIT_OK

    print(f"template: {report.template}")
    print("r\ttrials\tsuccesses\tmean-rounds\tmean-round0-bad-events")
    for row in report.rows:
        mean_rounds = "-" if row.mean_rounds is None else f"{row.mean_rounds:.6f}"
        print(f"{row.r}\t{row.trials}\t{row.successes}\t{mean_rounds}"
              f"\t{row.mean_round0_bad_events:.6f}")
    return EXIT_OK


def cmd_estimate_bad_event(args) -> int:
    d = args.dim
    if d < 1:
        raise ValueError("--dim must be at least 1")
    center = FacetSet(range(d))
    leaf1 = FacetSet(range(d, 2 * d))
    leaf2 = FacetSet(range(2 * d, 3 * d))
    estimate = transform.estimate_bad_event_probability(
        center, leaf1, leaf2, args.r, args.trials, args.seed)
    print(f"dim: {d}")
    print(f"r: {args.r}")
    print(f"trials: {estimate.trials}")
    print(f"occurrences: {estimate.occurrences}")
    print(f"frequency: {estimate.frequency:.6f}")
    print(f"analytic-bound: {estimate.analytic_bound:.6f}")
    return EXIT_OK


def _add_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--input", default=None,
        help="input document path (default: stdin)")


def _add_transform_options(parser: argparse.ArgumentParser,
                           required: bool) -> None:
    parser.add_argument("--r", type=int, required=required,
                        help="row multiplier (at least 2)")
    parser.add_argument("--seed", type=int, required=required,
                        help="random seed (explicit, for reproducibility)")
    parser.add_argument("--strategy", choices=["resample", "reject"],
                        default="resample")
    parser.add_argument("--max-rounds", type=int, default=1000)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spg",
        description="Subset partition graphs: construction and verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-spindle",
                       help="emit the all-subsets spindle template, or its "
                            "full randomized construction with --transform")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--raw", action="store_true",
                   help="emit the raw template (the default)")
    p.add_argument("--transform", action="store_true",
                   help="run the randomized construction on the template")
    _add_transform_options(p, required=False)
    p.set_defaults(func=cmd_build_spindle)

    p = sub.add_parser("transform",
                       help="run the randomized construction on a template")
    _add_input(p)
    _add_transform_options(p, required=True)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("verify", help="check properties, print witnesses")
    _add_input(p)
    p.add_argument("--property", default="all",
                   choices=[*_PROPERTY_CHECKS, "all"])
    p.add_argument("--all-witnesses", action="store_true",
                   help=f"print every witness, not just the first {WITNESS_LIMIT}")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("restrict", help="restrict the graph to a face")
    _add_input(p)
    p.add_argument("--facet", required=True,
                   help="comma-separated symbol labels, e.g. a,b")
    p.set_defaults(func=cmd_restrict)

    p = sub.add_parser("stats", help="print size, degree, diameter, length")
    _add_input(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("sweep",
                       help="success-rate sweep over row multipliers")
    _add_input(p)
    p.add_argument("--r-list", required=True, help="e.g. 4,8,16")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-rounds", type=int, default=1000)
    p.add_argument("--strategy", choices=["resample", "reject"],
                   default="resample")
    p.add_argument("--json", action="store_true",
                   help="machine-readable output")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("estimate-bad-event",
                       help="Monte-Carlo bad-event frequency on a "
                            "disjoint degree-2 star")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_estimate_bad_event)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        # argparse exits 2 on usage errors and 0 on --help; pass both through
        return int(err.code or 0)
    try:
        return args.func(args)
    except ResamplingExhaustedError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except BudgetExceededError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (document.DocumentError, ValueError, KeyError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
