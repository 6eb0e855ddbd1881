"""Command line front end.

Subcommands: analyze, components, enumerate, draw, verify.  Results go to
standard output as a single document (JSON, JSON Lines for enumerate, or a
diagram rendering); diagnostics go to standard error.  Exit codes: 0 for
success, 1 for usage or operational errors, 2 when verify finds a
disagreement between methods.

Output is byte-deterministic for fixed arguments; wall-clock timings are
only included on request (--timings) or in the text format.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .closedform import closed_form
from .errors import UsageError, ZeroProdError
from .kostant import (
    DimensionVector,
    enumerate_partitions,
    lies_in_sigma,
    orbit_codimension,
)
from .lace import (
    diagram_from_rising,
    diagram_increasing_case,
    open_orbit_diagram,
    render,
)
from .qip import RisingVector, solve_sorted
from .verify import (
    DEFAULT_CAP,
    METHODS,
    ComponentReport,
    CrossCheckReport,
    components,
    cross_check,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); keep 2 for disagreement
        raise UsageError(message)


def _parse_dims(text: str) -> DimensionVector:
    try:
        return DimensionVector(int(p) for p in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad dimension vector {text!r}: {exc}") from exc


def _build_parser() -> _Parser:
    parser = _Parser(prog="zeroprod", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_dims(p):
        p.add_argument("-d", "--dims", required=True, metavar="D0,D1,...",
                       help="dimension vector, comma separated")

    p = sub.add_parser("analyze", help="codimension and count of the top components")
    add_dims(p)
    p.add_argument("--method", choices=("closedform", "qip", "qseries"),
                   default="closedform")
    p.add_argument("--truncation", type=int, default=None,
                   help="series window for --method qseries")
    p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("components", help="full description of every top component")
    add_dims(p)
    p.add_argument("-k", type=int, default=None,
                   help="placeholder position (must carry the minimal dimension)")
    p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("enumerate", help="stream all partitions with codimensions")
    add_dims(p)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)

    p = sub.add_parser("draw", help="render a lace diagram")
    add_dims(p)
    p.add_argument("-e", "--vector", default=None,
                   help="rising vector like 0,1,*,0,4,0 or a composition like "
                        "4,1,0,0,0 for weakly increasing dims; omit for the "
                        "fully linked bottom-aligned diagram")
    p.add_argument("--format", choices=("ascii", "svg", "tikz"), default="ascii")
    p.add_argument("--cell-width", type=int, default=3)

    p = sub.add_parser("verify", help="cross-check methods against each other")
    add_dims(p)
    p.add_argument("--methods", default=",".join(METHODS),
                   help=f"comma-separated subset of {','.join(METHODS)}")
    p.add_argument("--truncation", type=int, default=None)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--timings", action="store_true",
                   help="include wall-clock seconds in JSON output")
    p.add_argument("--format", choices=("json", "text"), default="json")
    return parser


def _emit(doc: str) -> None:
    sys.stdout.write(doc)


def _json(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _component_doc(report: ComponentReport) -> dict:
    return {
        "d": list(report.d),
        "k": report.k,
        "C": report.C,
        "theta": report.theta,
        "method": "rising",
        "components": [
            {
                "rising_vector": rec.rising_vector.to_json(),
                "kostant_partition": rec.partition.to_json(),
                "rank_pattern": rec.ranks.to_json(),
                "equations": [
                    {"k": eq.k, "l": eq.l, "bound": eq.bound} for eq in rec.equations
                ],
                "matrices": [m.to_json() for m in rec.representative],
            }
            for rec in report.records
        ],
    }


def _verify_doc(report: CrossCheckReport, timings: bool) -> dict:
    doc = {
        "d": list(report.d),
        "methods": [
            {
                "method": r.method,
                "C": r.C,
                "theta": r.theta,
                **({"seconds": round(r.seconds, 6)} if timings else {}),
            }
            for r in report.results
        ],
        "agree": report.agree,
        "partitions_match": report.partitions_match,
    }
    if report.ok:
        doc["C"] = report.results[0].C
        doc["theta"] = report.results[0].theta
    return doc


def _cmd_analyze(args) -> int:
    dims = _parse_dims(args.dims)
    if args.method == "closedform":
        res = closed_form(dims)
        doc = {
            "d": list(dims),
            "method": "closedform",
            "C": res.C,
            "theta": res.theta,
            "threshold": res.threshold,
            "head_sum": res.head_sum,
        }
    elif args.method == "qip":
        s = solve_sorted(dims)
        doc = {
            "d": list(dims),
            "method": "qip",
            "C": s.minimum,
            "theta": s.theta,
            "solutions": [list(e) for e in s.solutions],
        }
    else:
        from .verify import series_count

        c, theta = series_count(dims, args.truncation)
        doc = {"d": list(dims), "method": "qseries", "C": c, "theta": theta}
    if args.format == "text":
        _emit(f"d = {tuple(dims)}: C = {doc['C']}, theta = {doc['theta']} "
              f"({args.method})\n")
    else:
        _emit(_json(doc))
    return 0


def _cmd_components(args) -> int:
    dims = _parse_dims(args.dims)
    report = components(dims, args.k)
    if args.format == "text":
        lines = [f"d = {tuple(dims)}: C = {report.C}, theta = {report.theta}, "
                 f"placeholder at {report.k}"]
        for rec in report.records:
            eqs = ", ".join(
                f"rk(factors {eq.k + 1}..{eq.l}) <= {eq.bound}" for eq in rec.equations
            )
            lines.append(f"  {rec.rising_vector}  partition "
                         f"{rec.partition.as_dict()}  equations: {eqs or 'none'}")
        _emit("\n".join(lines) + "\n")
    else:
        _emit(_json(_component_doc(report)))
    return 0


def _cmd_enumerate(args) -> int:
    dims = _parse_dims(args.dims)
    out = sys.stdout
    emitted = 0
    for part in enumerate_partitions(dims):
        if emitted >= args.cap:
            raise ZeroProdError(f"enumeration exceeded cap of {args.cap} partitions")
        line = {
            "kostant_partition": part.to_json(),
            "codimension": orbit_codimension(part),
            "product_zero": lies_in_sigma(part),
        }
        out.write(json.dumps(line) + "\n")
        emitted += 1
    return 0


def _cmd_draw(args) -> int:
    dims = _parse_dims(args.dims)
    if args.vector is None:
        diagram = open_orbit_diagram(dims)
    elif "*" in args.vector:
        diagram = diagram_from_rising(dims, RisingVector.parse(args.vector))
    else:
        try:
            entries = [int(p) for p in args.vector.split(",")]
        except ValueError as exc:
            raise UsageError(f"bad vector {args.vector!r}") from exc
        diagram = diagram_increasing_case(dims, entries)
    _emit(render(diagram, args.format, cell_width=args.cell_width, standalone=True))
    return 0


def _cmd_verify(args) -> int:
    dims = _parse_dims(args.dims)
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    try:
        report = cross_check(dims, methods, truncation=args.truncation, cap=args.cap)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "text":
        lines = [f"d = {tuple(dims)}"]
        for r in report.results:
            lines.append(f"  {r.method:<10} C = {r.C}  theta = {r.theta}  "
                         f"({r.seconds:.3f} s)")
        lines.append(f"  agreement: {report.agree}")
        if report.partitions_match is not None:
            lines.append(f"  partition sets match: {report.partitions_match}")
        _emit("\n".join(lines) + "\n")
    else:
        _emit(_json(_verify_doc(report, args.timings)))
    return 0 if report.ok else 2


_COMMANDS = {
    "analyze": _cmd_analyze,
    "components": _cmd_components,
    "enumerate": _cmd_enumerate,
    "draw": _cmd_draw,
    "verify": _cmd_verify,
}


def run(argv: Sequence[str]) -> int:
    """Parse arguments and dispatch; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"zeroprod: {exc}", file=sys.stderr)
        return 1
    except ZeroProdError as exc:
        print(f"zeroprod: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))
