"""Command line front end.

Exit status: 0 success, 1 invalid input or certification violations, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .betti import BettiDiagram, DiagramError, cancel_to_extreme, generic_betti_from_hilbert, hilbert_from_betti
from .betti import pairing_from_diagram
from .bounds import BOUND_NAMES, EquivalenceViolation, check_all, fmt_fraction, sharpness_classify
from .harness import CENSUS_FIELDS, CertifyConfig, certify, default_jobs
from .hilbert import (
    EmptyDefiningSet,
    HilbertFunction,
    InvalidHilbertFunction,
    enumerate_gorenstein_h,
    initial_degree,
    is_symmetric,
    multiplicity,
    third_difference,
    zanello_invariants,
)


def _load_input(args) -> tuple[HilbertFunction, BettiDiagram | None]:
    if args.diagram:
        with open(args.diagram) as f:
            d = BettiDiagram.from_json(f.read())
        return hilbert_from_betti(d), d
    return HilbertFunction.parse(args.hilbert), None


def _csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue()


def _tuple(xs) -> str:
    return "(" + ",".join(map(str, xs)) + ")"


def cmd_analyze(args) -> tuple[str, int]:
    h = HilbertFunction.parse(args.hilbert)
    deltas = third_difference(h)
    z = zanello_invariants(h)
    data = {
        "h": list(h.values),
        "socle_degree": h.socle_degree,
        "e": multiplicity(h),
        "third_difference": list(deltas),
        "initial_degree": initial_degree(h),
        "invariants": {"n1": z.n1, "n2": z.n2, "N1": z.N1, "N2": z.N2, "socle_shift": z.socle_shift},
        "symmetric": is_symmetric(h),
        "linear_forms": h.has_linear_forms,
    }
    diagram = generic_betti_from_hilbert(h) if is_symmetric(h) else generic_betti_from_hilbert(h, "level")
    data["diagram"] = json.loads(diagram.to_json())
    if args.format == "json":
        return json.dumps(data, sort_keys=True) + "\n", 0
    if args.format == "csv":
        header = ["h", "c", "e", "third_difference", "n1", "n2", "N1", "N2"]
        row = [str(h), h.socle_degree, data["e"], ",".join(map(str, deltas)), *z.as_tuple()]
        return _csv([header, row]), 0
    lines = [
        f"h = {_tuple(h.values)}   c = {h.socle_degree}   e = {data['e']}",
        f"D3 = {_tuple(deltas)}",
        f"(n1,n2,N1,N2) = {_tuple(z.as_tuple())}   c+3 = {z.socle_shift}",
        f"symmetric: {data['symmetric']}",
    ]
    if h.has_linear_forms:
        lines.append("warning: h_1 < 3, the ideal contains linear forms")
    lines += ["", ("generic Gorenstein" if data["symmetric"] else "level") + " diagram (rows are degrees t of R(-t)):"]
    lines.append(diagram.render())
    return "\n".join(lines) + "\n", 0


def cmd_bounds(args) -> tuple[str, int]:
    h, d = _load_input(args)
    report = check_all(h, d)
    if args.format == "json":
        return report.to_json() + "\n", 0
    if args.format == "csv":
        return report.to_csv(header=True), 0
    lines = [f"h = {_tuple(h.values)}   e = {report.e}   m = {_tuple(report.m)}   M = {_tuple(report.M)}"]
    if not report.gorenstein:
        lines.append("note: diagram is not Gorenstein; values are reported, not asserted")
    for name in BOUND_NAMES:
        lines.append(f"  {name:<15} {fmt_fraction(report.bounds[name]):>8}   {report.flag(name)}")
    if report.gorenstein and d is None:
        try:
            verdict = sharpness_classify(h)
            lines.append(f"refined sharpness conditions: {verdict.conditions}")
        except EquivalenceViolation as exc:
            lines.append(f"EQUIVALENCE VIOLATION: {exc}")
            return "\n".join(lines) + "\n", 1
    return "\n".join(lines) + "\n", 0


def cmd_cancel(args) -> tuple[str, int]:
    h, d = _load_input(args)
    if d is None:
        d = generic_betti_from_hilbert(h)
    gp = pairing_from_diagram(d)
    sides = ["min", "max"] if args.side == "both" else [args.side]
    traces = [cancel_to_extreme(gp, side) for side in sides]
    if args.format == "json":
        return json.dumps({"h": str(h), "traces": [t.as_dict() for t in traces]}, sort_keys=True) + "\n", 0
    if args.format == "csv":
        rows = [["h", "side", "steps", "terminal", "central_degree", "extreme"]]
        for t in traces:
            steps = ";".join(f"{a}+{b}" for a, b in t.steps)
            rows.append([str(h), t.side.value, steps, t.terminal.value, t.central_degree or "", t.extreme])
        return _csv(rows), 0
    lines = [f"h = {_tuple(h.values)}   s = {gp.s}   Q = {_tuple(gp.Q)}   P = {_tuple(gp.P)}"]
    for t in traces:
        name = "n2" if t.side.value == "min" else "N1"
        lines.append(f"{t.side.value}-side:")
        for a, b in t.steps:
            lines.append(f"  cancel generators and syzygies in degrees {a}, {b}")
        if t.terminal.value == "case1":
            lines.append(f"  case 1: no partner, {name} = {t.extreme}")
        else:
            lines.append(f"  case 2: only the central pair at degree {t.central_degree} is left")
            lines.append(f"  numerical cancellation of it gives {name} = {t.extreme}")
    return "\n".join(lines) + "\n", 0


def cmd_enumerate(args) -> tuple[str, int]:
    hs = list(enumerate_gorenstein_h(args.max_socle, args.max_entry, not args.no_si_filter))
    if args.format == "json":
        return json.dumps([list(h.values) for h in hs]) + "\n", 0
    if args.format == "csv":
        return _csv([["h"]] + [[str(h)] for h in hs]), 0
    label = "" if not args.no_si_filter else "  (candidate only, no SI filter)"
    return "".join(f"{h}{label}\n" for h in hs), 0


def cmd_certify(args) -> tuple[str, int]:
    config = CertifyConfig(
        max_socle_degree=args.max_socle,
        max_entry=args.max_entry,
        si_filter=not args.no_si_filter,
        jobs=args.jobs,
    )
    run = certify(config)
    run.write(args.out or ".")
    status = 0 if run.ok else 1
    if args.format == "json":
        return run.report_json(), status
    if args.format == "csv":
        return run.census_csv(), status
    lines = [f"{k:<28} {v}" for k, v in run.counts.items()]
    lines.append(f"{'complete':<28} {run.complete}")
    for v in run.violations:
        lines.append(f"VIOLATION {v['check']}: h = {v['h']}  {v['detail']}")
    return "\n".join(lines) + "\n", status


def cmd_census(args) -> tuple[str, int]:
    with open(args.run_file) as f:
        rows = json.load(f)["census"]
    if args.format == "json":
        return json.dumps(rows, sort_keys=True) + "\n", 0
    if args.format == "csv":
        return _csv([CENSUS_FIELDS] + [[r[k] for k in CENSUS_FIELDS] for r in rows]), 0
    width = max([len(r["h"]) for r in rows] + [1])
    lines = [f"{'h':<{width}}  {'e':>5}  lower tighter  upper tighter"]
    for r in rows:
        lines.append(f"{r['h']:<{width}}  {r['e']:>5}  {r['lower_tighter']:<13}  {r['upper_tighter']}")
    return "\n".join(lines) + "\n", 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--out", help="write output here (a directory for certify)")

    parser = argparse.ArgumentParser(prog="mcbounds", description="Multiplicity bounds for codimension-3 Gorenstein algebras.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="third difference and refined degrees of h")
    p.add_argument("hilbert", help="comma separated Hilbert function, e.g. 1,3,6,6,3,1")
    p.set_defaults(func=cmd_analyze)

    for name, func, helptext in (
        ("bounds", cmd_bounds, "all six multiplicity bounds"),
        ("cancel", cmd_cancel, "formal cancellation trace"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("hilbert", nargs="?", help="comma separated Hilbert function")
        src.add_argument("--diagram", help="Betti diagram JSON file")
        if name == "cancel":
            p.add_argument("--side", choices=["min", "max", "both"], default="both")
        p.set_defaults(func=func)

    p = sub.add_parser("enumerate", parents=[common], help="list Gorenstein Hilbert functions")
    p.add_argument("--max-socle", type=int, required=True)
    p.add_argument("--max-entry", type=int)
    p.add_argument("--no-si-filter", action="store_true", help="all symmetric O-sequences (candidates only)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("certify", parents=[common], help="exhaustive check, writes report.json and census.csv")
    p.add_argument("--max-socle", type=int, default=12)
    p.add_argument("--max-entry", type=int)
    p.add_argument("--no-si-filter", action="store_true")
    p.add_argument("--jobs", type=int, default=default_jobs(), help="worker processes (env MCBOUNDS_JOBS)")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("census", parents=[common], help="tightness table from a report.json")
    p.add_argument("run_file")
    p.set_defaults(func=cmd_census)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, status = args.func(args)
    except (InvalidHilbertFunction, DiagramError, EmptyDefiningSet, OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.out and args.command != "certify":
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
