"""Command-line interface.

Exit status: 0 success, 1 verification failure, 2 usage or parse error,
3 component over the size cap.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from itertools import islice
from pathlib import Path

from . import __version__
from .constructions import appendix_catalog, build_symmetric_family, build_Td
from .enumeration import count_fillings, enumerate_fillings, verify_wpc_range
from .errors import ComponentTooLarge, InvariantViolation, LatinTabError
from .io_formats import (
    Report,
    describe_report,
    graph_to_dict,
    parse_tableau,
    render_dot,
    render_dot_many,
    render_tableau,
)
from .isotopy_graph import DEFAULT_CAP, clique_number, component, find_triangles, full_graph
from .partition_core import parse_shape
from .verification import CHECKS, DEFAULT_GRAPH_LIMIT, OPTIONAL_CHECKS, verify_theorems

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8", newline="\n")


def _source(args):
    """Either the tableau in ``--file`` or every component of the given shape."""
    if args.file:
        T = parse_tableau(Path(args.file).read_text(encoding="utf-8"))
        return [component(T, cap=args.cap)]
    if not args.shape:
        raise argparse.ArgumentTypeError("give a shape or --file")
    return full_graph(parse_shape(args.shape), cap=args.cap)


def cmd_enumerate(args):
    shape = parse_shape(args.shape)
    if args.count_only:
        print(count_fillings(shape))
        return EXIT_OK
    it = enumerate_fillings(shape)
    if args.limit is not None:
        it = islice(it, args.limit)
    print("\n".join(render_tableau(T) for T in it), end="")
    return EXIT_OK


def cmd_analyze(args):
    graphs = _source(args)
    reports = [Report.of(G.basepoint, G) for G in graphs]
    if len(reports) > 1:
        print(f"{len(reports)} components")
    for i, r in enumerate(reports, start=1):
        if len(reports) > 1:
            print(f"\n# component {i}")
        print(describe_report(r), end="")
    if args.json:
        data = [r.to_dict() for r in reports]
        _write(args.json, json.dumps(data if len(data) > 1 else data[0], indent=2) + "\n")
    return EXIT_OK


def cmd_graph(args):
    graphs = _source(args)
    if not args.dot and not args.json:
        args.dot = "-"
    if args.dot:
        _write(args.dot, render_dot(graphs[0]) if len(graphs) == 1 else render_dot_many(graphs))
    if args.json:
        data = [graph_to_dict(G) for G in graphs]
        _write(args.json, json.dumps(data if len(data) > 1 else data[0], indent=1) + "\n")
    return EXIT_OK


def cmd_construct(args):
    if args.family == "td":
        T = build_Td(args.n)
    else:
        T = build_symmetric_family(args.n)
    print(render_tableau(T), end="")
    return EXIT_OK


def cmd_catalog(args):
    failed = 0
    for e in appendix_catalog():
        line = f"{e.name:24} {str(e.tableau):36} rows {e.key_rows} cols {e.key_cols}"
        if args.check:
            G = component(e.tableau, cap=args.cap)
            got = {"has_triangle": bool(find_triangles(G)), "clique_number": clique_number(G)}
            ok = got == e.expected
            failed += not ok
            line += f"  size {len(G):5}  {'ok' if ok else 'MISMATCH ' + str(got)}"
        print(line)
    if args.check:
        print(f"{len(appendix_catalog()) - failed} of {len(appendix_catalog())} entries match")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_verify_wpc(args):
    records = verify_wpc_range(args.max_n, count=args.count, jobs=args.jobs)
    print(f"{'shape':24} wide  fillable count    consistent")
    for r in records:
        cnt = "-" if r.filling_count is None else str(r.filling_count)
        print(f"{str(r.shape):24} {str(r.wide):5} {str(r.fillable):8} {cnt:8} {r.consistent}")
    bad = [r for r in records if not r.consistent]
    print(f"{len(records)} partitions with at most {args.max_n} boxes, {len(bad)} inconsistent")
    return EXIT_FAIL if bad else EXIT_OK


def cmd_verify_theorems(args):
    checks = args.checks.split(",") if args.checks else list(CHECKS)
    want = parse_shape(args.shape) if args.shape else None
    t0 = time.monotonic()
    summary = verify_theorems(
        args.max_n,
        checks=checks,
        shapes=None if want is None else (lambda s: s == want),
        cap=args.cap,
        graph_limit=args.graph_limit,
        jobs=args.jobs,
        min_boxes=args.min_n,
    )
    print(summary.description)
    print(f"checks run: {summary.checks_run}")
    for shape, reason in summary.skipped:
        print(f"SKIPPED {shape}: {reason}")
    for f in summary.failures[: args.max_failures]:
        print(f"FAIL {f.check} shape {f.shape} tableau {f.tableau}: {f.detail}")
    if len(summary.failures) > args.max_failures:
        print(f"... {len(summary.failures) - args.max_failures} more failures")
    by_check = {}
    for f in summary.failures:
        by_check.setdefault(f.check, set()).add(f.shape)
    for check, shapes in by_check.items():
        print(f"{check}: failing shapes {', '.join(sorted(shapes))}")
    print(f"failures: {len(summary.failures)}  skipped: {len(summary.skipped)}  time: {time.monotonic() - t0:.1f}s")
    return EXIT_OK if summary.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="latintab", description="Latin tableaux and their isotopy graphs.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list every filling of a shape")
    p.add_argument("shape", help="comma-separated parts, e.g. 3,2")
    p.add_argument("--limit", type=int, help="stop after this many fillings")
    p.add_argument("--count-only", action="store_true", help="print only the number of fillings")
    p.set_defaults(func=cmd_enumerate)

    def source_args(p):
        p.add_argument("shape", nargs="?", help="analyze one representative per component of this shape")
        p.add_argument("--file", help="tableau text file; analyze its component only")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum component size")

    p = sub.add_parser("analyze", help="invariants of isotopy components")
    source_args(p)
    p.add_argument("--json", metavar="PATH", help="also write the reports as JSON ('-' for stdout)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("graph", help="export isotopy components as DOT or JSON")
    source_args(p)
    p.add_argument("--dot", metavar="PATH", help="write DOT ('-' for stdout, the default)")
    p.add_argument("--json", metavar="PATH", help="write JSON ('-' for stdout)")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("construct", help="build a named tableau")
    p.add_argument("family", choices=["td", "symfam"], help="td: cube family; symfam: symmetric block family")
    p.add_argument("n", type=int, help="dimension d for td, k for symfam")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("catalog", help="list the triangle catalog")
    p.add_argument("which", choices=["appendix"])
    p.add_argument("--check", action="store_true", help="verify each entry's expected invariants")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify-wpc", help="compare wideness with fillability")
    p.add_argument("--max-n", type=int, required=True, help="largest number of boxes")
    p.add_argument("--count", action="store_true", help="also count all fillings (slow)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify_wpc)

    p = sub.add_parser("verify-theorems", help="exhaustively check the isotopy graph statements")
    p.add_argument("--max-n", type=int, required=True, help="largest number of boxes")
    p.add_argument("--min-n", type=int, default=1, help="smallest number of boxes")
    p.add_argument("--shape", help="restrict to a single shape")
    p.add_argument(
        "--checks",
        help=f"comma-separated subset of {','.join(CHECKS + OPTIONAL_CHECKS)} (default: all but {','.join(OPTIONAL_CHECKS)})",
    )
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="shapes with larger components are skipped")
    p.add_argument("--graph-limit", type=int, default=DEFAULT_GRAPH_LIMIT, help="largest component for triangle and clique checks")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-failures", type=int, default=20, help="how many failures to print in full")
    p.set_defaults(func=cmd_verify_theorems)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except ComponentTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InvariantViolation as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (LatinTabError, ValueError, argparse.ArgumentTypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
