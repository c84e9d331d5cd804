"""Command-line front end: analyze, convert, generate, enumerate, verify.

Data goes to stdout, diagnostics to stderr. Exit codes: 0 success,
1 verification violation, 2 file parse error, 3 size cap exceeded,
4 bad family parameters.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .caps import canonical_cap, enum_cap
from .enumeration import EnumerationTask, enumerate_graphs
from .errors import (
    BadParameters, GraphParseError, OrderTooLarge, OrderTooSmall, UnknownTag,
)
from .families import FAMILY_TAGS, FamilySpec, generate_family
from .files import parse_graph_file, serialize_graph
from .graphs import Multigraph, SignedGraph, associated_multigraph, signed_from_multigraph
from .report import (
    analysis_document, record_document, render_analysis_text, render_json,
    render_json_line, render_record_text,
)
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_PARAMS = 4


def _read_graph(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)
    try:
        return parse_graph_file(text)
    except GraphParseError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def _cmd_analyze(args) -> int:
    g = _read_graph(args.path)
    try:
        doc = analysis_document(
            g,
            classify=args.classify,
            float_check=args.float,
            tol=args.tol,
            canon_order=args.max_canonical_order,
        )
    except OrderTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    if args.format == "structured":
        sys.stdout.write(render_json(doc))
    else:
        sys.stdout.write(render_analysis_text(doc))
    return EXIT_OK


def _cmd_convert(args) -> int:
    g = _read_graph(args.path)
    if isinstance(g, SignedGraph):
        out = associated_multigraph(g)
    else:
        out = signed_from_multigraph(g)
    sys.stdout.write(serialize_graph(out))
    return EXIT_OK


def _cmd_generate(args) -> int:
    spec = FamilySpec(tag=args.family, t=args.t, b=args.b)
    try:
        g = generate_family(spec)
    except (BadParameters, UnknownTag) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    text = serialize_graph(g)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    task = EnumerationTask(
        order=args.order,
        bgraph_kind=args.bgraph,
        filter="two-main-only" if args.two_main_only else "all",
        classify=args.classify,
    )
    try:
        records = enumerate_graphs(
            task,
            jobs=args.jobs,
            max_order=args.max_enum_order,
            canon_order=args.max_canonical_order,
        )
    except (OrderTooLarge, OrderTooSmall) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    for rec in records:
        doc = record_document(rec)
        if args.format == "structured":
            sys.stdout.write(render_json_line(doc))
        else:
            sys.stdout.write(render_record_text(doc))
    print(f"total classes: {len(records)}", file=sys.stderr)
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = run_suite(args.suite, max_order=args.max_order, jobs=args.jobs)
    sys.stdout.write(report.render())
    return EXIT_OK if report.ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twomain",
        description="Exact main-eigenvalue analysis of signed graphs and (0,1,2)-multigraphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze a graph file")
    p.add_argument("path")
    p.add_argument("--classify", action="store_true",
                   help="classify against the known families (two-main, unicyclic B-graph)")
    p.add_argument("--float", action="store_true",
                   help="add the floating-point eigenprojection cross-check")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--max-canonical-order", type=int, default=None,
                   help=f"canonicalization cap (default {canonical_cap()}, env TWOMAIN_MAX_CANON)")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("convert", help="recode signed <-> multigraph")
    p.add_argument("path")
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("generate", help="generate a family member")
    p.add_argument("--family", required=True, choices=FAMILY_TAGS)
    p.add_argument("--t", required=True, type=int)
    p.add_argument("--b", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("enumerate", help="exhaustive sweep over B-graph weightings")
    p.add_argument("--order", required=True, type=int)
    p.add_argument("--bgraph", required=True,
                   choices=("cycle", "unicyclic", "tree", "any-connected"))
    p.add_argument("--two-main-only", action="store_true")
    p.add_argument("--classify", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--max-enum-order", type=int, default=None,
                   help=f"enumeration cap (default per kind, e.g. cycle {enum_cap('cycle')}; env TWOMAIN_MAX_ENUM)")
    p.add_argument("--max-canonical-order", type=int, default=None)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="run the re-verification suites")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
