"""Command line front end.

Four subcommands: analyze (classification report), spectrum (exact, numeric
or closed-form eigenvalues), generate (construction expressions to edge list
or graph6), verify-theorems (exhaustive checks over all small graphs).

Exit codes: 0 success, 1 a theorem check found a violation, 2 bad input.
Reports go to stdout and are deterministic; progress and timing go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .dsl import DslError, parse_dsl
from .formats import ParseError, load_document, serialize
from .graphs import Graph, mask_of
from .p4 import ClassificationReport, classify, recognize_spider
from .spectral import exact_spectrum, numeric_spectrum, thin_spider_closed_form
from .theorems import MAX_N, THEOREMS, verify_theorems


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _load_graph(path: str, fmt: str) -> Graph:
    return load_document(_read_text(path), fmt).graph


def _emit(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _render_report(report: ClassificationReport, numeric: list | None) -> str:
    if report.spider is None:
        spider = "none"
    else:
        s = report.spider
        spider = (f"{s.kind} k={s.k} legs={list(s.legs)} "
                  f"body={list(s.body)} head={list(s.head)}")
    roots = ", ".join(f"{v}:{m}" for v, m in report.spectrum.integer_roots)
    spectrum = "{" + roots + "}"
    if report.spectrum.residual.degree > 0:
        spectrum += f" residual {report.spectrum.residual}"
    lines = [
        f"n: {report.n}",
        f"m: {report.m}",
        f"p4_count: {report.p4_count}",
        f"is_cograph: {_flag(report.is_cograph)}",
        f"is_p4_sparse: {_flag(report.is_p4_sparse)}",
        f"is_p4_extendible: {_flag(report.is_p4_extendible)}",
        f"is_p4_reducible: {_flag(report.is_p4_reducible)}",
        f"is_p4_connected: {_flag(report.is_p4_connected)}",
        f"spider: {spider}",
        f"l_integral: {_flag(report.l_integral)}",
        f"spectrum: {spectrum}",
    ]
    if numeric is not None:
        lines.append("numeric_spectrum: " + ", ".join(repr(x) for x in numeric))
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    g = _load_graph(args.input, args.format)
    report = classify(g)
    numeric = numeric_spectrum(g) if args.numeric else None
    if args.json:
        doc = report.to_dict()
        if numeric is not None:
            doc["numeric_spectrum"] = numeric
        _emit(doc)
    else:
        print(_render_report(report, numeric))
    return 0


def cmd_spectrum(args) -> int:
    g = _load_graph(args.input, args.format)
    if args.mode == "exact":
        spec = exact_spectrum(g)
        _emit({
            "integer_roots": [[v, m] for v, m in spec.integer_roots],
            "residual": list(spec.residual.coeffs),
            "is_integral": spec.is_integral,
        })
    elif args.mode == "numeric":
        _emit({"eigenvalues": numeric_spectrum(g, args.tol)})
    else:
        spider = recognize_spider(g)
        if spider is None or spider.kind != "thin" or any(
                g.adj[v] & mask_of(spider.head) for v in spider.head):
            raise ValueError("not a thin spider with edgeless head")
        cf = thin_spider_closed_form(spider.k, len(spider.head))
        _emit({
            "entries": [[str(v), m] for v, m in cf.entries],
            "values": cf.values(),
        })
    return 0


def cmd_generate(args) -> int:
    g = parse_dsl(args.expression)
    text = serialize(g, args.format)
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return 0


def cmd_verify(args) -> int:
    theorems = None
    if args.theorems:
        theorems = "".join(part.strip() for part in args.theorems.split(","))
    t0 = time.perf_counter()
    results = verify_theorems(
        args.n_max,
        theorems,
        shards=args.shards,
        shard_id=args.shard_id,
        sample=args.sample,
        workers=args.workers,
        seed=args.seed,
        progress=lambda msg: print(msg, file=sys.stderr),
    )
    total = time.perf_counter() - t0
    _emit({
        "n_max": args.n_max,
        "shards": args.shards,
        "shard_id": args.shard_id,
        "seed": args.seed,
        "results": [r.to_dict() for r in results],
    })
    for r in results:
        print(f"theorem {r.theorem}: {r.wall_time_s:.3f}s", file=sys.stderr)
    print(f"total: {total:.3f}s", file=sys.stderr)
    return 1 if any(r.violations for r in results) else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="p4spec",
        description="Exact Laplacian spectra and P4 structure of small graphs.",
    )
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify a graph and report its spectrum")
    p.add_argument("input", help="edge-list or graph6 file, - for stdin")
    p.add_argument("--format", choices=("auto", "edges", "g6"), default="auto")
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.add_argument("--numeric", action="store_true",
                   help="append floating-point eigenvalues")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("spectrum", help="Laplacian spectrum of a graph")
    p.add_argument("input", help="edge-list or graph6 file, - for stdin")
    p.add_argument("--format", choices=("auto", "edges", "g6"), default="auto")
    p.add_argument("--mode", choices=("exact", "numeric", "closed-form"),
                   default="exact")
    p.add_argument("--tol", type=float, default=1e-9,
                   help="tolerance for numeric mode")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("generate", help="build a graph from an expression")
    p.add_argument("expression",
                   help="e.g. 'cycle(6)', 'spider(thin,k=4,head=K3)', "
                        "'join(P4,E2)'")
    p.add_argument("--format", choices=("edges", "g6"), default="edges")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify-theorems",
                       help="check the structural theorems over all small graphs")
    p.add_argument("--n-max", type=int, required=True,
                   help=f"largest vertex count, 1..{MAX_N}")
    p.add_argument("--theorems",
                   help="comma separated ids from "
                        + ",".join(sorted(THEOREMS)) + " (default all)")
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--shard-id", type=int, default=0)
    p.add_argument("--sample", type=int,
                   help="sample populations larger than this instead of "
                        "enumerating")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, DslError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
