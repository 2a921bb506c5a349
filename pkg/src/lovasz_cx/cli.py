"""Command line interface.

Exit codes: 0 success / verified, 1 condition violated, 2 error,
3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .errors import BudgetExceeded, LovaszError
from .families import build, parse_spec
from .graph import Graph, metrics
from .graph6 import decode_graph6, encode_graph6, read_graph6_file
from .harness import load_config, run_search, table_report
from .hypergraph import line_hypergraph, ryser_report
from .oracle import format_vertex, oracle_independent_set, parse_gp_edge
from .solvers.coloring import edge_colorable
from .solvers.mis import max_independent_set
from .verifier import lovasz_condition, weak_lovasz

EXIT_OK, EXIT_VIOLATED, EXIT_ERROR, EXIT_BUDGET = 0, 1, 2, 3

log = logging.getLogger("lovasz_cx")


def load_graph(text: str) -> Graph:
    """A family spec, a path to a graph6 file, or a bare graph6 string."""
    p = Path(text)
    if p.suffix in (".g6", ".graph6") or (p.exists() and p.is_file()):
        return read_graph6_file(p)[0]
    if ":" in text:
        return build(parse_spec(text))
    return decode_graph6(text)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def cmd_construct(args) -> int:
    g6 = encode_graph6(load_graph(args.spec))
    if args.out:
        Path(args.out).write_text(g6 + "\n")
    else:
        print(g6)
    return EXIT_OK


def cmd_props(args) -> int:
    g = load_graph(args.graph)
    d = metrics(g).as_dict()
    d.update(order=g.order, size=g.size, regular_degree=g.regular_degree(), alpha=max_independent_set(g).alpha)
    r = g.regular_degree()
    if r:
        d["edge_colorable"] = edge_colorable(g, r) is not None
    _emit(d)
    return EXIT_OK


def _parse_mode(text: str) -> tuple[str, dict]:
    kind, _, arg = text.partition(":")
    if kind == "full":
        return "full", {}
    if kind == "sample":
        return "sample", {"samples": int(arg) if arg else 2000}
    if kind == "resume":
        if not arg:
            raise LovaszError("resume mode needs a progress file: resume:FILE")
        return "resume", {"progress": arg}
    raise LovaszError(f"unknown mode {text!r}")


def cmd_verify(args) -> int:
    g = load_graph(args.graph)
    mode, extra = _parse_mode(args.mode)
    if args.progress and "progress" not in extra:
        extra["progress"] = args.progress

    def progress(done, total):
        log.info("%d / %d subsets checked", done, total)

    cert = lovasz_condition(
        g, args.r, spec=args.graph, mode=mode, seed=args.seed, workers=args.workers,
        on_progress=progress, **extra,
    )
    if args.out:
        cert.write(args.out)
    print(cert.to_json())
    return EXIT_OK if cert.condition_holds and cert.edge_colorable else EXIT_VIOLATED


def cmd_weak(args) -> int:
    g = load_graph(args.graph)
    ks = [int(k) for k in args.k.split(",")] if args.k else None
    try:
        res = weak_lovasz(g, args.r, ks=ks, budget=args.budget)
    except BudgetExceeded as exc:
        print(json.dumps({"error": str(exc), "k_checked": list(exc.completed)}))
        return EXIT_BUDGET
    _emit(res.__dict__)
    return EXIT_OK if res.holds else EXIT_VIOLATED


def cmd_ryser(args) -> int:
    g = load_graph(args.graph)
    rep = ryser_report(line_hypergraph(g), args.r)
    _emit(rep.as_dict())
    return EXIT_OK


def cmd_oracle(args) -> int:
    n = 5 * args.k + 11
    parts = args.edges.split(",")
    if len(parts) != 2:
        raise LovaszError("--edges takes two edges, e.g. a1a2,b3b5")
    e1, e2 = (parse_gp_edge(p, n) for p in parts)
    trace = oracle_independent_set(args.k, e1, e2)
    print(f"gp({n},2), deleted edges {'-'.join(map(format_vertex, e1))}, {'-'.join(map(format_vertex, e2))}")
    for t in trace.levels():
        print(f"  k={t.k:<3} n={t.n:<4} |I|={len(t.I):<4} i0={t.i0} i1={t.i1} shift={t.shift}")
    print("I =", " ".join(format_vertex(v) for v in trace.I))
    print("verified: independent, size 4k+8, avoids all four endpoints")
    return EXIT_OK


def cmd_search(args) -> int:
    cfg = load_config(args.config, workers=args.workers, output=args.out, resume=True if args.resume else None)
    summary = run_search(cfg)
    _emit(summary.__dict__)
    return EXIT_OK


def cmd_report(args) -> int:
    rep = table_report(directory=args.corpus, verify=args.verify, samples=args.samples, ham_budget=args.ham_budget)
    if args.json:
        _emit(rep.as_dict())
    else:
        print(rep.render())
    return EXIT_OK if all(r.ok for r in rep.rows if r.available) else EXIT_VIOLATED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lovasz-cx", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("construct", help="emit graph6 for a family spec")
    s.add_argument("spec")
    s.add_argument("--out")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("props", help="metrics of a graph")
    s.add_argument("graph")
    s.set_defaults(func=cmd_props)

    s = sub.add_parser("verify", help="independence-condition certificate")
    s.add_argument("graph")
    s.add_argument("--r", type=int, required=True, choices=(3, 4))
    s.add_argument("--mode", default="full", help="full | sample:N | resume:FILE")
    s.add_argument("--progress", help="progress file for full mode")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("weak", help="weakened-conjecture check")
    s.add_argument("graph")
    s.add_argument("--r", type=int, required=True, choices=(3, 4))
    s.add_argument("--k", help="comma-separated k values (default 1..r-1)")
    s.add_argument("--budget", type=int, default=5_000_000)
    s.set_defaults(func=cmd_weak)

    s = sub.add_parser("ryser", help="matching / cover numbers of the line hypergraph")
    s.add_argument("graph")
    s.add_argument("--r", type=int, required=True, choices=(3, 4))
    s.set_defaults(func=cmd_ryser)

    s = sub.add_parser("oracle", help="constructive independent set for gp(5k+11,2) minus two edges")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--edges", required=True, help="e.g. a1a2,b3b5")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("search", help="cgp parameter sweep")
    s.add_argument("--config", required=True)
    s.add_argument("--workers", type=int)
    s.add_argument("--out")
    s.add_argument("--resume", action="store_true")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("report", help="reproduce the example tables")
    s.add_argument("--corpus", help="directory with corpus.json (default: bundled data)")
    s.add_argument("--verify", default="none", choices=("none", "auto", "full"))
    s.add_argument("--samples", type=int, default=2000)
    s.add_argument("--ham-budget", type=int, default=2_000_000)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_report)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (LovaszError, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
