"""Command-line front end.

Exit codes: 0 success / verified, 1 legitimate negative answer, 2 usage or
input error, 3 indeterminate (timeout).  Machine-parseable output goes to
stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import signal
import sys
from pathlib import Path

from . import __version__
from . import obstruction as ob
from . import pattern as pat
from . import recognize as rec
from . import solver as sv
from . import verify as vf
from .errors import MPartError
from .graph import Graph, parse_edge_list, parse_graph6, to_graph6


class _Timeout(Exception):
    pass


def _load_matrix(args) -> pat.PatternMatrix:
    if getattr(args, "matrix_file", None):
        return pat.parse_matrix(Path(args.matrix_file).read_text())
    if args.matrix is None:
        raise MPartError("no matrix given (use --matrix or --matrix-file)")
    return pat.parse_matrix(args.matrix)


def _load_graph(args) -> Graph:
    sources = [s for s in (args.graph, args.edges, getattr(args, "graph_file", None)) if s]
    if len(sources) != 1:
        raise MPartError("exactly one graph source required (--graph, --edges or --graph-file)")
    if args.graph:
        return parse_graph6(args.graph)
    if args.edges:
        return parse_edge_list(args.edges)
    text = Path(args.graph_file).read_text().strip()
    return parse_edge_list(text) if ";" in text else parse_graph6(text)


def _graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", help="graph6 string")
    p.add_argument("--edges", help="edge list: 'n; u-v, u-v, ...'")
    p.add_argument("--graph-file", help="file holding a graph6 string or edge list")


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("MPART_JOBS", "1")))
    except ValueError:
        return 1


def cmd_solve(args) -> int:
    M = _load_matrix(args)
    G = _load_graph(args)
    witness = sv.solve(G, M)
    if witness is None:
        print(json.dumps({"result": "no-partition"}))
        return 1
    print(witness.to_json())
    return 0


def cmd_check_minimal(args) -> int:
    M = _load_matrix(args)
    G = _load_graph(args)
    status, payload = ob.classify_minimality(G, M)
    if status == "partitionable":
        print(json.dumps({"status": "partitionable", "witness": list(payload.parts)}))
    elif status == "not-minimal":
        print(json.dumps({"status": "obstruction-not-minimal", "still_obstructed_without": payload}))
    else:
        print(json.dumps({
            "status": "minimal-obstruction",
            "certificate": {"witnesses": [list(w.parts) for w in payload]},
        }))
    return 0


def cmd_enumerate(args) -> int:
    M = _load_matrix(args)
    report = ob.enumerate_minimal_obstructions(M, args.class_name, args.max_n, jobs=args.jobs)
    ob.save_catalog(report, args.data_dir, __version__)
    if args.output == "tsv":
        counts = "\n".join(f"{n}\t{c}" for n, c in sorted(report.counts.items()))
        sys.stdout.write(f"order\tcount\n{counts}\n\n{ob.report_to_tsv(report)}")
    else:
        sys.stdout.write(ob.report_to_json(report) + "\n")
    return 0


def cmd_construct(args) -> int:
    if args.kind == "mkt":
        M = pat.make_m_kt(args.k, args.t)
        print(json.dumps({"kind": "mkt", "k": args.k, "t": args.t, "matrix": M.to_text()}))
    elif args.kind == "thm5":
        M, G = ob.construct_theorem5(args.n)
        print(json.dumps({
            "kind": "thm5", "n": args.n, "graph6": to_graph6(G),
            "n_vertices": G.n, "matrix": M.to_text(),
            "vertex_order": "special vertex, clique, independent mates, subset vertices",
        }))
    else:
        G = ob.construct_gt(args.t)
        print(json.dumps({
            "kind": "gt", "t": args.t, "graph6": to_graph6(G), "n_vertices": G.n,
            "vertex_order": "path vertices then the dominating interior vertex",
        }))
    return 0


def cmd_recognize(args) -> int:
    G = _load_graph(args)
    cls = args.class_name
    if cls == "split":
        sp = rec.split_partition(G)
        if sp is None:
            print(json.dumps({"result": "not-in-class", "class": cls}))
            return 1
        print(json.dumps({"class": cls, "clique": sorted(sp.clique),
                          "independent": sorted(sp.independent)}))
    elif cls in ("bipartite", "cobipartite"):
        coloring = rec.is_bipartite(G) if cls == "bipartite" else rec.is_cobipartite(G)
        if coloring is None:
            print(json.dumps({"result": "not-in-class", "class": cls}))
            return 1
        print(json.dumps({"class": cls, "coloring": list(coloring)}))
    else:
        order = rec.is_chordal(G)
        if order is None:
            print(json.dumps({"result": "not-in-class", "class": cls}))
            return 1
        print(json.dumps({"class": cls, "elimination_order": list(order)}))
    return 0


def cmd_verify(args) -> int:
    results = vf.run_criteria(level=args.level, deep=args.deep)
    all_ok = True
    for r in results:
        ok = r.ok and r.within_budget
        all_ok = all_ok and ok
        print(f"{'PASS' if ok else 'FAIL'}\t{r.name}\t{r.elapsed:.2f}s\t{r.measured}")
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mpart", description=__doc__)
    parser.add_argument("--version", action="version", version=f"mpart {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide partitionability, print a witness")
    p.add_argument("--matrix")
    p.add_argument("--matrix-file")
    _graph_args(p)
    p.add_argument("--timeout", type=float, default=0)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check-minimal", help="classify obstruction minimality")
    p.add_argument("--matrix")
    p.add_argument("--matrix-file")
    _graph_args(p)
    p.add_argument("--timeout", type=float, default=0)
    p.set_defaults(func=cmd_check_minimal)

    p = sub.add_parser("enumerate", help="enumerate minimal obstructions in a class")
    p.add_argument("--matrix")
    p.add_argument("--matrix-file")
    p.add_argument("--class", dest="class_name", default="all",
                   choices=sorted(ob.CLASS_LIMITS))
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--output", choices=("json", "tsv"), default="json")
    p.add_argument("--data-dir", default="data")
    p.add_argument("--timeout", type=float, default=0)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("construct", help="build the explicit families")
    csub = p.add_subparsers(dest="kind", required=True)
    c = csub.add_parser("mkt")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--t", type=int, required=True)
    c = csub.add_parser("thm5")
    c.add_argument("--n", type=int, required=True)
    c = csub.add_parser("gt")
    c.add_argument("--t", type=int, required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("recognize", help="graph-class recognition with witness")
    p.add_argument("--class", dest="class_name", required=True,
                   choices=("split", "bipartite", "cobipartite", "chordal"))
    _graph_args(p)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("verify", help="run the acceptance checks")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.add_argument("--deep", action="store_true",
                   help="include the 33-vertex construction check (no time guarantee)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    timeout = getattr(args, "timeout", 0)
    if timeout:
        def _raise(signum, frame):
            raise _Timeout

        signal.signal(signal.SIGALRM, _raise)
        signal.setitimer(signal.ITIMER_REAL, timeout)
    try:
        return args.func(args)
    except _Timeout:
        print(json.dumps({"result": "indeterminate", "reason": "timeout"}))
        return 3
    except MPartError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        if timeout:
            signal.setitimer(signal.ITIMER_REAL, 0)


if __name__ == "__main__":
    raise SystemExit(main())
