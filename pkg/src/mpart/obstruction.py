"""Obstruction predicates, minimality certification, exhaustive enumeration
of minimal obstructions by graph class, explicit extremal constructions and
closed-form size bounds."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from pathlib import Path

from .errors import BadParameters, TooLarge
from .graph import (
    Graph,
    canonical_form,
    complement,
    delete_vertex,
    enumerate_graphs,
    enumerate_split_graphs,
    from_edges,
    to_graph6,
)
from .pattern import STAR, PatternMatrix, complement_matrix, make_m_kt
from .recognize import is_bipartite, is_chordal
from .solver import PartAssignment, solve

CLASS_LIMITS = {"all": 8, "split": 9, "bipartite": 8, "cobipartite": 8, "chordal": 8}


@dataclass(frozen=True)
class MinimalityCertificate:
    matrix: PatternMatrix
    graph: Graph
    witnesses: tuple[PartAssignment, ...]  # witnesses[v] partitions graph - v


@dataclass(frozen=True)
class EnumerationReport:
    matrix: PatternMatrix
    class_name: str
    n_max: int
    obstructions: tuple[tuple[str, MinimalityCertificate], ...]
    counts: dict[int, int] = field(default_factory=dict)
    elapsed: float = 0.0
    note: str = ""


def is_obstruction(G: Graph, M: PatternMatrix) -> bool:
    return solve(G, M) is None


def classify_minimality(G: Graph, M: PatternMatrix):
    """('partitionable', witness) | ('not-minimal', v) | ('minimal', witnesses)."""
    w = solve(G, M)
    if w is not None:
        return ("partitionable", w)
    witnesses = []
    for v in range(G.n):
        sub = solve(delete_vertex(G, v), M)
        if sub is None:
            return ("not-minimal", v)
        witnesses.append(sub)
    return ("minimal", tuple(witnesses))


def minimality_certificate(G: Graph, M: PatternMatrix) -> MinimalityCertificate | None:
    status, payload = classify_minimality(G, M)
    if status != "minimal":
        return None
    return MinimalityCertificate(M, G, payload)


# ---------------------------------------------------------------------------
# exhaustive enumeration per class
# ---------------------------------------------------------------------------

def _class_candidates(class_name: str, n: int):
    if class_name == "all":
        return enumerate_graphs(n)
    if class_name == "split":
        return enumerate_split_graphs(n)
    if class_name == "bipartite":
        return [G for G in enumerate_graphs(n) if is_bipartite(G) is not None]
    if class_name == "chordal":
        return [G for G in enumerate_graphs(n) if is_chordal(G) is not None]
    raise BadParameters(f"unknown class {class_name!r}")


def _worker(task):
    G, M = task
    status, payload = classify_minimality(G, M)
    if status != "minimal":
        return None
    return (G, payload)


def enumerate_minimal_obstructions(
    M: PatternMatrix, class_name: str, n_max: int, jobs: int = 1
) -> EnumerationReport:
    if class_name not in CLASS_LIMITS:
        raise BadParameters(f"unknown class {class_name!r}")
    if n_max > CLASS_LIMITS[class_name]:
        raise TooLarge(f"n_max={n_max} above the {class_name} limit {CLASS_LIMITS[class_name]}")
    t0 = time.perf_counter()
    if STAR in M.diagonal():
        return EnumerationReport(
            M, class_name, n_max, (), {}, time.perf_counter() - t0,
            note="diagonal star: every graph fits in the unrestricted part, no obstructions",
        )
    if class_name == "cobipartite":
        base = enumerate_minimal_obstructions(complement_matrix(M), "bipartite", n_max, jobs=jobs)
        found = []
        for g6, cert in base.obstructions:
            H = complement(cert.graph)
            co_cert = minimality_certificate(H, M)
            assert co_cert is not None  # complement duality is exact
            found.append((canonical_form(H), H, co_cert.witnesses))
        return _assemble(M, class_name, n_max, found, t0)

    found = []
    for n in range(1, n_max + 1):
        candidates = _class_candidates(class_name, n)
        tasks = [(G, M) for G in candidates]
        if jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_worker, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
        else:
            results = [_worker(t) for t in tasks]
        for res in results:
            if res is not None:
                G, witnesses = res
                found.append((canonical_form(G), G, witnesses))
    return _assemble(M, class_name, n_max, found, t0)


def _assemble(M, class_name, n_max, found, t0) -> EnumerationReport:
    found.sort(key=lambda x: x[0])
    obstructions = []
    counts: dict[int, int] = {}
    for _, G, witnesses in found:
        obstructions.append((to_graph6(G), MinimalityCertificate(M, G, witnesses)))
        counts[G.n] = counts.get(G.n, 0) + 1
    return EnumerationReport(M, class_name, n_max, tuple(obstructions), counts,
                             time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# explicit constructions
# ---------------------------------------------------------------------------

def construct_theorem5(n: int) -> tuple[PatternMatrix, Graph]:
    """Split graph certifying an exponential-size minimal obstruction for the
    (2n+1) x (2n+1) matrix with n ones in its last row.

    Vertex order: special vertex a = 0; clique B = 1..2n (all adjacent to a);
    independent B' = 2n+1..4n where the i-th misses exactly its mate in B;
    then one vertex per n-subset of B (lexicographic), adjacent to exactly
    that subset.
    """
    if n < 1:
        raise BadParameters("need n >= 1")
    total = 4 * n + 1 + comb(2 * n, n)
    if total > 64:
        raise BadParameters(f"{total} vertices exceeds the 64-vertex cap (need n <= 3)")
    M = make_m_kt(2 * n + 1, n)
    edges = []
    B = list(range(1, 2 * n + 1))
    for i, b in enumerate(B):
        edges.append((0, b))
        for b2 in B[i + 1:]:
            edges.append((b, b2))
    for i, b in enumerate(B):
        bp = 2 * n + 1 + i  # mate of b
        edges.append((0, bp))
        for b2 in B:
            if b2 != b:
                edges.append((bp, b2))
    v = 4 * n + 1
    for subset in combinations(B, n):
        for b in subset:
            edges.append((v, b))
        v += 1
    return M, from_edges(total, edges)


def construct_gt(t: int) -> Graph:
    """Even path on 2t vertices plus a vertex adjacent to all its interior."""
    if t < 3:
        raise BadParameters("need t >= 3")
    edges = [(i, i + 1) for i in range(2 * t - 1)]
    u = 2 * t
    edges.extend((u, p) for p in range(1, 2 * t - 1))
    return from_edges(2 * t + 1, edges)


# ---------------------------------------------------------------------------
# closed-form bounds
# ---------------------------------------------------------------------------

def theorem1_bound(k: int, ell: int) -> int:
    """Upper bound on the order of a split minimal obstruction.

    Stated for k >= ell; for k < ell the bound is evaluated at (ell, k),
    which is justified by complement duality.
    """
    if k < 0 or ell < 0 or k + ell < 1:
        raise BadParameters(f"need k+ell >= 1, got k={k}, ell={ell}")
    if k < ell:
        k, ell = ell, k
    return 2 ** (k - 1) * (k + ell) * (2 * k + 3) + 1


def theorem4_bound(k: int, ell: int) -> int:
    """Upper bound on the order of a bipartite minimal obstruction."""
    if k < 0 or ell < 0 or k + ell < 1:
        raise BadParameters(f"need k+ell >= 1, got k={k}, ell={ell}")
    return 2 ** (2 * ell) * (k + ell) * (2 * ell + 3)


def theorem5_size(n: int) -> int:
    """Order of the construct_theorem5 graph."""
    if n < 1:
        raise BadParameters("need n >= 1")
    return 4 * n + 1 + comb(2 * n, n)


def feder2008_bound(k: int, ell: int) -> int:
    """Largest minimal obstruction order for star-free matrices."""
    if k < 0 or ell < 0 or k + ell < 1:
        raise BadParameters(f"need k+ell >= 1, got k={k}, ell={ell}")
    return (k + 1) * (ell + 1)


# ---------------------------------------------------------------------------
# report serialization and catalog persistence
# ---------------------------------------------------------------------------

def matrix_slug(M: PatternMatrix) -> str:
    return "-".join(r.replace("*", "s") for r in M.rows)


def report_to_dict(report: EnumerationReport) -> dict:
    return {
        "matrix": report.matrix.to_text(),
        "class": report.class_name,
        "n_max": report.n_max,
        "note": report.note,
        "counts": {str(n): c for n, c in sorted(report.counts.items())},
        "obstructions": [
            {
                "n": cert.graph.n,
                "graph6": g6,
                "certificate_ok": True,
                "witnesses": [list(w.parts) for w in cert.witnesses],
            }
            for g6, cert in report.obstructions
        ],
    }


def report_to_json(report: EnumerationReport) -> str:
    return json.dumps(report_to_dict(report), indent=2, sort_keys=True)


def report_to_tsv(report: EnumerationReport) -> str:
    lines = ["n\tgraph6\tcertificate-ok"]
    lines.extend(f"{cert.graph.n}\t{g6}\tok" for g6, cert in report.obstructions)
    return "\n".join(lines) + "\n"


def save_catalog(report: EnumerationReport, root, version: str) -> Path:
    """Persist data/<matrix-slug>/<class>/n<k>.g6 files plus a manifest."""
    base = Path(root) / matrix_slug(report.matrix) / report.class_name
    base.mkdir(parents=True, exist_ok=True)
    by_order: dict[int, list[str]] = {}
    for g6, cert in report.obstructions:
        by_order.setdefault(cert.graph.n, []).append(g6)
    for n, lines in sorted(by_order.items()):
        (base / f"n{n}.g6").write_text("\n".join(lines) + "\n")
    diag = report.matrix.diagonal()
    if STAR in diag:
        bounds = None
    else:
        k = diag.count("0")
        ell = report.matrix.m - k
        bounds = {
            "split_order_bound": theorem1_bound(k, ell),
            "split_bound_swapped": k < ell,
            "bipartite_order_bound": theorem4_bound(k, ell),
            "star_free_order_bound": feder2008_bound(k, ell)
            if all(STAR not in r for r in report.matrix.rows) else None,
        }
    manifest = {
        "matrix": report.matrix.to_text(),
        "class": report.class_name,
        "n_max": report.n_max,
        "note": report.note,
        "counts": {str(n): c for n, c in sorted(report.counts.items())},
        "bounds": bounds,
        "version": version,
    }
    (base / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    return base
