"""Acceptance checks: one callable per criterion, shared by the test suite
and the `mpart verify` command."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import product
from math import ceil

from . import graph as gr
from . import obstruction as ob
from . import pattern as pat
from . import recognize as rec
from . import solver as sv


@dataclass
class CriterionResult:
    name: str
    ok: bool
    measured: str
    elapsed: float
    budget: float

    @property
    def within_budget(self) -> bool:
        return self.elapsed <= self.budget


def _canonical_g6_set(graphs) -> set[str]:
    return {gr.to_graph6(gr.canonical_graph(G)) for G in graphs}


def _diag_star_free_matrices(orders=(2, 3)) -> list[pat.PatternMatrix]:
    out = []
    if 2 in orders:
        for d in product("01", repeat=2):
            for o in "01*":
                out.append(pat.make_matrix([d[0] + o, o + d[1]]))
    if 3 in orders:
        for d in product("01", repeat=3):
            for o in product("01*", repeat=3):
                out.append(pat.make_matrix([
                    d[0] + o[0] + o[1],
                    o[0] + d[1] + o[2],
                    o[1] + o[2] + d[2],
                ]))
    return out


def _kl_of(M: pat.PatternMatrix) -> tuple[int, int]:
    d = M.diagonal()
    return d.count("0"), len(d) - d.count("0")


# --- criteria -------------------------------------------------------------

def check_odd_cycle_obstructions(jobs: int = 1):
    report = ob.enumerate_minimal_obstructions(pat.make_kl_matrix(2, 0), "all", 7, jobs=jobs)
    got = {g6 for g6, _ in report.obstructions}
    want = _canonical_g6_set([gr.cycle(3), gr.cycle(5), gr.cycle(7)])
    return got == want, f"found {sorted(got)}"


def check_split_characterization(jobs: int = 1):
    M = pat.make_kl_matrix(1, 1)
    report = ob.enumerate_minimal_obstructions(M, "all", 6, jobs=jobs)
    got = {g6 for g6, _ in report.obstructions}
    want = _canonical_g6_set([
        gr.disjoint_union(gr.complete(2), gr.complete(2)),
        gr.cycle(4),
        gr.cycle(5),
    ])
    # cross-check solvability of every candidate against the counting oracle
    mismatches = 0
    for n in range(1, 7):
        for G in gr.enumerate_graphs(n):
            if (sv.count_partitions(G, M) > 0) != (sv.solve(G, M) is not None):
                mismatches += 1
    ok = got == want and mismatches == 0
    return ok, f"found {sorted(got)}, oracle mismatches {mismatches}"


def check_feder2008_bound():
    matrices = [pat.make_matrix([a + b, b + c])
                for a, c in (("0", "1"), ("1", "0")) for b in "01"]
    worst = 0
    for M in matrices:
        report = ob.enumerate_minimal_obstructions(M, "all", 6)
        for _, cert in report.obstructions:
            worst = max(worst, cert.graph.n)
    return worst <= 4, f"{len(matrices)} matrices, largest minimal obstruction order {worst}"


def check_c_star_split_solvable():
    failures = 0
    checked = 0
    mats = [M for M in _diag_star_free_matrices() if pat.block_c_has_star(M)]
    for n in range(1, 9):
        for G in gr.enumerate_split_graphs(n):
            for M in mats:
                w = sv.solve_split(G, M)
                checked += 1
                if w is None or not sv.validate(G, M, w):
                    failures += 1
    return failures == 0, f"{checked} (graph, matrix) pairs, {failures} failures"


def check_theorem5(deep: bool = False):
    details = []
    ok = True
    for n in [1, 2] + ([3] if deep else []):
        M, G = ob.construct_theorem5(n)
        size_ok = G.n == ob.theorem5_size(n)
        split_ok = rec.split_partition(G) is not None
        status, _ = ob.classify_minimality(G, M)
        ok = ok and size_ok and split_ok and status == "minimal"
        details.append(f"n={n}: {G.n} vertices, split={split_ok}, {status}")
    sizes_ok = all(ob.theorem5_size(n) == 4 * n + 1 + pat.comb(2 * n, n) for n in range(1, 11))
    ok = ok and sizes_ok
    return ok, "; ".join(details)


def check_gt_family():
    M = pat.make_m_kt(3, 1)
    Mc = pat.complement_matrix(M)
    details = []
    ok = True
    for t in (3, 4, 5, 6):
        G = ob.construct_gt(t)
        chordal = rec.is_chordal(G) is not None
        has_2k2 = _contains_induced_2k2(G)
        g30 = rec.is_kl_graph(G, 3, 0) is not None
        g21 = rec.is_kl_graph(G, 2, 1) is not None
        status, _ = ob.classify_minimality(G, M)
        H = gr.complement(G)
        co12 = rec.is_kl_graph(H, 1, 2) is not None
        co03 = rec.is_kl_graph(H, 0, 3) is not None
        co_status, _ = ob.classify_minimality(H, Mc)
        all_ok = (chordal and has_2k2 and g30 and g21 and status == "minimal"
                  and co12 and co03 and co_status == "minimal")
        ok = ok and all_ok
        details.append(f"t={t}:{'ok' if all_ok else 'FAIL'}")
    return ok, " ".join(details)


def _contains_induced_2k2(G: gr.Graph) -> bool:
    edges = G.edges()
    for a, b in edges:
        for c, d in edges:
            if len({a, b, c, d}) < 4:
                continue
            if not (G.has_edge(a, c) or G.has_edge(a, d)
                    or G.has_edge(b, c) or G.has_edge(b, d)):
                return True
    return False


def random_split_graph(rng: random.Random, n: int) -> gr.Graph:
    c = rng.randint(0, n)
    p = rng.random()
    edges = [(u, v) for u in range(c) for v in range(u + 1, c)]
    for u in range(c):
        for v in range(c, n):
            if rng.random() < p:
                edges.append((u, v))
    return gr.from_edges(n, edges)


def random_bipartite_graph(rng: random.Random, n: int) -> gr.Graph:
    n1 = rng.randint(0, n)
    p = rng.random()
    edges = [(u, v) for u in range(n1) for v in range(n1, n) if rng.random() < p]
    return gr.from_edges(n, edges)


def check_prop2_homogeneity(seed: int = 12345, cases: int = 1000):
    rng = random.Random(seed)
    done = 0
    violations = 0
    attempts = 0
    while done < cases:
        attempts += 1
        k = rng.randint(1, 4)
        n = min(24, k + int(rng.expovariate(0.18)))
        rows = [["0" if i == j else "" for j in range(k)] for i in range(k)]
        for i in range(k):
            for j in range(i + 1, k):
                rows[i][j] = rows[j][i] = rng.choice("01")
        A = pat.make_matrix(["".join(r) for r in rows])
        G = random_split_graph(rng, n)
        w = sv.solve(G, A)
        if w is None:
            continue
        done += 1
        parts: dict[int, list[int]] = {}
        for v, p in enumerate(w.parts):
            parts.setdefault(p, []).append(v)
        for verts in parts.values():
            report = rec.homogeneity_report(G, verts)
            if report.max_class_size < ceil((len(verts) - 1) / 2 ** (k - 1)):
                violations += 1
    return violations == 0, f"{done} instances ({attempts} attempts), {violations} violations"


def check_prop4_homogeneity(seed: int = 54321, cases: int = 1000):
    rng = random.Random(seed)
    done = 0
    violations = 0
    attempts = 0
    while done < cases:
        attempts += 1
        k = rng.randint(1, 3)
        ell = rng.randint(0, 2)
        m = k + ell
        n = min(20, 1 + int(rng.expovariate(0.2)))
        rows = [["" for _ in range(m)] for _ in range(m)]
        for i in range(m):
            rows[i][i] = "0" if i < k else "1"
        for i in range(m):
            for j in range(i + 1, m):
                e = rng.choice("01") if (i < k and j < k) else rng.choice("01*")
                rows[i][j] = rows[j][i] = e
        M = pat.make_matrix(["".join(r) for r in rows])
        G = random_bipartite_graph(rng, n)
        w = sv.solve(G, M)
        if w is None:
            continue
        done += 1
        parts: dict[int, list[int]] = {}
        for v, p in enumerate(w.parts):
            parts.setdefault(p, []).append(v)
        for p, verts in parts.items():
            if p >= k:
                continue
            report = rec.homogeneity_report(G, verts)
            if report.max_class_size < ceil(len(verts) / 2 ** (2 * ell)):
                violations += 1
    return violations == 0, f"{done} instances ({attempts} attempts), {violations} violations"


def check_solver_exactness():
    matrices = []
    for d in product("01*", repeat=3):
        for o in product("01*", repeat=3):
            matrices.append(pat.make_matrix([
                d[0] + o[0] + o[1],
                o[0] + d[1] + o[2],
                o[1] + o[2] + d[2],
            ]))
    graphs = [G for n in range(1, 6) for G in gr.enumerate_graphs(n)]
    disagreements = 0
    for M in matrices:
        for G in graphs:
            if (sv.solve(G, M) is not None) != (sv.count_partitions(G, M) > 0):
                disagreements += 1
    return disagreements == 0, (
        f"{len(matrices)} matrices x {len(graphs)} graphs, {disagreements} disagreements"
    )


def check_solve_split_equivalence(seed: int = 777, cases: int = 1000):
    rng = random.Random(seed)
    disagreements = 0
    for _ in range(cases):
        n = rng.randint(1, 14)
        G = random_split_graph(rng, n)
        m = rng.randint(1, 4)
        rows = [["" for _ in range(m)] for _ in range(m)]
        for i in range(m):
            rows[i][i] = rng.choice("01")
        for i in range(m):
            for j in range(i + 1, m):
                rows[i][j] = rows[j][i] = rng.choice("01*")
        M = pat.make_matrix(["".join(r) for r in rows])
        s1 = sv.solve(G, M)
        s2 = sv.solve_split(G, M)
        if (s1 is None) != (s2 is None):
            disagreements += 1
        elif s2 is not None and not sv.validate(G, M, s2):
            disagreements += 1
    return disagreements == 0, f"{cases} pairs, {disagreements} disagreements"


def check_enumeration_determinism():
    import contextlib
    import io
    import tempfile

    from .cli import main as cli_main

    outs = []
    for jobs in (1, 8):
        buf = io.StringIO()
        with tempfile.TemporaryDirectory() as td, contextlib.redirect_stdout(buf):
            rc = cli_main(["enumerate", "--matrix", "0*;*0", "--class", "all",
                           "--max-n", "7", "--jobs", str(jobs), "--data-dir", td])
        outs.append((rc, buf.getvalue()))
    ok = outs[0] == outs[1] and outs[0][0] == 0
    return ok, f"jobs=1 vs jobs=8: {'identical' if ok else 'DIFFER'}"


def check_bound_consistency():
    worst_split = 0
    worst_bip = 0
    violations = 0
    for M in _diag_star_free_matrices():
        k, ell = _kl_of(M)
        rep = ob.enumerate_minimal_obstructions(M, "split", 9)
        for _, cert in rep.obstructions:
            worst_split = max(worst_split, cert.graph.n)
            if cert.graph.n > ob.theorem1_bound(k, ell):
                violations += 1
        rep = ob.enumerate_minimal_obstructions(M, "bipartite", 8)
        for _, cert in rep.obstructions:
            worst_bip = max(worst_bip, cert.graph.n)
            if cert.graph.n > ob.theorem4_bound(k, ell):
                violations += 1
    return violations == 0, (
        f"largest split order {worst_split}, largest bipartite order {worst_bip}, "
        f"{violations} bound violations"
    )


# --- harness --------------------------------------------------------------

CRITERIA = [
    # (name, budget seconds, level, callable)
    ("odd-cycle-obstructions", 10, "quick", check_odd_cycle_obstructions),
    ("split-characterization", 30, "quick", check_split_characterization),
    ("feder2008-bound", 120, "quick", check_feder2008_bound),
    ("c-star-split-solvable", 120, "full", check_c_star_split_solvable),
    ("theorem5-construction", 61, "quick", check_theorem5),
    ("gt-family", 60, "quick", check_gt_family),
    ("prop2-homogeneity", 120, "full", check_prop2_homogeneity),
    ("prop4-homogeneity", 120, "full", check_prop4_homogeneity),
    ("solver-exactness", 300, "full", check_solver_exactness),
    ("solve-split-equivalence", 120, "quick", check_solve_split_equivalence),
    ("enumeration-determinism", 60, "quick", check_enumeration_determinism),
    ("bound-consistency", 600, "full", check_bound_consistency),
]


def run_criteria(level: str = "full", deep: bool = False) -> list[CriterionResult]:
    results = []
    for name, budget, tier, func in CRITERIA:
        if level == "quick" and tier != "quick":
            continue
        t0 = time.perf_counter()
        if func is check_theorem5:
            ok, measured = func(deep=deep)
        else:
            ok, measured = func()
        results.append(CriterionResult(name, ok, measured, time.perf_counter() - t0, budget))
    return results
