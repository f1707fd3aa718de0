import random

import pytest

from mpart import errors
from mpart import graph as gr
from mpart import obstruction as ob
from mpart import pattern as pat
from mpart import recognize as rec
from mpart import solver as sv


def two_k2():
    return gr.disjoint_union(gr.complete(2), gr.complete(2))


class TestSplitPartition:
    def test_non_split(self):
        assert rec.split_partition(gr.cycle(4)) is None
        assert rec.split_partition(two_k2()) is None
        assert rec.split_partition(gr.cycle(5)) is None

    def test_k3(self):
        sp = rec.split_partition(gr.complete(3))
        assert sp.clique == frozenset({0, 1, 2})
        assert sp.independent == frozenset()

    def test_deterministic_choice(self):
        # P3: largest valid clique has size 2, lex-least is {0, 1}
        sp = rec.split_partition(gr.path(3))
        assert sorted(sp.clique) == [0, 1]

    def test_witness_is_valid(self):
        rng = random.Random(9)
        for _ in range(60):
            n = rng.randint(1, 12)
            c = rng.randint(0, n)
            edges = [(u, v) for u in range(c) for v in range(u + 1, c)]
            for u in range(c):
                for v in range(c, n):
                    if rng.random() < rng.random():
                        edges.append((u, v))
            G = gr.from_edges(n, edges)
            sp = rec.split_partition(G)
            assert sp is not None
            for u in sp.clique:
                for v in sp.clique:
                    assert u == v or G.has_edge(u, v)
            for u in sp.independent:
                for v in sp.independent:
                    assert u == v or not G.has_edge(u, v)

    def test_closed_under_complement(self):
        for n in range(1, 7):
            for G in gr.enumerate_graphs(n):
                a = rec.split_partition(G) is not None
                b = rec.split_partition(gr.complement(G)) is not None
                assert a == b

    def test_matches_solver_route(self):
        for n in range(1, 8):
            for G in gr.enumerate_graphs(n):
                assert (rec.split_partition(G) is not None) == \
                    (rec.is_kl_graph(G, 1, 1) is not None)


class TestBipartite:
    def test_c5(self):
        assert rec.is_bipartite(gr.cycle(5)) is None
        assert rec.is_cobipartite(gr.cycle(5)) is None

    def test_c6(self):
        coloring = rec.is_bipartite(gr.cycle(6))
        assert coloring is not None
        for u, v in gr.cycle(6).edges():
            assert coloring[u] != coloring[v]

    def test_k4_cobipartite(self):
        coloring = rec.is_cobipartite(gr.complete(4))
        assert coloring is not None
        G = gr.complete(4)
        for u in range(4):
            for v in range(u + 1, 4):
                if coloring[u] == coloring[v]:
                    assert G.has_edge(u, v)


class TestChordal:
    def test_c4(self):
        assert rec.is_chordal(gr.cycle(4)) is None

    def test_gt(self):
        assert rec.is_chordal(ob.construct_gt(4)) is not None

    def test_split_graphs_are_chordal(self):
        for n in range(1, 7):
            for G in gr.enumerate_split_graphs(n):
                assert rec.is_chordal(G) is not None

    def test_order_is_perfect_elimination(self):
        G = ob.construct_gt(3)
        elim = rec.is_chordal(G)
        pos = {v: i for i, v in enumerate(elim)}
        for i, v in enumerate(elim):
            later = [u for u in range(G.n) if G.has_edge(u, v) and pos[u] > i]
            for a in later:
                for b in later:
                    assert a == b or G.has_edge(a, b)


class TestKlGraphs:
    def test_c5_not_split(self):
        assert rec.is_kl_graph(gr.cycle(5), 1, 1) is None

    def test_gt_memberships(self):
        G = ob.construct_gt(3)
        assert rec.is_kl_graph(G, 3, 0) is not None
        assert rec.is_kl_graph(G, 2, 1) is not None

    def test_bad_parameters(self):
        with pytest.raises(errors.BadParameters):
            rec.is_kl_graph(gr.cycle(4), 0, 0)


class TestHomogeneous:
    def test_singletons(self):
        G = gr.cycle(5)
        for v in range(5):
            assert rec.is_homogeneous_set(G, [v])

    def test_whole_vertex_set(self):
        assert rec.is_homogeneous_set(gr.cycle(5), range(5))

    def test_star_leaves(self):
        K13 = gr.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        assert rec.is_homogeneous_set(K13, [1, 2, 3])
        assert not rec.is_homogeneous_set(gr.path(4), [0, 1])

    def test_report_star_leaves(self):
        K13 = gr.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        report = rec.homogeneity_report(K13, [1, 2, 3])
        assert report.max_class_size == 3
        assert report.classes == ((1, 2, 3),)

    def test_report_c4_pair(self):
        report = rec.homogeneity_report(gr.cycle(4), [0, 2])
        # opposite C4 vertices have identical outside neighborhoods
        assert report.max_class_size == 2
        report = rec.homogeneity_report(gr.path(4), [0, 2])
        assert report.max_class_size == 1
        assert len(report.classes) == 2

    def test_not_uniform(self):
        with pytest.raises(errors.PartNotUniform):
            rec.homogeneity_report(gr.path(3), [0, 1, 2])

    def test_empty_part(self):
        report = rec.homogeneity_report(gr.cycle(4), [])
        assert report.max_class_size == 0


def test_prop2_bound_spot_check():
    from math import ceil

    rng = random.Random(2024)
    checked = 0
    while checked < 120:
        k = rng.randint(1, 4)
        n = min(24, k + int(rng.expovariate(0.2)))
        rows = [["0" if i == j else "" for j in range(k)] for i in range(k)]
        for i in range(k):
            for j in range(i + 1, k):
                rows[i][j] = rows[j][i] = rng.choice("01")
        A = pat.make_matrix(["".join(r) for r in rows])
        c = rng.randint(0, n)
        p = rng.random()
        edges = [(u, v) for u in range(c) for v in range(u + 1, c)]
        for u in range(c):
            for v in range(c, n):
                if rng.random() < p:
                    edges.append((u, v))
        G = gr.from_edges(n, edges)
        w = sv.solve(G, A)
        if w is None:
            continue
        checked += 1
        parts = {}
        for v, part in enumerate(w.parts):
            parts.setdefault(part, []).append(v)
        for verts in parts.values():
            report = rec.homogeneity_report(G, verts)
            assert report.max_class_size >= ceil((len(verts) - 1) / 2 ** (k - 1))
