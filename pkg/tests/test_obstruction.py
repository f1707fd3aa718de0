import json
from itertools import combinations

import pytest

from mpart import errors
from mpart import graph as gr
from mpart import obstruction as ob
from mpart import pattern as pat
from mpart import recognize as rec
from mpart import solver as sv


def two_k2():
    return gr.disjoint_union(gr.complete(2), gr.complete(2))


class TestIsObstruction:
    def test_odd_cycle(self):
        assert ob.is_obstruction(gr.cycle(5), pat.make_kl_matrix(2, 0))

    def test_even_cycle(self):
        assert not ob.is_obstruction(gr.cycle(6), pat.make_kl_matrix(2, 0))

    def test_k1_clique_part(self):
        assert not ob.is_obstruction(gr.empty(1), pat.parse_matrix("1"))


class TestMinimality:
    def test_c5_minimal(self):
        cert = ob.minimality_certificate(gr.cycle(5), pat.make_kl_matrix(2, 0))
        assert cert is not None
        assert len(cert.witnesses) == 5

    def test_p6_partitionable_c7_minimal(self):
        M = pat.make_kl_matrix(2, 0)
        status, _ = ob.classify_minimality(gr.path(6), M)
        assert status == "partitionable"
        assert ob.minimality_certificate(gr.cycle(7), M) is not None

    def test_two_triangles_not_minimal(self):
        M = pat.make_kl_matrix(2, 0)
        status, v = ob.classify_minimality(gr.disjoint_union(gr.cycle(3), gr.cycle(3)), M)
        assert status == "not-minimal"
        assert 0 <= v < 6

    def test_gt3_minimal(self):
        cert = ob.minimality_certificate(ob.construct_gt(3), pat.make_m_kt(3, 1))
        assert cert is not None

    def test_certificate_witnesses_validate(self):
        M = pat.make_kl_matrix(1, 1)
        cert = ob.minimality_certificate(gr.cycle(5), M)
        for v in range(5):
            assert sv.validate(gr.delete_vertex(cert.graph, v), M, cert.witnesses[v])


class TestEnumeration:
    def test_odd_cycles(self):
        report = ob.enumerate_minimal_obstructions(pat.make_kl_matrix(2, 0), "all", 7)
        got = {g6 for g6, _ in report.obstructions}
        want = {gr.to_graph6(gr.canonical_graph(gr.cycle(k))) for k in (3, 5, 7)}
        assert got == want
        assert report.counts == {3: 1, 5: 1, 7: 1}

    def test_split_characterization(self):
        report = ob.enumerate_minimal_obstructions(pat.make_kl_matrix(1, 1), "all", 6)
        want = {gr.to_graph6(gr.canonical_graph(G))
                for G in (two_k2(), gr.cycle(4), gr.cycle(5))}
        assert {g6 for g6, _ in report.obstructions} == want

    def test_split_class_empty(self):
        report = ob.enumerate_minimal_obstructions(pat.make_kl_matrix(1, 1), "split", 9)
        assert report.obstructions == ()

    def test_diagonal_star_trivial(self):
        report = ob.enumerate_minimal_obstructions(pat.parse_matrix("*0;00"), "all", 5)
        assert report.obstructions == ()
        assert "diagonal star" in report.note

    def test_too_large(self):
        with pytest.raises(errors.TooLarge):
            ob.enumerate_minimal_obstructions(pat.parse_matrix("0"), "all", 9)

    def test_cobipartite_class_empty_for_own_matrix(self):
        # every co-bipartite graph partitions under the (0,2) matrix
        report = ob.enumerate_minimal_obstructions(pat.make_kl_matrix(0, 2), "cobipartite", 6)
        assert report.obstructions == ()

    def test_cobipartite_route(self):
        # single clique part: the only small co-bipartite minimal obstruction
        # is a non-edge, the complement of the bipartite obstruction K2
        co = ob.enumerate_minimal_obstructions(pat.parse_matrix("1"), "cobipartite", 6)
        assert [g6 for g6, _ in co.obstructions] == [gr.to_graph6(gr.empty(2))]
        for _, cert in co.obstructions:
            assert rec.is_cobipartite(cert.graph) is not None
            assert ob.is_obstruction(cert.graph, pat.parse_matrix("1"))

    def test_parallel_matches_sequential(self):
        M = pat.make_kl_matrix(2, 0)
        seq = ob.enumerate_minimal_obstructions(M, "all", 6, jobs=1)
        par = ob.enumerate_minimal_obstructions(M, "all", 6, jobs=2)
        assert [g6 for g6, _ in seq.obstructions] == [g6 for g6, _ in par.obstructions]

    def test_obstruction_heredity(self):
        # a minimal obstruction has no obstruction among proper induced subgraphs
        M = pat.make_kl_matrix(1, 1)
        report = ob.enumerate_minimal_obstructions(M, "all", 6)
        for _, cert in report.obstructions:
            G = cert.graph
            for size in range(1, G.n):
                for sub in combinations(range(G.n), size):
                    assert sv.solve(gr.induced_subgraph(G, sub), M) is not None


class TestTheorem5:
    def test_sizes(self):
        for n in (1, 2):
            M, G = ob.construct_theorem5(n)
            assert G.n == ob.theorem5_size(n) == 4 * n + 1 + pat.comb(2 * n, n)
            assert M == pat.make_m_kt(2 * n + 1, n)

    def test_clique_structure(self):
        _, G = ob.construct_theorem5(2)
        assert G.n == 15
        for u in range(5):  # a and B form a clique of size 2n+1
            for v in range(u + 1, 5):
                assert G.has_edge(u, v)

    def test_split(self):
        for n in (1, 2):
            _, G = ob.construct_theorem5(n)
            assert rec.split_partition(G) is not None

    def test_minimal_obstruction(self):
        for n in (1, 2):
            M, G = ob.construct_theorem5(n)
            cert = ob.minimality_certificate(G, M)
            assert cert is not None

    def test_solve_split_agrees_on_n1(self):
        M, G = ob.construct_theorem5(1)
        assert sv.solve_split(G, M) is None

    def test_bad_parameters(self):
        with pytest.raises(errors.BadParameters):
            ob.construct_theorem5(0)
        with pytest.raises(errors.BadParameters):
            ob.construct_theorem5(4)  # over the 64-vertex cap


class TestGtFamily:
    def test_shape(self):
        G = ob.construct_gt(3)
        assert G.n == 7
        assert G.degree(6) == 4  # interior vertex misses the endpoints

    def test_chordal(self):
        assert rec.is_chordal(ob.construct_gt(3)) is not None

    def test_delete_u_gives_path(self):
        G = ob.construct_gt(3)
        assert gr.canonical_form(gr.delete_vertex(G, 6)) == gr.canonical_form(gr.path(6))

    def test_induced_2k2(self):
        G = ob.construct_gt(3)
        sub = gr.induced_subgraph(G, [0, 1, 4, 5])
        assert gr.canonical_form(sub) == gr.canonical_form(two_k2())

    def test_bad_parameters(self):
        with pytest.raises(errors.BadParameters):
            ob.construct_gt(2)


class TestBounds:
    def test_values(self):
        assert ob.theorem1_bound(1, 1) == 11
        assert ob.theorem4_bound(2, 0) == 6
        assert ob.theorem5_size(2) == 15
        assert ob.feder2008_bound(1, 1) == 4

    def test_theorem1_swap(self):
        assert ob.theorem1_bound(0, 2) == ob.theorem1_bound(2, 0)
        assert ob.theorem1_bound(1, 3) == ob.theorem1_bound(3, 1)

    def test_bad_parameters(self):
        with pytest.raises(errors.BadParameters):
            ob.theorem1_bound(0, 0)
        with pytest.raises(errors.BadParameters):
            ob.theorem5_size(0)


class TestReports:
    def test_json_and_tsv(self):
        report = ob.enumerate_minimal_obstructions(pat.make_kl_matrix(2, 0), "all", 5)
        data = json.loads(ob.report_to_json(report))
        assert data["counts"] == {"3": 1, "5": 1}
        tsv = ob.report_to_tsv(report)
        assert tsv.splitlines()[0] == "n\tgraph6\tcertificate-ok"
        assert len(tsv.splitlines()) == 3

    def test_save_catalog(self, tmp_path):
        report = ob.enumerate_minimal_obstructions(pat.make_kl_matrix(2, 0), "all", 5)
        base = ob.save_catalog(report, tmp_path, "0.1.0")
        assert (base / "n3.g6").read_text().strip() == "Bw"
        manifest = json.loads((base / "manifest.json").read_text())
        assert manifest["matrix"] == "0*;*0"
        assert manifest["bounds"]["bipartite_order_bound"] == 6
        assert manifest["version"] == "0.1.0"
