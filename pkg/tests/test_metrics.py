"""Distance matrices and the five indices, checked against pairwise
double-loop oracles built on Floyd-Warshall distances."""

import pytest
from hypothesis import given, settings

from conftest import complete_graph, connected_graphs, cycle_graph, path_graph, star_graph
from mycindex import (
    DisconnectedGraphError,
    Graph,
    build_graph,
    degree_distance,
    distance_matrix,
    gutman,
    index_report,
    wiener,
    zagreb1,
    zagreb2,
)
import oracles


class TestDistanceMatrix:
    def test_path(self):
        assert distance_matrix(path_graph(3)).d == [[0, 1, 2], [1, 0, 1], [2, 1, 0]]

    def test_triangle(self):
        dm = distance_matrix(complete_graph(3))
        assert all(dm.d[u][v] == (0 if u == v else 1) for u in range(3) for v in range(3))

    def test_c5_distance_profile(self):
        dm = distance_matrix(cycle_graph(5))
        dists = sorted(dm.d[u][v] for u in range(5) for v in range(u + 1, 5))
        assert dists == [1] * 5 + [2] * 5

    def test_disconnected_reports_witness(self):
        g = build_graph(4, [(0, 1), (2, 3)])
        with pytest.raises(DisconnectedGraphError) as info:
            distance_matrix(g)
        u, v = info.value.witness
        assert u == 0 and v in (2, 3)

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            distance_matrix(Graph(0))

    def test_single_vertex(self):
        dm = distance_matrix(Graph(1))
        assert dm.d == [[0]] and dm.diameter == 0

    @given(connected_graphs(max_n=7))
    @settings(deadline=None)
    def test_matches_floyd_warshall(self, g):
        dm = distance_matrix(g)
        assert dm.d == oracles.floyd_warshall(g)

    @given(connected_graphs(max_n=7))
    @settings(deadline=None)
    def test_matrix_invariants(self, g):
        dm = distance_matrix(g)
        n = g.n
        for u in range(n):
            assert dm.d[u][u] == 0
            for v in range(u + 1, n):
                assert dm.d[u][v] == dm.d[v][u]
                assert (dm.d[u][v] == 1) == g.has_edge(u, v)
                for w in range(n):
                    assert dm.d[u][w] <= dm.d[u][v] + dm.d[v][w]


class TestDiameter:
    def test_diameter_two_family(self):
        for g in (cycle_graph(4), cycle_graph(5), star_graph(4)):
            assert distance_matrix(g).diameter == 2

    def test_complete_graphs_have_diameter_one(self):
        for n in range(2, 6):
            assert distance_matrix(complete_graph(n)).diameter == 1


class TestWiener:
    def test_values(self):
        assert wiener(distance_matrix(complete_graph(4))) == 6
        assert wiener(distance_matrix(path_graph(4))) == 10
        assert wiener(distance_matrix(cycle_graph(5))) == 15


class TestZagreb:
    def test_zagreb1(self):
        assert zagreb1(path_graph(4)) == 10
        assert zagreb1(star_graph(4)) == 12
        assert zagreb1(Graph(3)) == 0

    def test_zagreb2(self):
        assert zagreb2(path_graph(4)) == 8
        assert zagreb2(complete_graph(4)) == 54
        assert zagreb2(complete_graph(2)) == 1

    @given(connected_graphs())
    def test_zagreb1_edge_form(self, g):
        # squared-degree form equals the edge sum of endpoint-degree sums
        assert zagreb1(g) == oracles.zagreb1_edge_form(g)


class TestDegreeDistance:
    def test_values(self):
        assert degree_distance(path_graph(4), distance_matrix(path_graph(4))) == 28
        assert degree_distance(complete_graph(4), distance_matrix(complete_graph(4))) == 36
        assert degree_distance(star_graph(4), distance_matrix(star_graph(4))) == 24


class TestGutman:
    def test_values(self):
        assert gutman(path_graph(4), distance_matrix(path_graph(4))) == 19
        assert gutman(complete_graph(4), distance_matrix(complete_graph(4))) == 54
        assert gutman(cycle_graph(5), distance_matrix(cycle_graph(5))) == 60


class TestIndexReport:
    def test_p3(self):
        r = index_report(path_graph(3))
        assert (r.n, r.m, r.diameter) == (3, 2, 2)
        assert (r.wiener, r.zagreb1, r.zagreb2) == (4, 6, 4)
        assert (r.degree_distance, r.gutman) == (10, 6)

    def test_k2(self):
        r = index_report(complete_graph(2))
        assert (r.n, r.m, r.diameter, r.wiener) == (2, 1, 1, 1)
        assert (r.zagreb1, r.zagreb2, r.degree_distance, r.gutman) == (2, 1, 2, 1)

    def test_c4(self):
        r = index_report(cycle_graph(4))
        assert (r.n, r.m, r.diameter, r.wiener) == (4, 4, 2, 8)
        assert (r.zagreb1, r.zagreb2, r.degree_distance, r.gutman) == (16, 16, 32, 32)

    def test_single_vertex(self):
        r = index_report(Graph(1))
        assert (r.wiener, r.degree_distance, r.gutman, r.diameter) == (0, 0, 0, 0)

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            index_report(build_graph(4, [(0, 1), (2, 3)]))

    @given(connected_graphs(max_n=7))
    @settings(deadline=None)
    def test_oracle_equivalence(self, g):
        r = index_report(g)
        expected = oracles.brute_indices(g)
        assert r.n == expected["n"] and r.m == expected["m"]
        assert r.diameter == expected["diameter"]
        assert r.wiener == expected["wiener"]
        assert r.zagreb1 == expected["zagreb1"]
        assert r.zagreb2 == expected["zagreb2"]
        assert r.degree_distance == expected["degree_distance"]
        assert r.gutman == expected["gutman"]
