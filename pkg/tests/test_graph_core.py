import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arcurv import (
    AmplyParams,
    AmplyViolation,
    Graph,
    GraphError,
    detect_amply_params,
    dump_edge_list,
    edge_partition,
    gen_cocktail,
    gen_complete,
    gen_cycle,
    gen_hamming,
    gen_hypercube,
    gen_shrikhande,
    load_edge_list,
)

from conftest import random_connected_graph, to_networkx


class TestLoadEdgeList:
    def test_triangle(self):
        g = load_edge_list("3 3\n0 1\n1 2\n0 2")
        assert g.n == 3 and g.num_edges() == 3

    def test_duplicate_collapsed(self):
        # header count applies to edge lines, dedup happens in the graph
        g = load_edge_list("2 2\n0 1\n0 1")
        assert g.num_edges() == 1
        with pytest.raises(GraphError, match="declares"):
            load_edge_list("2 1\n0 1\n0 1")

    def test_index_out_of_range(self):
        with pytest.raises(GraphError, match="out of range"):
            load_edge_list("4 1\n0 4")

    def test_loop_rejected(self):
        with pytest.raises(GraphError, match="loop"):
            load_edge_list("3 1\n1 1")

    def test_comments_and_blanks(self):
        g = load_edge_list("# a triangle\n\n3 3\n0 1\n# middle\n1 2\n0 2\n")
        assert g.num_edges() == 3

    def test_error_carries_line_number(self):
        with pytest.raises(GraphError, match="line 3"):
            load_edge_list("3 2\n0 1\nnot-an-edge")

    def test_roundtrip(self):
        g = gen_cocktail(3)
        assert load_edge_list(dump_edge_list(g)) == g


class TestMetrics:
    def test_hypercube_antipodal(self):
        g = gen_hypercube(3)
        assert g.distance(0, 7) == 3

    def test_self_distance(self):
        g = gen_cycle(5)
        assert g.distance(2, 2) == 0

    def test_h23_double_difference(self):
        g = gen_hamming(2, 3)
        # vertices 0 = (0,0) and 4 = (1,1) differ in both coordinates
        assert g.distance(0, 4) == 2

    def test_distance_matches_networkx(self):
        for seed in range(20):
            g = random_connected_graph(seed, max_n=20)
            h = to_networkx(g)
            lengths = dict(nx.all_pairs_shortest_path_length(h))
            for u in range(g.n):
                for v in range(g.n):
                    assert g.distance(u, v) == lengths[u][v]

    def test_unreachable(self):
        g = Graph(4, [(0, 1), (2, 3)])
        assert g.distance(0, 2) is None
        with pytest.raises(GraphError):
            g.diameter()

    def test_diameters(self):
        assert gen_hamming(2, 3).diameter() == 2
        assert gen_hamming(3, 3).diameter() == 3
        assert gen_complete(7).diameter() == 1

    def test_girth(self):
        assert gen_shrikhande().girth() == 3
        assert gen_hypercube(3).girth() == 4
        assert Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).girth() is None
        assert gen_cycle(9).girth() == 9

    def test_common_neighbors(self):
        k4 = gen_complete(4)
        assert k4.common_neighbors(0, 1) == [2, 3]
        q3 = gen_hypercube(3)
        assert q3.common_neighbors(0, 1) == []
        sh = gen_shrikhande()
        u, v = sh.edges()[0]
        assert len(sh.common_neighbors(u, v)) == 2


class TestDetect:
    def test_q3(self):
        p = detect_amply_params(gen_hypercube(3))
        assert p == AmplyParams(8, 3, 0, 2, girth=4)

    def test_h23(self):
        p = detect_amply_params(gen_hamming(2, 3))
        assert p.as_tuple() == (9, 4, 1, 2)

    def test_petersen(self, petersen):
        p = detect_amply_params(petersen)
        assert p.as_tuple() == (10, 3, 0, 1)
        assert p.girth == 5

    def test_path_not_regular(self):
        p3 = Graph(3, [(0, 1), (1, 2)])
        v = detect_amply_params(p3)
        assert isinstance(v, AmplyViolation)
        assert v.kind == "not-regular"

    def test_complete_beta_absent(self):
        p = detect_amply_params(gen_complete(5))
        assert p.beta is None and p.alpha == 3

    def test_disconnected_is_error(self):
        with pytest.raises(GraphError):
            detect_amply_params(Graph(4, [(0, 1), (2, 3)]))

    def test_hamming_family_parameters(self):
        for p in (2, 3):
            for q in (2, 3, 4):
                g = gen_hamming(p, q)
                params = detect_amply_params(g)
                assert params == AmplyParams(
                    q**p, (q - 1) * p, q - 2, 2, girth=3 if q >= 3 else 4
                )

    def test_girth3_iff_common_neighbor(self):
        for seed in range(15):
            g = random_connected_graph(seed + 100, max_n=12)
            has_triangle = any(
                len(g.common_neighbors(u, v)) > 0 for u, v in g.edges()
            )
            assert (g.girth() == 3) == has_triangle


class TestEdgePartition:
    def test_h23_sizes(self):
        g = gen_hamming(2, 3)
        part = edge_partition(g, *g.edges()[0])
        assert (len(part.delta), len(part.nx), len(part.ny)) == (1, 2, 2)

    def test_octahedron_sizes(self):
        g = gen_cocktail(3)
        part = edge_partition(g, *g.edges()[0])
        assert (len(part.delta), len(part.nx), len(part.ny)) == (2, 1, 1)

    def test_complete_no_exclusive(self):
        g = gen_complete(4)
        part = edge_partition(g, 0, 1)
        assert part.delta == (2, 3) and part.nx == () and part.ny == ()

    def test_not_an_edge(self):
        with pytest.raises(GraphError):
            edge_partition(gen_cycle(5), 0, 2)

    def test_regular_size_identity(self):
        for g in (gen_shrikhande(), gen_hamming(2, 3), gen_cocktail(4)):
            d = g.regular_degree()
            for u, v in g.edges():
                part = edge_partition(g, u, v)
                assert len(part.delta) + len(part.nx) + 1 == d
                assert len(part.nx) == len(part.ny)
                sets = [set(part.delta), set(part.nx), set(part.ny)]
                assert not (sets[0] & sets[1] or sets[0] & sets[2] or sets[1] & sets[2])
                assert u not in sets[0] | sets[1] | sets[2]
                assert v not in sets[0] | sets[1] | sets[2]


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_distance_is_a_metric(seed):
    g = random_connected_graph(seed, max_n=64)
    import random as _r

    rng = _r.Random(seed)
    verts = [rng.randrange(g.n) for _ in range(3)]
    u, v, w = verts
    assert g.distance(u, v) == g.distance(v, u)
    assert (g.distance(u, v) == 0) == (u == v)
    assert g.distance(u, w) <= g.distance(u, v) + g.distance(v, w)
