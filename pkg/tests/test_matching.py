import pytest

from arcurv import (
    Bipartite,
    MatchingError,
    dense_perfect_matching,
    detect_amply_params,
    gen_cocktail,
    gen_hamming,
    hall_violator,
    konig_decomposition,
    matching_through_edge,
    max_matching,
)
from arcurv.witness import build_transport_bipartite

from conftest import random_connected_graph


def complete_bipartite(n: int) -> Bipartite:
    return Bipartite.from_edges(n, n, [(u, w) for u in range(n) for w in range(n)])


def bipartite_cycle(length: int) -> Bipartite:
    # alternating cycle on length/2 + length/2 vertices
    assert length % 2 == 0
    n = length // 2
    return Bipartite.from_edges(n, n, [(i, i) for i in range(n)] + [(i, (i + 1) % n) for i in range(n)])


class TestMaxMatching:
    def test_k33(self):
        assert max_matching(complete_bipartite(3)).size() == 3

    def test_shared_single_neighbor(self):
        b = Bipartite.from_edges(2, 1, [(0, 0), (1, 0)])
        assert max_matching(b).size() == 1

    def test_six_cycle(self):
        assert max_matching(bipartite_cycle(6)).size() == 3

    def test_no_augmenting_path_on_random_instances(self):
        # maximality: max matching size equals the Hungarian-style bound from rerunning
        import random

        for seed in range(30):
            rng = random.Random(seed)
            ln = rng.randint(1, 12)
            rn = rng.randint(1, 12)
            edges = {
                (rng.randrange(ln), rng.randrange(rn))
                for _ in range(rng.randint(0, ln * rn))
            }
            b = Bipartite.from_edges(ln, rn, edges)
            m = max_matching(b)
            m.validate(b)
            # checked against networkx's independent implementation
            import networkx as nx

            h = nx.Graph()
            h.add_nodes_from(("L", u) for u in range(ln))
            h.add_nodes_from(("R", w) for w in range(rn))
            h.add_edges_from((("L", u), ("R", w)) for u, w in b.edges())
            ref = nx.bipartite.maximum_matching(h, top_nodes=[("L", u) for u in range(ln)])
            assert m.size() == len(ref) // 2


class TestHallViolator:
    def test_k22_none(self):
        assert hall_violator(complete_bipartite(2)) is None

    def test_starved_pair(self):
        b = Bipartite.from_edges(2, 2, [(0, 0), (1, 0)])
        s = hall_violator(b)
        assert s == {0, 1}
        neighborhood = {w for u in s for w in b.adj[u]}
        assert len(neighborhood) < len(s)

    def test_unequal_sides_rejected(self):
        with pytest.raises(MatchingError):
            hall_violator(Bipartite.from_edges(2, 3, [(0, 0)]))

    def test_transport_bipartite_always_matchable(self):
        g = gen_cocktail(3)
        params = detect_amply_params(g)
        h = build_transport_bipartite(g, 0, 2, params)
        assert hall_violator(h.to_bipartite()) is None


class TestKonigDecomposition:
    def test_k33(self):
        classes = konig_decomposition(complete_bipartite(3))
        assert len(classes) == 3

    def test_eight_cycle(self):
        classes = konig_decomposition(bipartite_cycle(8))
        assert len(classes) == 2

    def test_octahedron_transport_graph(self):
        g = gen_cocktail(3)
        h = build_transport_bipartite(g, 0, 2, detect_amply_params(g))
        classes = konig_decomposition(h.to_bipartite())
        assert len(classes) == 3  # beta - 1

    def test_rejects_irregular(self):
        b = Bipartite.from_edges(2, 2, [(0, 0), (0, 1), (1, 0)])
        with pytest.raises(MatchingError):
            konig_decomposition(b)

    def test_partition_invariants(self):
        for n in (2, 3, 4, 5):
            b = complete_bipartite(n)
            classes = konig_decomposition(b)
            union = set()
            for m in classes:
                assert m.is_perfect(b)
                assert not (m.edge_set() & union)
                union |= m.edge_set()
            assert union == set(b.edges())

    def test_deterministic(self):
        b = bipartite_cycle(10)
        first = [m.pairs for m in konig_decomposition(b)]
        second = [m.pairs for m in konig_decomposition(b)]
        assert first == second


class TestMatchingThroughEdge:
    def test_k22(self):
        m = matching_through_edge(complete_bipartite(2), (0, 1))
        assert m.pairs == {0: 1, 1: 0}

    def test_six_cycle_alternating_class(self):
        b = bipartite_cycle(6)
        m = matching_through_edge(b, (1, 2))
        assert m.pairs[1] == 2
        assert m.is_perfect(b)

    def test_every_edge_of_regular_graphs(self):
        for b in (complete_bipartite(4), bipartite_cycle(12)):
            for e in b.edges():
                m = matching_through_edge(b, e)
                assert m.pairs[e[0]] == e[1] and m.is_perfect(b)

    def test_h23_transport_graph_is_its_own_matching(self):
        g = gen_hamming(2, 3)
        h = build_transport_bipartite(g, 0, 1, detect_amply_params(g))
        b = h.to_bipartite()
        assert b.regular_degree() == 1
        m = matching_through_edge(b, h.z1_edge())
        assert m.edge_set() == set(b.edges())

    def test_non_edge_rejected(self):
        with pytest.raises(MatchingError):
            matching_through_edge(bipartite_cycle(6), (0, 2))


class TestDensePerfectMatching:
    def test_k22(self):
        assert dense_perfect_matching(complete_bipartite(2)).size() == 2

    def test_two_four_cycles(self):
        b = Bipartite.from_edges(
            4, 4, [(0, 0), (0, 1), (1, 0), (1, 1), (2, 2), (2, 3), (3, 2), (3, 3)]
        )
        assert dense_perfect_matching(b).is_perfect(b)

    def test_degree_precondition(self):
        b = Bipartite.from_edges(4, 4, [(i, i) for i in range(4)])
        with pytest.raises(MatchingError, match="min degree"):
            dense_perfect_matching(b)
