"""Shared fixtures and independent oracles for the test suite.

Oracles here deliberately avoid the package's own solvers: brute-force
bijection enumeration for regular-edge transport, networkx BFS for distances,
and the closed-form strongly-regular eigenvalues for spectra.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations
from math import sqrt

import networkx as nx
import pytest

from arcurv import Graph


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_networkx(h: nx.Graph) -> Graph:
    mapping = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph(h.number_of_nodes(), [(mapping[u], mapping[v]) for u, v in h.edges()])


def brute_regular_wasserstein(g: Graph, x: int, y: int) -> Fraction:
    """Minimum over all bijections between closed neighborhoods, by enumeration.

    Valid for regular graphs at idleness 1/(d+1); feasible for d + 1 <= 8.
    """
    d = g.regular_degree()
    assert d is not None and d + 1 <= 8
    bx = sorted((x,) + g.neighbors(x))
    by = sorted((y,) + g.neighbors(y))
    best = None
    for perm in permutations(range(d + 1)):
        total = 0
        for i, j in enumerate(perm):
            dist = g.distance(bx[i], by[j])
            assert dist is not None
            total += dist
        if best is None or total < best:
            best = total
    return Fraction(best, d + 1)


def srg_eigenvalues(n: int, d: int, alpha: int, beta: int) -> tuple[float, float, float]:
    """Closed-form strongly-regular eigenvalues (r, s, d), r > s."""
    disc = sqrt((alpha - beta) ** 2 + 4 * (d - beta))
    r = ((alpha - beta) + disc) / 2
    s = ((alpha - beta) - disc) / 2
    return r, s, float(d)


def random_connected_graph(seed: int, max_n: int = 16) -> Graph:
    """Random spanning tree plus extra edges; always connected."""
    rng = random.Random(seed)
    n = rng.randint(2, max_n)
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    extra = rng.randint(0, n)
    for _ in range(extra):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return Graph(n, sorted(edges))


def random_connected_regular_graph(seed: int, max_n: int = 16) -> Graph:
    """Connected random d-regular graph via networkx, retrying degenerate draws."""
    rng = random.Random(seed)
    while True:
        n = rng.randint(4, max_n)
        d = rng.randint(2, min(6, n - 1))
        if (n * d) % 2 == 1:
            continue
        h = nx.random_regular_graph(d, n, seed=rng.randrange(2**31))
        if nx.is_connected(h):
            return from_networkx(h)


@pytest.fixture
def petersen() -> Graph:
    return from_networkx(nx.petersen_graph())
