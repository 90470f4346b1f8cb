"""Bipartite matching: Hopcroft-Karp, Hall certificates, Konig decomposition."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

_INF = float("inf")


class MatchingError(ValueError):
    """Unmet matching precondition or an internal consistency failure."""


@dataclass(frozen=True)
class Bipartite:
    """Bipartite graph; edges stored as per-left-vertex sorted right-neighbor tuples."""

    left_n: int
    right_n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adj) != self.left_n:
            raise MatchingError("adjacency size does not match left side")
        for u, nbrs in enumerate(self.adj):
            if len(set(nbrs)) != len(nbrs):
                raise MatchingError(f"duplicate edges at left vertex {u}")
            for w in nbrs:
                if not 0 <= w < self.right_n:
                    raise MatchingError(f"right index {w} out of range at left {u}")

    @staticmethod
    def from_edges(left_n: int, right_n: int, edges) -> "Bipartite":
        sets: list[set[int]] = [set() for _ in range(left_n)]
        for u, w in edges:
            if not 0 <= u < left_n:
                raise MatchingError(f"left index {u} out of range")
            sets[u].add(w)
        return Bipartite(left_n, right_n, tuple(tuple(sorted(s)) for s in sets))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, w) for u in range(self.left_n) for w in self.adj[u]]

    def right_degrees(self) -> list[int]:
        degs = [0] * self.right_n
        for u in range(self.left_n):
            for w in self.adj[u]:
                degs[w] += 1
        return degs

    def regular_degree(self) -> Optional[int]:
        """Common degree if k-regular with equal sides, else None."""
        if self.left_n != self.right_n or self.left_n == 0:
            return None
        left = {len(a) for a in self.adj}
        right = set(self.right_degrees())
        if len(left) == 1 and left == right:
            return left.pop()
        return None


@dataclass
class Matching:
    """Partial injection left -> right; ``pairs`` maps left index to right index."""

    pairs: dict[int, int] = field(default_factory=dict)

    def size(self) -> int:
        return len(self.pairs)

    def is_perfect(self, b: Bipartite) -> bool:
        return b.left_n == b.right_n and len(self.pairs) == b.left_n

    def validate(self, b: Bipartite) -> None:
        seen_right = set()
        for u, w in self.pairs.items():
            if w not in b.adj[u]:
                raise MatchingError(f"matched pair ({u}, {w}) is not an edge")
            if w in seen_right:
                raise MatchingError(f"right vertex {w} covered twice")
            seen_right.add(w)

    def edge_set(self) -> set[tuple[int, int]]:
        return set(self.pairs.items())


def max_matching(b: Bipartite) -> Matching:
    """Maximum-cardinality matching via Hopcroft-Karp; deterministic in input order."""
    match_l = [-1] * b.left_n
    match_r = [-1] * b.right_n
    dist = [0.0] * b.left_n

    def bfs() -> bool:
        queue = deque()
        for u in range(b.left_n):
            if match_l[u] < 0:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        found = False
        while queue:
            u = queue.popleft()
            for w in b.adj[u]:
                nxt = match_r[w]
                if nxt < 0:
                    found = True
                elif dist[nxt] == _INF:
                    dist[nxt] = dist[u] + 1
                    queue.append(nxt)
        return found

    def dfs(u: int) -> bool:
        for w in b.adj[u]:
            nxt = match_r[w]
            if nxt < 0 or (dist[nxt] == dist[u] + 1 and dfs(nxt)):
                match_l[u] = w
                match_r[w] = u
                return True
        dist[u] = _INF
        return False

    while bfs():
        for u in range(b.left_n):
            if match_l[u] < 0:
                dfs(u)
    m = Matching({u: w for u, w in enumerate(match_l) if w >= 0})
    m.validate(b)
    return m


def hall_violator(b: Bipartite) -> Optional[set[int]]:
    """A left set S with |Gamma(S)| < |S| when no perfect matching exists, else None.

    Built from alternating reachability out of the unmatched left vertices of
    a maximum matching.
    """
    if b.left_n != b.right_n:
        raise MatchingError("hall_violator requires equal side sizes")
    m = max_matching(b)
    if m.is_perfect(b):
        return None
    match_r = [-1] * b.right_n
    for u, w in m.pairs.items():
        match_r[w] = u
    # alternating BFS: unmatched edges left->right, matched edges right->left
    frontier = deque(u for u in range(b.left_n) if u not in m.pairs)
    seen_left = set(frontier)
    seen_right: set[int] = set()
    while frontier:
        u = frontier.popleft()
        for w in b.adj[u]:
            if w in seen_right:
                continue
            seen_right.add(w)
            nxt = match_r[w]
            if nxt >= 0 and nxt not in seen_left:
                seen_left.add(nxt)
                frontier.append(nxt)
    neighborhood = {w for u in seen_left for w in b.adj[u]}
    if len(neighborhood) >= len(seen_left):
        raise MatchingError("internal error: violator certificate failed")
    return seen_left


def _kuhn_perfect_matching(adj: list[list[int]], n: int) -> Optional[list[int]]:
    # deterministic augmenting search, scanning left vertices and neighbor
    # lists in ascending order
    match_r = [-1] * n
    match_l = [-1] * n

    def try_augment(u: int, visited: list[bool]) -> bool:
        for w in adj[u]:
            if visited[w]:
                continue
            visited[w] = True
            if match_r[w] < 0 or try_augment(match_r[w], visited):
                match_r[w] = u
                match_l[u] = w
                return True
        return False

    for u in range(n):
        if not try_augment(u, [False] * n):
            return None
    return match_l


def konig_decomposition(b: Bipartite) -> list[Matching]:
    """Partition a k-regular bipartite graph's edges into k perfect matchings.

    Each round extracts the perfect matching found by the deterministic
    augmenting search and removes it, leaving a (k-1)-regular graph. The
    output is self-checked: classes are perfect, pairwise edge-disjoint, and
    their union is exactly the edge set.
    """
    k = b.regular_degree()
    if k is None or k < 1:
        raise MatchingError("konig_decomposition requires a k-regular bipartite graph, k >= 1")
    n = b.left_n
    adj = [sorted(nbrs) for nbrs in b.adj]
    classes: list[Matching] = []
    for _ in range(k):
        match_l = _kuhn_perfect_matching(adj, n)
        if match_l is None:
            raise MatchingError("internal error: regular graph lost a perfect matching")
        m = Matching({u: w for u, w in enumerate(match_l)})
        for u, w in m.pairs.items():
            adj[u].remove(w)
        classes.append(m)
    if any(adj[u] for u in range(n)):
        raise MatchingError("internal error: leftover edges after decomposition")
    seen: set[tuple[int, int]] = set()
    for m in classes:
        m.validate(b)
        if not m.is_perfect(b):
            raise MatchingError("internal error: non-perfect class")
        es = m.edge_set()
        if es & seen:
            raise MatchingError("internal error: classes share an edge")
        seen |= es
    if seen != set(b.edges()):
        raise MatchingError("internal error: decomposition does not cover edge set")
    return classes


def matching_through_edge(b: Bipartite, e: tuple[int, int]) -> Matching:
    """Perfect matching containing edge ``e`` of a regular bipartite graph.

    The Konig decomposition partitions the edges, so exactly one class
    contains e.
    """
    u, w = e
    if not (0 <= u < b.left_n) or w not in b.adj[u]:
        raise MatchingError(f"({u}, {w}) is not an edge of the bipartite graph")
    for m in konig_decomposition(b):
        if m.pairs.get(u) == w:
            return m
    raise MatchingError("internal error: edge missing from its decomposition")


def dense_perfect_matching(b: Bipartite) -> Matching:
    """Perfect matching of a balanced bipartite graph with min degree >= n/2."""
    if b.left_n != b.right_n:
        raise MatchingError("dense_perfect_matching requires equal side sizes")
    n = b.left_n
    if n == 0:
        return Matching({})
    min_deg = min(min(len(a) for a in b.adj), min(b.right_degrees()))
    if 2 * min_deg < n:
        raise MatchingError(f"min degree {min_deg} below n/2 = {n}/2")
    m = max_matching(b)
    if not m.is_perfect(b):
        raise MatchingError("internal error: dense graph without perfect matching")
    return m
