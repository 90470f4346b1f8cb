"""Immutable simple graphs with cached BFS metrics and amply-regular detection."""

from __future__ import annotations

import threading
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union


class GraphError(ValueError):
    """Malformed graph input or an unmet structural precondition."""


class Graph:
    """Simple undirected graph on vertices 0..n-1, immutable after construction.

    Adjacency is stored as sorted tuples. BFS distances are computed lazily
    per source and cached under a lock, so a shared instance is safe for
    concurrent readers. ``labels`` is an optional side table of original
    vertex labels (e.g. Hamming tuples) used only for reporting.
    """

    __slots__ = ("n", "_adj", "labels", "_dist_cache", "_lock", "_connected")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Optional[Sequence[str]] = None,
    ):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop edge at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in adj)
        if labels is not None and len(labels) != n:
            raise GraphError("label table size does not match vertex count")
        self.labels = tuple(labels) if labels is not None else None
        self._dist_cache: dict[int, tuple[int, ...]] = {}
        self._lock = threading.Lock()
        self._connected: Optional[bool] = None

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def num_edges(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in self._adj[u] if u < v]

    def is_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def regular_degree(self) -> Optional[int]:
        """Common degree if the graph is regular, else None."""
        if self.n == 0:
            return None
        degs = {len(a) for a in self._adj}
        return degs.pop() if len(degs) == 1 else None

    def distances_from(self, source: int) -> tuple[int, ...]:
        """BFS distance vector from ``source``; -1 marks unreachable vertices."""
        if not (0 <= source < self.n):
            raise GraphError(f"vertex {source} out of range")
        with self._lock:
            cached = self._dist_cache.get(source)
        if cached is not None:
            return cached
        dist = [-1] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self._adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        result = tuple(dist)
        with self._lock:
            self._dist_cache[source] = result
        return result

    def distance(self, u: int, v: int) -> Optional[int]:
        """Shortest-path length, or None if u and v are in different components."""
        d = self.distances_from(u)[v]
        return None if d < 0 else d

    def is_connected(self) -> bool:
        if self._connected is None:
            self._connected = self.n <= 1 or all(
                d >= 0 for d in self.distances_from(0)
            )
        return self._connected

    def warm_distance_cache(self) -> None:
        """Pre-populate all BFS rows; useful before fanning out parallel readers."""
        for v in range(self.n):
            self.distances_from(v)

    def diameter(self) -> int:
        if not self.is_connected():
            raise GraphError("diameter undefined for disconnected graph")
        return max(max(self.distances_from(v)) for v in range(self.n))

    def girth(self) -> Optional[int]:
        """Length of a shortest cycle, or None for forests."""
        best: Optional[int] = None
        for root in range(self.n):
            dist = [-1] * self.n
            parent = [-1] * self.n
            dist[root] = 0
            queue = deque([root])
            while queue:
                u = queue.popleft()
                if best is not None and 2 * dist[u] >= best:
                    continue
                for w in self._adj[u]:
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        queue.append(w)
                    elif w != parent[u]:
                        cycle = dist[u] + dist[w] + 1
                        if best is None or cycle < best:
                            best = cycle
        return best

    def common_neighbors(self, u: int, v: int) -> list[int]:
        if u == v:
            raise GraphError("common_neighbors requires distinct vertices")
        su, sv = set(self._adj[u]), set(self._adj[v])
        return sorted(su & sv)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._adj == other._adj
        )

    def __hash__(self):
        return hash((self.n, self._adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges()})"


@dataclass(frozen=True)
class AmplyParams:
    """Detected amply-regular parameters.

    ``beta`` is None when the graph has no pair at distance 2 (diameter <= 1),
    in which case clause (ii) of the defining condition is vacuous. ``girth``
    is None for forests.
    """

    n: int
    d: int
    alpha: int
    beta: Optional[int]
    girth: Optional[int]
    connected: bool = True

    def as_tuple(self) -> tuple:
        return (self.n, self.d, self.alpha, self.beta)


@dataclass(frozen=True)
class AmplyViolation:
    """Witness that a graph is not amply regular.

    kind is one of "not-regular", "alpha", "beta". ``pair`` is the first
    offending vertex pair in scan order; ``found``/``expected`` are the two
    conflicting counts (degrees for the not-regular case).
    """

    kind: str
    pair: tuple[int, int]
    found: int
    expected: int


@dataclass(frozen=True)
class EdgeNeighborhoodPartition:
    """The three disjoint neighbor sets of an edge xy.

    delta = common neighbors, nx = neighbors of x outside y's closed
    neighborhood, ny symmetrically.
    """

    x: int
    y: int
    delta: tuple[int, ...]
    nx: tuple[int, ...]
    ny: tuple[int, ...]


DetectResult = Union[AmplyParams, AmplyViolation]


def load_edge_list(text: Union[str, Iterable[str]]) -> Graph:
    """Parse the "n m" / "u v" edge-list format.

    Lines starting with '#' and blank lines are ignored. Duplicate edges are
    collapsed. Errors carry 1-based line numbers.
    """
    if isinstance(text, str):
        lines = text.splitlines()
    else:
        lines = [line.rstrip("\n") for line in text]
    header: Optional[tuple[int, int]] = None
    edges: list[tuple[int, int]] = []
    n = 0
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise GraphError(f"line {lineno}: expected header 'n m', got {raw!r}")
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphError(f"line {lineno}: non-integer header {raw!r}") from None
            if n < 0 or m < 0:
                raise GraphError(f"line {lineno}: negative counts in header")
            header = (n, m)
            continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected edge 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer edge {raw!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"line {lineno}: index out of range in edge ({u}, {v})")
        if u == v:
            raise GraphError(f"line {lineno}: loop edge at vertex {u}")
        edges.append((u, v))
    if header is None:
        raise GraphError("empty input: missing 'n m' header")
    if len(edges) != header[1]:
        raise GraphError(
            f"header declares {header[1]} edges but {len(edges)} edge lines found"
        )
    return Graph(n, edges)


def dump_edge_list(g: Graph) -> str:
    """Inverse of load_edge_list; deterministic sorted edge order."""
    lines = [f"{g.n} {g.num_edges()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def detect_amply_params(g: Graph) -> DetectResult:
    """Check amply regularity and return parameters or the first violation.

    Disconnected input is a hard error; a violation is a value.
    """
    if g.n == 0:
        raise GraphError("empty graph")
    if not g.is_connected():
        raise GraphError("detect_amply_params requires a connected graph")
    d = g.degree(0)
    for v in range(1, g.n):
        if g.degree(v) != d:
            return AmplyViolation("not-regular", (0, v), g.degree(v), d)
    alpha: Optional[int] = None
    alpha_pair: Optional[tuple[int, int]] = None
    for u, v in g.edges():
        c = len(g.common_neighbors(u, v))
        if alpha is None:
            alpha, alpha_pair = c, (u, v)
        elif c != alpha:
            return AmplyViolation("alpha", (u, v), c, alpha)
    beta: Optional[int] = None
    for u in range(g.n):
        dist = g.distances_from(u)
        for v in range(u + 1, g.n):
            if dist[v] != 2:
                continue
            c = len(g.common_neighbors(u, v))
            if beta is None:
                beta = c
            elif c != beta:
                return AmplyViolation("beta", (u, v), c, beta)
    del alpha_pair
    return AmplyParams(
        n=g.n,
        d=d,
        alpha=alpha if alpha is not None else 0,
        beta=beta,
        girth=g.girth(),
        connected=True,
    )


def edge_partition(g: Graph, x: int, y: int) -> EdgeNeighborhoodPartition:
    """Split the neighborhoods around edge xy into delta / nx / ny."""
    if not g.is_edge(x, y):
        raise GraphError(f"({x}, {y}) is not an edge")
    gx, gy = set(g.neighbors(x)), set(g.neighbors(y))
    delta = tuple(sorted(gx & gy))
    nx = tuple(sorted(gx - gy - {y}))
    ny = tuple(sorted(gy - gx - {x}))
    return EdgeNeighborhoodPartition(x=x, y=y, delta=delta, nx=nx, ny=ny)
