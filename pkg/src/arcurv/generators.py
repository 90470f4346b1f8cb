"""Deterministic constructors for the named graph families used in verification."""

from __future__ import annotations

from itertools import product

from .graph import Graph, GraphError

DEFAULT_SIZE_CAP = 100_000


def gen_hamming(p: int, q: int, size_cap: int = DEFAULT_SIZE_CAP) -> Graph:
    """Hamming graph H(p, q): p-tuples over {0..q-1}, adjacency = Hamming distance 1.

    Vertices are indexed in lexicographic tuple order; tuple labels are kept
    as a side table for reports.
    """
    if p < 1 or q < 2:
        raise GraphError(f"gen_hamming requires p >= 1, q >= 2, got ({p}, {q})")
    n = q**p
    if n > size_cap:
        raise GraphError(f"H({p},{q}) has {n} vertices, exceeding cap {size_cap}")
    tuples = list(product(range(q), repeat=p))
    index = {t: i for i, t in enumerate(tuples)}
    edges = []
    for i, t in enumerate(tuples):
        for c in range(p):
            for b in range(q):
                if b == t[c]:
                    continue
                j = index[t[:c] + (b,) + t[c + 1 :]]
                if j > i:
                    edges.append((i, j))
    labels = ["".join(str(x) for x in t) for t in tuples]
    return Graph(n, edges, labels=labels)


def gen_hypercube(k: int, size_cap: int = DEFAULT_SIZE_CAP) -> Graph:
    """k-dimensional hypercube Q_k = H(k, 2)."""
    return gen_hamming(k, 2, size_cap=size_cap)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


def gen_paley(q: int) -> Graph:
    """Paley graph on a prime q = 1 (mod 4): u ~ v iff u - v is a nonzero square.

    Prime powers are deliberately unsupported; the 9-vertex case is available
    as gen_hamming(2, 3).
    """
    if not _is_prime(q):
        raise GraphError(f"gen_paley requires a prime, got {q}")
    if q % 4 != 1:
        raise GraphError(f"gen_paley requires q = 1 (mod 4), got {q}")
    residues = {pow(a, 2, q) for a in range(1, q)}
    edges = [(u, v) for u in range(q) for v in range(u + 1, q) if (v - u) % q in residues]
    return Graph(q, edges)


def gen_shrikhande() -> Graph:
    """Shrikhande graph: Cayley graph on Z4 x Z4 with connection set {+-(1,0), +-(0,1), +-(1,1)}."""
    conn = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)]
    edges = []
    for a in range(4):
        for b in range(4):
            i = 4 * a + b
            for da, db in conn:
                j = 4 * ((a + da) % 4) + (b + db) % 4
                if j > i:
                    edges.append((i, j))
    labels = [f"{a}{b}" for a in range(4) for b in range(4)]
    return Graph(16, edges, labels=labels)


def gen_cocktail(m: int) -> Graph:
    """Cocktail-party graph K_{m x 2}: 2m vertices, 2i and 2i+1 non-adjacent."""
    if m < 2:
        raise GraphError(f"gen_cocktail requires m >= 2, got {m}")
    n = 2 * m
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if not (u // 2 == v // 2)
    ]
    return Graph(n, edges)


def gen_complete(n: int) -> Graph:
    if n < 2:
        raise GraphError(f"gen_complete requires n >= 2, got {n}")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"gen_cycle requires n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])
