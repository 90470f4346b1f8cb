"""Transport-bipartite witness machinery for amply regular edges.

For an edge xy of an amply regular graph with beta > alpha >= 1, an auxiliary
(beta-1)-regular bipartite graph is built from the local structure of xy. Its
perfect matchings induce bijections N_x -> N_y whose chains bound the graph
distance, which yields an explicit cheap transport plan and hence a curvature
lower bound of 3/d. A separate dense-matching certificate pins the curvature
to (2+alpha)/d when 2*beta - alpha >= d + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .curvature import TransportPlan, lly_curvature, mu_p, plan_cost
from .graph import AmplyParams, AmplyViolation, Graph, detect_amply_params, edge_partition
from .matching import (
    Bipartite,
    Matching,
    dense_perfect_matching,
    konig_decomposition,
    matching_through_edge,
)

# edge class indices (1-based, matching the construction below)
CLASS_NAMES = {
    1: "Nx-Ny host edges",
    2: "Nx-Delta' host edges",
    3: "Delta-Ny host edges",
    4: "Delta diagonal",
    5: "Delta-Delta' host edges",
    6: "x-copy to Delta'",
    7: "Delta to x'-copy",
    8: "x-copy to x'-copy",
}


class WitnessError(ValueError):
    """Unmet witness hypothesis or a failed internal certificate."""


def _require_params(g: Graph, params: Optional[AmplyParams]) -> AmplyParams:
    if params is None:
        detected = detect_amply_params(g)
        if isinstance(detected, AmplyViolation):
            raise WitnessError(f"graph is not amply regular: {detected}")
        params = detected
    return params


@dataclass(frozen=True)
class TransportBipartite:
    """The auxiliary bipartite graph of a host edge xy.

    Side layout (identical on both sides): indices [0, p) are N_x (resp. N_y)
    vertices in sorted host order, [p, p+alpha) are the common neighbors
    z_1..z_alpha (resp. their primed copies) in sorted host order, and
    [p+alpha, p+alpha+delta-1) are synthetic copies of x (resp. x'), where
    delta = beta - alpha. Right index i of a z/x-copy is the primed twin of
    left index i.
    """

    x: int
    y: int
    d: int
    alpha: int
    beta: int
    nx: tuple[int, ...]
    ny: tuple[int, ...]
    delta: tuple[int, ...]
    num_copies: int
    edge_classes: tuple[tuple[tuple[int, int], ...], ...]  # classes 1..8

    @property
    def side_size(self) -> int:
        return len(self.nx) + len(self.delta) + self.num_copies

    def all_edges(self) -> list[tuple[int, int]]:
        return sorted(e for cls in self.edge_classes for e in cls)

    def to_bipartite(self) -> Bipartite:
        return Bipartite.from_edges(self.side_size, self.side_size, self.all_edges())

    def z1_edge(self) -> tuple[int, int]:
        """The diagonal edge z_1 z_1' (z_1 = smallest host index in Delta)."""
        p = len(self.nx)
        return (p, p)

    def left_name(self, i: int) -> str:
        p, a = len(self.nx), len(self.delta)
        if i < p:
            return f"v{self.nx[i]}"
        if i < p + a:
            return f"z{self.delta[i - p]}"
        return f"x_copy{i - p - a + 1}"

    def right_name(self, i: int) -> str:
        p, a = len(self.ny), len(self.delta)
        if i < p:
            return f"w{self.ny[i]}"
        if i < p + a:
            return f"z{self.delta[i - p]}'"
        return f"x_copy{i - p - a + 1}'"


@dataclass(frozen=True)
class ReachableChain:
    """Matched-edge chain from v0 in N_x to w0 in N_y.

    ``interior`` holds the left indices of the traversed z / x-copy vertices;
    rho = 1 + len(interior) counts the chain's left-side members, and k counts
    the synthetic x-copies among them.
    """

    v0: int  # host vertex in N_x
    w0: int  # host vertex in N_y
    interior: tuple[int, ...]  # left indices in the auxiliary graph
    rho: int
    k: int


@dataclass(frozen=True)
class RegularityCheck:
    ok: bool
    expected: int
    left_degrees: tuple[int, ...]
    right_degrees: tuple[int, ...]
    offender: Optional[str] = None


@dataclass(frozen=True)
class ChainRecord:
    """Distance comparison for one chain: pass iff d(v0, w0) <= rho - k."""

    v0: int
    w0: int
    distance: int
    rho: int
    k: int
    ok: bool


def build_transport_bipartite(
    g: Graph, x: int, y: int, params: Optional[AmplyParams] = None
) -> TransportBipartite:
    """Construct the auxiliary bipartite graph of edge xy.

    Requires detected parameters with beta present and beta > alpha >= 1.
    Common neighbors are indexed in sorted host order, which fixes z_1.
    """
    params = _require_params(g, params)
    if params.beta is None:
        raise WitnessError("no distance-2 pair: beta is undefined")
    if not (params.beta > params.alpha >= 1):
        raise WitnessError(
            f"construction requires beta > alpha >= 1, got alpha={params.alpha}, beta={params.beta}"
        )
    part = edge_partition(g, x, y)
    p = len(part.nx)
    a = params.alpha
    copies = params.beta - params.alpha - 1
    assert len(part.delta) == a and len(part.ny) == p
    classes: list[list[tuple[int, int]]] = [[] for _ in range(8)]
    for i, v in enumerate(part.nx):
        for j, w in enumerate(part.ny):
            if g.is_edge(v, w):
                classes[0].append((i, j))  # E1
        for j, z in enumerate(part.delta):
            if g.is_edge(v, z):
                classes[1].append((i, p + j))  # E2
    for i, z in enumerate(part.delta):
        for j, w in enumerate(part.ny):
            if g.is_edge(z, w):
                classes[2].append((p + i, j))  # E3
        classes[3].append((p + i, p + i))  # E4
        for j, z2 in enumerate(part.delta):
            if i != j and g.is_edge(z, z2):
                classes[4].append((p + i, p + j))  # E5
    for i in range(copies):
        for j in range(a):
            classes[5].append((p + a + i, p + j))  # E6
            classes[6].append((p + j, p + a + i))  # E7
        for j in range(copies):
            classes[7].append((p + a + i, p + a + j))  # E8
    return TransportBipartite(
        x=x,
        y=y,
        d=params.d,
        alpha=params.alpha,
        beta=params.beta,
        nx=part.nx,
        ny=part.ny,
        delta=part.delta,
        num_copies=copies,
        edge_classes=tuple(tuple(c) for c in classes),
    )


def check_h_regular(h: TransportBipartite) -> RegularityCheck:
    """Verify that every auxiliary vertex has degree exactly beta - 1."""
    size = h.side_size
    left = [0] * size
    right = [0] * size
    for l, r in h.all_edges():
        left[l] += 1
        right[r] += 1
    expected = h.beta - 1
    offender = None
    for i in range(size):
        if left[i] != expected:
            offender = f"left {h.left_name(i)} has degree {left[i]}"
            break
        if right[i] != expected:
            offender = f"right {h.right_name(i)} has degree {right[i]}"
            break
    return RegularityCheck(
        ok=offender is None,
        expected=expected,
        left_degrees=tuple(left),
        right_degrees=tuple(right),
        offender=offender,
    )


def reachable_map(h: TransportBipartite, m: Matching) -> list[ReachableChain]:
    """Follow matched edges from every N_x vertex until it lands in N_y.

    A right-side z/x-copy at index i continues through its unprimed left twin
    at the same index. The induced map N_x -> N_y is verified to be a
    bijection.
    """
    size = h.side_size
    if len(m.pairs) != size:
        raise WitnessError("reachable_map requires a perfect matching")
    p = len(h.nx)
    chains: list[ReachableChain] = []
    for v_idx in range(p):
        interior: list[int] = []
        current = m.pairs[v_idx]
        while current >= p:
            t = current  # primed twin shares the index
            if t in interior or len(interior) > size:
                raise WitnessError("internal error: chain revisits a vertex")
            interior.append(t)
            current = m.pairs[t]
        k = sum(1 for t in interior if t >= p + len(h.delta))
        chains.append(
            ReachableChain(
                v0=h.nx[v_idx],
                w0=h.ny[current],
                interior=tuple(interior),
                rho=1 + len(interior),
                k=k,
            )
        )
    targets = [c.w0 for c in chains]
    if sorted(targets) != sorted(h.ny):
        raise WitnessError("internal error: chain map is not a bijection onto N_y")
    return chains


def verify_lemma_3_3(
    g: Graph, h: TransportBipartite, m: Matching
) -> list[ChainRecord]:
    """Compare host distance against rho - k for every chain of ``m``."""
    records = []
    for c in reachable_map(h, m):
        dist = g.distance(c.v0, c.w0)
        if dist is None:
            raise WitnessError("internal error: chain endpoints disconnected")
        records.append(
            ChainRecord(
                v0=c.v0, w0=c.w0, distance=dist, rho=c.rho, k=c.k,
                ok=dist <= c.rho - c.k,
            )
        )
    return records


def build_pi0(
    g: Graph, h: TransportBipartite, m: Matching
) -> TransportPlan:
    """The explicit transport plan induced by a matching covering z_1 z_1'.

    Mass 1/(d+1) stays put on every common neighbor and on x and y; each
    N_x vertex ships its mass to its chain partner in N_y. Marginals are
    validated exactly against the idleness-1/(d+1) measures.
    """
    z1l, z1r = h.z1_edge()
    if m.pairs.get(z1l) != z1r:
        raise WitnessError("matching does not contain the z1 z1' edge")
    d = h.d
    unit = Fraction(1, d + 1)
    entries: dict[tuple[int, int], Fraction] = {}
    for v in list(h.delta) + [h.x, h.y]:
        entries[(v, v)] = unit
    for c in reachable_map(h, m):
        entries[(c.v0, c.w0)] = unit
    plan = TransportPlan.from_dict(entries)
    plan.validate_marginals(mu_p(g, h.x, unit), mu_p(g, h.y, unit))
    return plan


@dataclass(frozen=True)
class WitnessCertificate:
    """Full per-edge lower-bound certificate from the matching pipeline."""

    x: int
    y: int
    h: TransportBipartite
    matching: Matching
    chains: tuple[ReachableChain, ...]
    chain_records: tuple[ChainRecord, ...]
    pi0: TransportPlan
    pi0_cost: Fraction
    kappa_lb: Fraction
    kappa: Fraction


def witness_curvature_bound(
    g: Graph, x: int, y: int, params: Optional[AmplyParams] = None
) -> WitnessCertificate:
    """Curvature lower bound (d+1)/d * (1 - cost(pi0)), certified end to end.

    Builds the auxiliary graph, picks the decomposition class through
    z_1 z_1', and checks the whole chain of inequalities: regularity, chain
    distance bounds, the sum bound on chain lengths, the plan cost bound
    (d-2)/(d+1), kappa_lb >= 3/d, and kappa_lb <= the exact curvature.
    """
    params = _require_params(g, params)
    h = build_transport_bipartite(g, x, y, params)
    reg = check_h_regular(h)
    if not reg.ok:
        raise WitnessError(f"auxiliary graph is not (beta-1)-regular: {reg.offender}")
    m = matching_through_edge(h.to_bipartite(), h.z1_edge())
    chains = tuple(reachable_map(h, m))
    records = tuple(verify_lemma_3_3(g, h, m))
    if not all(r.ok for r in records):
        bad = next(r for r in records if not r.ok)
        raise WitnessError(f"chain distance bound failed: {bad}")
    d = params.d
    sum_rho = sum(c.rho for c in chains)
    k_total = sum(c.k for c in chains)
    if sum_rho > d + k_total - 2:
        raise WitnessError(
            f"chain length sum {sum_rho} exceeds d + k - 2 = {d + k_total - 2}"
        )
    pi0 = build_pi0(g, h, m)
    cost = plan_cost(g, pi0)
    if cost > Fraction(d - 2, d + 1):
        raise WitnessError(f"plan cost {cost} exceeds (d-2)/(d+1)")
    kappa_lb = Fraction(d + 1, d) * (1 - cost)
    if kappa_lb < Fraction(3, d):
        raise WitnessError(f"lower bound {kappa_lb} fell below 3/d")
    kappa = lly_curvature(g, x, y)
    if kappa_lb > kappa:
        raise WitnessError(f"lower bound {kappa_lb} exceeds exact curvature {kappa}")
    return WitnessCertificate(
        x=x, y=y, h=h, matching=m, chains=chains, chain_records=records,
        pi0=pi0, pi0_cost=cost, kappa_lb=kappa_lb, kappa=kappa,
    )


@dataclass(frozen=True)
class DenseMatchCertificate:
    """Certificate that kappa = (2+alpha)/d via a perfect matching of the N_x-N_y graph."""

    x: int
    y: int
    kappa: Fraction
    bipartite: Bipartite
    matching: Matching
    min_degree: int


def prop_3_1_certificate(
    g: Graph, x: int, y: int, params: Optional[AmplyParams] = None
) -> DenseMatchCertificate:
    """Exact-curvature certificate for the regime 2*beta - alpha >= d + 1.

    Builds the bipartite graph of host edges between N_x and N_y, checks the
    dense-matching degree condition, extracts a perfect matching, and asserts
    kappa = (2+alpha)/d against the exact curvature. alpha = 0 is allowed.
    """
    params = _require_params(g, params)
    if params.beta is None:
        raise WitnessError("no distance-2 pair: beta is undefined")
    if 2 * params.beta - params.alpha < params.d + 1:
        raise WitnessError(
            f"requires 2*beta - alpha >= d + 1, got "
            f"2*{params.beta} - {params.alpha} < {params.d} + 1"
        )
    part = edge_partition(g, x, y)
    p = len(part.nx)
    edges = [
        (i, j)
        for i, v in enumerate(part.nx)
        for j, w in enumerate(part.ny)
        if g.is_edge(v, w)
    ]
    b = Bipartite.from_edges(p, p, edges)
    if p == 0:
        min_deg = 0
        m = Matching({})
    else:
        min_deg = min(min(len(a) for a in b.adj), min(b.right_degrees()))
        m = dense_perfect_matching(b)
    kappa = Fraction(2 + params.alpha, params.d)
    exact = lly_curvature(g, x, y)
    if exact != kappa:
        raise WitnessError(f"exact curvature {exact} differs from (2+alpha)/d = {kappa}")
    return DenseMatchCertificate(
        x=x, y=y, kappa=kappa, bipartite=b, matching=m, min_degree=min_deg
    )
