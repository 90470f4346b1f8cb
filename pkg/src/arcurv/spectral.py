"""Adjacency spectra via an in-repo cyclic Jacobi eigensolver."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph

DEFAULT_SPECTRUM_CAP = 4096
COMPARISON_TOL = 1e-9


class SpectralError(ValueError):
    """Unmet spectral precondition."""


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues with the off-diagonal Frobenius residual at convergence."""

    eigenvalues: tuple[float, ...]
    n: int
    residual: float


def jacobi_eigenvalues(matrix: np.ndarray) -> tuple[np.ndarray, float]:
    """All eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps rotate every off-diagonal pair until the off-diagonal Frobenius
    norm drops below 1e-12 * n. Returns (ascending eigenvalues, residual).
    """
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    if n == 0:
        return np.empty(0), 0.0
    if not np.allclose(a, a.T):
        raise SpectralError("jacobi_eigenvalues requires a symmetric matrix")
    target = 1e-12 * max(n, 1)

    def off_norm() -> float:
        off = a - np.diag(np.diag(a))
        return float(np.linalg.norm(off))

    for _ in range(100):  # sweeps; Jacobi converges quadratically
        if off_norm() < target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = a[q, p] = 0.0
    return np.sort(np.diag(a)), off_norm()


def adjacency_spectrum(g: Graph, cap: int = DEFAULT_SPECTRUM_CAP) -> Spectrum:
    """Eigenvalues of the 0/1 adjacency matrix, ascending."""
    if g.n > cap:
        raise SpectralError(f"graph size {g.n} exceeds spectrum cap {cap}")
    mat = np.zeros((g.n, g.n))
    for u in range(g.n):
        for v in g.neighbors(u):
            mat[u, v] = 1.0
    eigs, residual = jacobi_eigenvalues(mat)
    if residual >= 1e-10 * max(g.n, 1):
        raise SpectralError(f"Jacobi residual {residual} did not converge")
    if abs(float(eigs.sum())) > 1e-8 * max(g.n, 1):
        raise SpectralError("eigenvalue sum drifted from trace 0")
    return Spectrum(eigenvalues=tuple(float(e) for e in eigs), n=g.n, residual=residual)


def second_largest(g: Graph, cap: int = DEFAULT_SPECTRUM_CAP) -> float:
    """sigma_{n-1}: the second-largest adjacency eigenvalue of a connected regular graph."""
    if not g.is_connected():
        raise SpectralError("second_largest requires a connected graph")
    if g.regular_degree() is None:
        raise SpectralError("second_largest requires a regular graph")
    if g.n < 2:
        raise SpectralError("second_largest requires at least 2 vertices")
    return adjacency_spectrum(g, cap=cap).eigenvalues[-2]


def lambda1(g: Graph, cap: int = DEFAULT_SPECTRUM_CAP) -> float:
    """First nonzero normalized-Laplacian eigenvalue: 1 - sigma_{n-1}/d on regular graphs."""
    d = g.regular_degree()
    if d is None or d == 0:
        raise SpectralError("lambda1 requires a regular graph with d >= 1")
    return 1.0 - second_largest(g, cap=cap) / d
