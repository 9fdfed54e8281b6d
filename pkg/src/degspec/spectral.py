"""Degree-adjacency matrices and their spectra.

The degree-adjacency matrix carries entry 1/sqrt(deg(u) deg(v)) on every
edge (equivalently D^{-1/2} A D^{-1/2}); its largest eigenvalue is 1 with
eigenvector (sqrt of the degrees). Eigenvalues are computed with a cyclic
Jacobi rotation scheme, which is simple, deterministic, and accurate for
the dense desk-scale matrices handled here (n up to a few hundred).
"""

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph, connected_components

KIND_DEGREE_ADJACENCY = "degree-adjacency"
KIND_ADJACENCY = "adjacency"

#: Two computed eigenvalues are treated as equal when their gap is below
#: this factor times max(1, |anchor|).
CLUSTER_TOL = 1e-8


@dataclass(frozen=True)
class Spectrum:
    """All eigenvalues of one matrix, sorted descending."""

    values: tuple[float, ...]
    kind: str

    def multiplicity(self, x: float, tol: float = CLUSTER_TOL) -> int:
        """Number of eigenvalues within the clustering tolerance of ``x``."""
        scale = tol * max(1.0, abs(x))
        return sum(1 for v in self.values if abs(v - x) <= scale)

    def clustered(self, tol: float = CLUSTER_TOL) -> list[tuple[float, int]]:
        return cluster_values(self.values, tol)


def cluster_values(values, tol: float = CLUSTER_TOL) -> list[tuple[float, int]]:
    """Group a descending value sequence into (mean, multiplicity) clusters.

    A value joins the current cluster when its gap to the cluster anchor
    (the cluster's largest member) is at most ``tol * max(1, |anchor|)``.
    """
    vals = list(values)
    if not vals:
        return []
    clusters: list[list[float]] = [[vals[0]]]
    for v in vals[1:]:
        anchor = clusters[-1][0]
        if anchor - v <= tol * max(1.0, abs(anchor)):
            clusters[-1].append(v)
        else:
            clusters.append([v])
    return [(sum(c) / len(c), len(c)) for c in clusters]


def degree_adjacency(g: Graph) -> np.ndarray:
    """Dense degree-adjacency matrix of ``g``.

    Raises ValueError when the graph has an isolated vertex (the entries
    would divide by zero).
    """
    for i, d in enumerate(g.degrees):
        if d == 0:
            raise ValueError(f"vertex {i} is isolated; the degree-adjacency matrix is undefined")
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        w = 1.0 / math.sqrt(g.degrees[u] * g.degrees[v])
        a[u, v] = w
        a[v, u] = w
    return a


def standard_adjacency(g: Graph) -> np.ndarray:
    """Dense 0/1 adjacency matrix of ``g``."""
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = 1.0
        a[v, u] = 1.0
    return a


def perron_vector(g: Graph) -> np.ndarray:
    """The vector of square roots of the degrees (fixed by the degree-adjacency matrix)."""
    return np.sqrt(np.array(g.degrees, dtype=float))


def jacobi_eigensystem(mat, tol_factor: float = 1e-12, max_sweeps: int = 100):
    """Eigen-decomposition of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps rotate every upper-triangular pair (p, q) in row-major order and
    stop once the off-diagonal Frobenius norm drops below
    ``tol_factor * ||A||_F``. Returns ``(values, vectors)`` with eigenvalues
    sorted descending and eigenvectors in the matching columns.
    """
    a = np.array(mat, dtype=float)
    n = a.shape[0]
    v = np.eye(n)
    target = tol_factor * float(np.linalg.norm(a))
    converged = False
    for _ in range(max_sweeps):
        off = math.sqrt(2.0 * float(np.sum(np.triu(a, 1) ** 2)))
        if off <= target:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.hypot(1.0, tau))
                else:
                    t = 1.0 / (tau - math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                ap = a[p, :].copy()
                aq = a[q, :].copy()
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                # the rotation annihilates this pair exactly
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    if not converged:
        off = math.sqrt(2.0 * float(np.sum(np.triu(a, 1) ** 2)))
        if off > target:
            raise RuntimeError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")
    values = np.diag(a).copy()
    order = np.argsort(-values, kind="stable")
    return values[order], v[:, order]


def eigenvalues(mat, kind: str = KIND_DEGREE_ADJACENCY) -> Spectrum:
    """All eigenvalues of a symmetric matrix, sorted descending.

    Raises ValueError for non-square or non-symmetric input.
    """
    a = np.asarray(mat, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("eigenvalues need a square matrix")
    scale = max(1.0, float(np.abs(a).max()) if a.size else 1.0)
    if float(np.abs(a - a.T).max()) > 1e-12 * scale:
        raise ValueError("eigenvalues need a symmetric matrix")
    vals, _ = jacobi_eigensystem(a)
    return Spectrum(values=tuple(float(x) for x in vals), kind=kind)


def standard_eigenvalues(g: Graph) -> Spectrum:
    """Eigenvalues of the 0/1 adjacency matrix, sorted descending."""
    return eigenvalues(standard_adjacency(g), kind=KIND_ADJACENCY)


def char_poly_from_spectrum(spectrum) -> np.ndarray:
    """Coefficients c_1..c_n of the monic characteristic polynomial.

    c_r is (-1)^r times the r-th elementary symmetric polynomial of the
    eigenvalues; the coefficients are assembled by multiplying out the
    linear factors one root at a time.
    """
    values = _spectrum_values(spectrum)
    coeffs = np.array([1.0])
    for lam in values:
        coeffs = np.convolve(coeffs, np.array([1.0, -lam]))
    return coeffs[1:]


def _spectrum_values(spectrum) -> tuple[float, ...]:
    if isinstance(spectrum, Spectrum):
        return spectrum.values
    return tuple(float(x) for x in spectrum)


def structural_coefficients(g: Graph) -> tuple[float, float, float]:
    """First three characteristic-polynomial coefficients from edge/triangle sums.

    c1 is 0 (zero diagonal), c2 is minus the sum of 1/(deg(u) deg(v)) over
    edges, and c3 sums -2/(deg(u) deg(v) deg(w)) over induced triangles.
    """
    deg = g.degrees
    for i, d in enumerate(deg):
        if d == 0:
            raise ValueError(f"vertex {i} is isolated; coefficients are undefined")
    c2 = -sum(1.0 / (deg[u] * deg[v]) for u, v in g.edges)
    c3 = 0.0
    for u, v in g.edges:
        for w in g.adjacency[u] & g.adjacency[v]:
            if w > v:  # each triangle once, with u < v < w
                c3 += -2.0 / (deg[u] * deg[v] * deg[w])
    return 0.0, c2, c3


def _path_recurrence_polynomials(n: int) -> list[np.ndarray]:
    """Ascending-coefficient sequence behind the path characteristic polynomial.

    Seeds are -x and x^2 - 1/2; each next polynomial is -x times the
    previous minus a quarter of the one before.
    """
    polys = [None, None, np.array([0.0, -1.0]), np.array([-0.5, 0.0, 1.0])]
    for _ in range(4, n + 1):
        prev, prev2 = polys[-1], polys[-2]
        nxt = np.zeros(len(prev) + 1)
        nxt[1:] -= prev  # multiply by x, negate
        nxt[: len(prev2)] -= 0.25 * prev2
        polys.append(nxt)
    return polys


def path_char_poly(n: int) -> np.ndarray:
    """Characteristic-polynomial coefficients c_1..c_n of the n-vertex path.

    Uses the three-term recurrence for the path's degree-adjacency matrix.
    The raw recurrence yields the polynomial up to a global sign (the sign
    alternates with the parity of n); the result is normalized to monic so
    it matches ``char_poly_from_spectrum``.
    """
    if n < 3:
        raise ValueError(f"path characteristic polynomial needs n >= 3, got {n}")
    polys = _path_recurrence_polynomials(n)
    psi = np.zeros(n + 1)
    psi[1:] += polys[n]  # x * phi_n
    psi[: len(polys[n - 1])] += 0.5 * polys[n - 1]
    if psi[-1] < 0:
        psi = -psi
    # psi is ascending and monic; return c_1..c_n in descending-power order
    return psi[:-1][::-1].copy()


def det_identity_residual(g: Graph, lam: float) -> float:
    """Mismatch of the determinant identity linking both matrix forms at ``lam``.

    Compares det(M - lam I) times the product of the degrees (M the
    degree-adjacency matrix) against det(A - lam D). The absolute
    difference is normalized by max(1, |lhs|, |rhs|): the raw difference
    scales with the product of the degrees, which reaches 1e18 already for
    dense 16-vertex graphs, far beyond float64 absolute accuracy.
    """
    dd = degree_adjacency(g)
    n = g.n
    deg = np.array(g.degrees, dtype=float)
    lhs = float(np.linalg.det(dd - lam * np.eye(n))) * float(np.prod(deg))
    rhs = float(np.linalg.det(standard_adjacency(g) - lam * np.diag(deg)))
    return abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs))


def weight_regular(g: Graph) -> float | None:
    """Common edge weight 1/sqrt(deg(u) deg(v)) if all edges agree, else None.

    Regular graphs and semi-regular bipartite graphs are the standard
    examples. Requires at least one edge and no isolated vertex.
    """
    if g.m == 0:
        raise ValueError("weight regularity needs at least one edge")
    for i, d in enumerate(g.degrees):
        if d == 0:
            raise ValueError(f"vertex {i} is isolated; edge weights are undefined")
    weights = [1.0 / math.sqrt(g.degrees[u] * g.degrees[v]) for u, v in g.edges]
    if max(weights) - min(weights) <= 1e-12:
        return sum(weights) / len(weights)
    return None


def component_count_from_spectrum(g: Graph) -> int:
    """Multiplicity of the eigenvalue 1 of the degree-adjacency matrix.

    For graphs without isolated vertices this equals the number of
    connected components.
    """
    return eigenvalues(degree_adjacency(g)).multiplicity(1.0)


def assert_connected(g: Graph, what: str) -> None:
    comps = connected_components(g)
    if len(comps) != 1:
        raise ValueError(f"{what} needs a connected graph; found {len(comps)} components")
