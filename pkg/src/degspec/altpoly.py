"""Alternating polynomials on a finite eigenvalue mesh.

Given the distinct sub-Perron eigenvalues mu_1 > ... > mu_b of a connected
graph's degree-adjacency matrix, the degree-k alternating polynomial is
the polynomial of degree at most k with sup-norm at most 1 on the mesh
that maximizes its value at 1. It is unique, has degree exactly k, and
equioscillates (hits +-1 with alternating signs) at k+1 mesh points.

Two independent constructions are provided: a linear program solved by a
dense simplex, and an exhaustive search over equioscillation subsets.
Closed forms cover the linear case and the full-degree case.
"""

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .simplex import simplex_maximize
from .spectral import CLUSTER_TOL, Spectrum

#: candidate polynomials may exceed sup-norm 1 on the mesh by this much
SUP_NORM_SLACK = 1e-9

#: largest mesh the subset-enumeration construction accepts
ENUMERATION_MESH_CAP = 25


@dataclass(frozen=True)
class Mesh:
    """Strictly descending real points, all below the evaluation point 1."""

    points: tuple[float, ...]

    def __post_init__(self):
        if not self.points:
            raise ValueError("mesh needs at least one point")
        if self.points[0] >= 1.0:
            raise ValueError(f"mesh points must lie below 1, got {self.points[0]}")
        for a, b in zip(self.points, self.points[1:]):
            if a - b <= CLUSTER_TOL * max(1.0, abs(a)):
                raise ValueError(f"mesh points must descend strictly: {a} then {b}")

    @property
    def b(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class AlternatingPolynomial:
    """A degree-k mesh-constrained polynomial, ascending coefficients."""

    k: int
    coefficients: tuple[float, ...]
    value_at_1: float
    sup_norm_on_mesh: float

    def __call__(self, x):
        return polynomial_value(self.coefficients, x)


def polynomial_value(coefficients, x):
    """Evaluate an ascending-coefficient polynomial at a scalar or array."""
    return np.polyval(np.asarray(coefficients, dtype=float)[::-1], x)


def polynomial_of_matrix(coefficients, mat: np.ndarray) -> np.ndarray:
    """Evaluate an ascending-coefficient polynomial at a square matrix."""
    n = mat.shape[0]
    out = np.zeros((n, n))
    eye = np.eye(n)
    for c in reversed(list(coefficients)):
        out = out @ mat + c * eye
    return out


def mesh_from_spectrum(spectrum: Spectrum) -> Mesh:
    """Distinct eigenvalues below the simple Perron value 1.

    Eigenvalues are clustered at the standard tolerance; the top cluster
    must be the simple value 1 (a larger multiplicity means the graph is
    disconnected).
    """
    clusters = cluster_values_checked(spectrum)
    top, count = clusters[0]
    if abs(top - 1.0) > 1e-6:
        raise ValueError(f"largest eigenvalue is {top!r}, expected the Perron value 1")
    if count != 1:
        raise ValueError(
            f"eigenvalue 1 has multiplicity {count}: the graph is disconnected"
        )
    if len(clusters) == 1:
        raise ValueError("spectrum has a single distinct eigenvalue; the mesh is empty")
    return Mesh(points=tuple(rep for rep, _ in clusters[1:]))


def cluster_values_checked(spectrum: Spectrum) -> list[tuple[float, int]]:
    clusters = spectrum.clustered()
    if not clusters:
        raise ValueError("empty spectrum")
    return clusters


def alternating_polynomial_lp(mesh: Mesh, k: int) -> AlternatingPolynomial:
    """Alternating polynomial by linear programming.

    Maximizes the value at 1 over polynomials of degree at most k subject
    to -1 <= P(mu_i) <= 1 at every mesh point. The coefficients are split
    into positive and negative parts to fit the standard simplex form; the
    constant polynomial 1 is always feasible, so the program cannot be
    infeasible.
    """
    _validate_k(mesh, k)
    pts = np.array(mesh.points)
    vand = np.vander(pts, k + 1, increasing=True)
    a_ub = np.block([[vand, -vand], [-vand, vand]])
    b_ub = np.ones(2 * mesh.b)
    cost = np.concatenate([np.ones(k + 1), -np.ones(k + 1)])
    x, _ = simplex_maximize(cost, a_ub, b_ub)
    coeffs = x[: k + 1] - x[k + 1 :]
    return _finish(mesh, k, coeffs)


def alternating_polynomial_oracle(mesh: Mesh, k: int) -> AlternatingPolynomial:
    """Alternating polynomial by exhaustive equioscillation search.

    For every (k+1)-subset of mesh points and both alternating sign
    patterns, interpolate the +-1 values with a degree-k polynomial, keep
    candidates whose sup-norm on the whole mesh stays within tolerance of
    1, and return the candidate with the largest value at 1. Independent
    of the linear-programming construction.
    """
    _validate_k(mesh, k)
    if mesh.b > ENUMERATION_MESH_CAP:
        raise ValueError(
            f"subset enumeration is capped at {ENUMERATION_MESH_CAP} mesh points, got {mesh.b}"
        )
    pts = np.array(mesh.points)
    signs = (-1.0) ** np.arange(k + 1)
    best_coeffs = None
    best_value = -math.inf
    for subset in itertools.combinations(range(mesh.b), k + 1):
        nodes = pts[list(subset)]
        vand = np.vander(nodes, k + 1, increasing=True)
        for first in (1.0, -1.0):
            coeffs = np.linalg.solve(vand, first * signs)
            if np.max(np.abs(polynomial_value(coeffs, pts))) <= 1.0 + SUP_NORM_SLACK:
                value = float(polynomial_value(coeffs, 1.0))
                if value > best_value:
                    best_value = value
                    best_coeffs = coeffs
    if best_coeffs is None:
        raise RuntimeError("no admissible equioscillating candidate found")
    return _finish(mesh, k, best_coeffs)


def p1_closed_form(mesh: Mesh) -> AlternatingPolynomial:
    """The linear alternating polynomial in closed form.

    The line through (mu_1, 1) and (mu_b, -1): it clearly has sup-norm 1
    on the mesh, and no admissible line can exceed its value at 1.
    """
    if mesh.b < 2:
        raise ValueError(f"linear closed form needs at least 2 mesh points, got {mesh.b}")
    hi, lo = mesh.points[0], mesh.points[-1]
    coeffs = np.array([-(hi + lo) / (hi - lo), 2.0 / (hi - lo)])
    return _finish(mesh, 1, coeffs)


def p_last_closed_form(mesh: Mesh) -> AlternatingPolynomial:
    """The degree-(b-1) alternating polynomial in closed form.

    Full alternation: the unique interpolant through +1, -1, +1, ... at all
    b mesh points (signed so the value at 1 is positive).
    """
    pts = np.array(mesh.points)
    signs = (-1.0) ** np.arange(mesh.b)
    coeffs = np.linalg.solve(np.vander(pts, mesh.b, increasing=True), signs)
    if float(polynomial_value(coeffs, 1.0)) < 0:
        coeffs = -coeffs
    return _finish(mesh, mesh.b - 1, coeffs)


def equioscillation_count(poly: AlternatingPolynomial, mesh: Mesh, tol: float = 1e-7) -> int:
    """Length of the longest sign-alternating run of mesh points where
    ``poly`` takes the value +1 or -1 within ``tol``."""
    best = 0
    last_sign = 0
    for mu in mesh.points:
        value = float(poly(mu))
        if abs(abs(value) - 1.0) > tol:
            continue
        sign = 1 if value > 0 else -1
        if sign != last_sign:
            best += 1
            last_sign = sign
    return best


def _validate_k(mesh: Mesh, k: int) -> None:
    if not 0 <= k <= mesh.b - 1:
        raise ValueError(f"degree k must be in 0..{mesh.b - 1}, got {k}")


def _finish(mesh: Mesh, k: int, coeffs: np.ndarray) -> AlternatingPolynomial:
    pts = np.array(mesh.points)
    return AlternatingPolynomial(
        k=k,
        coefficients=tuple(float(c) for c in coeffs),
        value_at_1=float(polynomial_value(coeffs, 1.0)),
        sup_norm_on_mesh=float(np.max(np.abs(polynomial_value(coeffs, pts)))),
    )
