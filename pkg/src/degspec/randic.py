"""The Randic index family and the inequalities that bound it.

Covers the classic index (sum of 1/sqrt(deg(u) deg(v)) over edges), the
zeroth-order and generalized variants, higher-order path sums, the second
Zagreb index, and a report evaluating every supported inequality with
holds/tight flags.
"""

import math
from dataclasses import dataclass

from .graph import Graph, degree_profile, is_connected, is_regular
from .spectral import (
    Spectrum,
    degree_adjacency,
    eigenvalues,
    standard_eigenvalues,
    structural_coefficients,
)

#: slack added to the right-hand side before flagging "holds" so exact
#: equality cases cannot flip false on float roundoff
HOLDS_SLACK = 1e-9

#: absolute tolerance for the "tight" (equality) flag
TIGHT_TOL = 1e-8

#: exponents reported in ``RandicReport.alpha_values``
ALPHA_GRID = (-2.0, -1.0, -0.75, -0.5, 0.5, 1.0, 2.0)

#: (alpha1, alpha2) pairs for the power-comparison checks
EXPONENT_PAIRS = ((-2.0, 1.0), (1.0, 2.0), (-2.0, -1.0), (-0.5, 0.5))

#: exponents for the coefficient-based power bounds (one inside (-1, 0)
#: beyond -1/2, plus one outside [-1, 0])
C2_POWER_ALPHAS = (-0.5, -0.75, 2.0)


@dataclass(frozen=True)
class InequalityCheck:
    """One evaluated inequality: lhs <= rhs unless a reason marks it skipped."""

    name: str
    lhs: float | None
    rhs: float | None
    holds: bool | None
    tight: bool | None
    reason: str | None = None


@dataclass(frozen=True)
class RandicReport:
    """Index values and the outcomes of every supported inequality."""

    randic: float
    zeroth: float
    alpha_values: dict[float, float]
    higher_values: dict[int, float]
    zagreb2: float
    perron_overlap: float
    checks: tuple[InequalityCheck, ...]

    def check(self, name: str) -> InequalityCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def randic_index(g: Graph) -> float:
    """Sum of 1/sqrt(deg(u) deg(v)) over the edges."""
    if g.m == 0:
        return 0.0
    _reject_isolated(g)
    return sum(1.0 / math.sqrt(g.degrees[u] * g.degrees[v]) for u, v in g.edges)


def zeroth_order(g: Graph) -> float:
    """Sum of 1/sqrt(deg(v)) over the vertices."""
    _reject_isolated(g)
    return sum(1.0 / math.sqrt(d) for d in g.degrees)


def generalized_randic(g: Graph, alpha: float) -> float:
    """Sum of (deg(u) deg(v))^alpha over the edges; alpha must be nonzero.

    alpha = -1/2 recovers the classic index and alpha = 1 the second
    Zagreb index.
    """
    if alpha == 0:
        raise ValueError("exponent alpha must be nonzero")
    if g.m == 0:
        return 0.0
    return sum((g.degrees[u] * g.degrees[v]) ** alpha for u, v in g.edges)


def higher_order_randic(g: Graph, t: int) -> float:
    """Sum over simple paths with ``t`` edges of 1/sqrt(product of degrees).

    Each unordered path is counted exactly once: the directed enumeration
    keeps only paths whose first endpoint index is below the last. Paths
    are simple (no repeated vertices), so cycles are never double-counted.
    """
    if t < 1:
        raise ValueError(f"path length t must be >= 1, got {t}")
    deg = g.degrees
    total = 0.0

    def extend(path: list[int], on_path: set[int], product: int) -> None:
        nonlocal total
        if len(path) == t + 1:
            if path[0] < path[-1]:
                total += 1.0 / math.sqrt(product)
            return
        for w in sorted(g.adjacency[path[-1]]):
            if w not in on_path:
                path.append(w)
                on_path.add(w)
                extend(path, on_path, product * deg[w])
                on_path.remove(w)
                path.pop()

    for start in range(g.n):
        extend([start], {start}, deg[start])
    return total


def second_zagreb(g: Graph) -> float:
    """Sum of degree products over the edges."""
    return generalized_randic(g, 1.0) if g.m else 0.0


def perron_overlap(g: Graph) -> float:
    """(sum of sqrt-degrees)^2 / (2m): squared overlap of the all-ones
    vector with the degree-adjacency Perron direction."""
    if g.m == 0:
        raise ValueError("overlap needs at least one edge")
    return sum(math.sqrt(d) for d in g.degrees) ** 2 / (2.0 * g.m)


def randic_bound_report(
    g: Graph,
    deg_spectrum: Spectrum | None = None,
    std_spectrum: Spectrum | None = None,
) -> RandicReport:
    """Evaluate every supported index inequality on ``g``.

    Checks whose preconditions fail (connectivity, non-regularity, a vertex
    of degree above 1) are reported with a reason instead of being dropped.
    Spectra may be passed in to avoid recomputing them.
    """
    if g.m == 0:
        return _empty_report(g)
    _reject_isolated(g)
    n, m = g.n, g.m
    profile = degree_profile(g)
    dmin, dmax, dstar = profile.delta_min, profile.delta_max, profile.delta_star
    connected = is_connected(g)
    regular = is_regular(g)

    r = randic_index(g)
    r0 = zeroth_order(g)
    alpha_values = {a: generalized_randic(g, a) for a in ALPHA_GRID}
    higher_values = {1: higher_order_randic(g, 1), 2: higher_order_randic(g, 2)}
    zagreb = alpha_values[1.0]
    phi = perron_overlap(g)
    c2 = structural_coefficients(g)[1]
    abs_c2 = abs(c2)

    checks: list[InequalityCheck] = []
    checks.append(_check("edge_inverse_sum_lower", m / dmax**2, -c2))
    checks.append(_check("edge_inverse_sum_upper", -c2, m / dmin**2))
    checks.append(_check("randic_degree_lower", m / dmax, r))
    checks.append(_check("randic_degree_upper", r, m / dmin))
    if connected:
        checks.append(_check("randic_order_lower", math.sqrt(n - 1), r))
    else:
        checks.append(_skip("randic_order_lower", "needs a connected graph"))
    checks.append(_check("randic_order_upper", r, n / 2.0))
    checks.append(_check("zeroth_degree_lower", n / math.sqrt(dmax), r0))
    checks.append(_check("zeroth_degree_upper", r0, n / math.sqrt(dmin)))
    checks.append(_check("zagreb2_size", zagreb, m * ((math.sqrt(8 * m + 1) - 1) / 2.0) ** 2))
    identity_gap = abs(alpha_values[-1.0] - abs_c2)
    checks.append(
        InequalityCheck(
            name="inverse_identity",
            lhs=alpha_values[-1.0],
            rhs=abs_c2,
            holds=identity_gap <= 1e-10,
            tight=identity_gap <= 1e-10,
        )
    )
    checks.append(_check("randic_c2", r, math.sqrt(m * abs_c2)))
    checks.append(_check("zeroth_square", n**3 / (2.0 * m), r0**2))
    for a1, a2 in EXPONENT_PAIRS:
        lhs = alpha_values[a1] ** a2 * m**a1
        rhs = alpha_values[a2] ** a1 * m**a2
        if a1 * a2 < 0:
            lhs, rhs = rhs, lhs
        checks.append(_check(f"exponent_pair_{a1:g}_{a2:g}", lhs, rhs))
    for a in C2_POWER_ALPHAS:
        ref = m ** (a + 1) / abs_c2**a
        if -1.0 < a < 0.0:
            checks.append(_check(f"product_power_{a:g}", alpha_values[a], ref))
        else:
            checks.append(_check(f"product_power_{a:g}", ref, alpha_values[a]))
    if deg_spectrum is None:
        deg_spectrum = eigenvalues(degree_adjacency(g))
    if std_spectrum is None:
        std_spectrum = standard_eigenvalues(g)
    pairing = 0.5 * sum(
        abs(lam * theta) for lam, theta in zip(deg_spectrum.values, std_spectrum.values)
    )
    checks.append(_check("spectral_product", r, pairing))
    if connected:
        checks.append(
            _check("second_order_upper", higher_values[2], math.sqrt(dmax) * (n / 2.0 + c2))
        )
        if regular:
            checks.append(_skip("second_order_lower", "holds only for non-regular graphs"))
        elif dstar is None:
            checks.append(_skip("second_order_lower", "no vertex of degree above 1"))
        else:
            # the squared term keeps a negative 2R - overlap harmless
            lower = ((2.0 * r - phi) ** 2 / (2.0 * (n - phi)) + phi / 2.0 + c2) * math.sqrt(dstar)
            checks.append(_check("second_order_lower", lower, higher_values[2]))
    else:
        checks.append(_skip("second_order_upper", "needs a connected graph"))
        checks.append(_skip("second_order_lower", "needs a connected graph"))

    return RandicReport(
        randic=r,
        zeroth=r0,
        alpha_values=alpha_values,
        higher_values=higher_values,
        zagreb2=zagreb,
        perron_overlap=phi,
        checks=tuple(checks),
    )


def _check(name: str, lhs: float, rhs: float) -> InequalityCheck:
    # tolerances scale with the compared magnitudes: some index values grow
    # like m * Delta^4, far beyond where absolute 1e-8 gaps are resolvable
    scale = max(1.0, abs(lhs), abs(rhs))
    return InequalityCheck(
        name=name,
        lhs=lhs,
        rhs=rhs,
        holds=lhs <= rhs + HOLDS_SLACK * scale,
        tight=abs(lhs - rhs) <= TIGHT_TOL * scale,
    )


def _skip(name: str, reason: str) -> InequalityCheck:
    return InequalityCheck(name=name, lhs=None, rhs=None, holds=None, tight=None, reason=reason)


def _empty_report(g: Graph) -> RandicReport:
    checks = (_skip("all", "graph has no edges"),)
    return RandicReport(
        randic=0.0,
        zeroth=0.0,
        alpha_values={a: 0.0 for a in ALPHA_GRID},
        higher_values={1: 0.0, 2: 0.0},
        zagreb2=0.0,
        perron_overlap=0.0,
        checks=checks,
    )


def _reject_isolated(g: Graph) -> None:
    for i, d in enumerate(g.degrees):
        if d == 0:
            raise ValueError(f"vertex {i} is isolated; the index is undefined")
