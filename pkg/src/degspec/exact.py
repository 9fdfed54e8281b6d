"""Exact distance-based invariants by brute force.

Breadth-first search from every vertex gives the full integer distance
matrix; everything else (eccentricity, diameter, Wiener index, excess
counts, degree-restricted variants) is counted directly from it. These
values are the ground truth the spectral bounds are checked against.
"""

from collections import deque
from dataclasses import dataclass

import numpy as np

from .graph import Graph, connected_components


@dataclass(frozen=True)
class ExactInvariants:
    """Distance matrix and the invariants read off it."""

    dist: np.ndarray
    ecc: tuple[int, ...]
    diameter: int
    wiener: int
    distance_sums: tuple[int, ...]


def all_pairs_distances(g: Graph) -> ExactInvariants:
    """BFS from every vertex; requires a connected graph."""
    comps = connected_components(g)
    if len(comps) != 1:
        raise ValueError(f"graph is disconnected ({len(comps)} components); distances are undefined")
    n = g.n
    dist = np.zeros((n, n), dtype=np.int64)
    for s in range(n):
        row = np.full(n, -1, dtype=np.int64)
        row[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if row[v] < 0:
                    row[v] = row[u] + 1
                    queue.append(v)
        dist[s] = row
    dist.setflags(write=False)
    sums = tuple(int(x) for x in dist.sum(axis=1))
    return ExactInvariants(
        dist=dist,
        ecc=tuple(int(x) for x in dist.max(axis=1)),
        diameter=int(dist.max()),
        wiener=int(dist.sum()) // 2,
        distance_sums=sums,
    )


def conditional_excess(
    g: Graph, u: int, k: int, beta: int, inv: ExactInvariants | None = None
) -> int:
    """Number of vertices of degree >= beta at distance greater than k from u.

    beta = 1 gives the plain excess count.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if beta < 1:
        raise ValueError(f"beta must be >= 1, got {beta}")
    inv = inv or all_pairs_distances(g)
    row = inv.dist[u]
    return int(sum(1 for v in range(g.n) if row[v] > k and g.degrees[v] >= beta))


def graph_excess(g: Graph, k: int, inv: ExactInvariants | None = None) -> int:
    """Largest excess count over all vertices."""
    inv = inv or all_pairs_distances(g)
    return max(conditional_excess(g, u, k, 1, inv) for u in range(g.n))


def degree_diameter(
    g: Graph, alpha: int, beta: int, inv: ExactInvariants | None = None
) -> int | None:
    """Largest distance between a vertex of degree >= alpha and one of degree >= beta.

    The two endpoints may coincide (a single vertex meeting both thresholds
    yields 0). Returns None when either side has no qualifying vertex.
    """
    if alpha < 1 or beta < 1:
        raise ValueError(f"degree thresholds must be >= 1, got ({alpha}, {beta})")
    inv = inv or all_pairs_distances(g)
    left = [v for v in range(g.n) if g.degrees[v] >= alpha]
    right = [v for v in range(g.n) if g.degrees[v] >= beta]
    if not left or not right:
        return None
    return int(max(inv.dist[u, v] for u in left for v in right))


def conditional_distance_sum(
    g: Graph, v: int, beta: int, inv: ExactInvariants | None = None
) -> int:
    """Sum of distances from v to every vertex of degree >= beta."""
    if beta < 1:
        raise ValueError(f"beta must be >= 1, got {beta}")
    inv = inv or all_pairs_distances(g)
    return int(sum(inv.dist[v, u] for u in range(g.n) if g.degrees[u] >= beta))


def conditional_wiener(g: Graph, beta: int, inv: ExactInvariants | None = None) -> int:
    """Sum of distances over unordered pairs of vertices of degree >= beta.

    beta equal to the minimum degree recovers the Wiener index.
    """
    if beta < 1:
        raise ValueError(f"beta must be >= 1, got {beta}")
    inv = inv or all_pairs_distances(g)
    qualifying = [v for v in range(g.n) if g.degrees[v] >= beta]
    return int(
        sum(inv.dist[u, v] for i, u in enumerate(qualifying) for v in qualifying[i + 1 :])
    )
