"""Simple undirected graphs: parsing, named families, and structural queries.

Vertices are always indexed 0..n-1 (files use the same 0-based convention).
Graphs are immutable once built; everything downstream relies on a frozen
degree sequence.
"""

from collections import deque
from dataclasses import dataclass

import numpy as np

FAMILY_NAMES = ("path", "cycle", "star", "complete", "complete_bipartite", "c4_pendant")

RANDOM_EDGE_PROBABILITIES = (0.3, 0.5, 0.7)


class EdgeListParseError(ValueError):
    """Edge-list input that violates the format contract."""


@dataclass(frozen=True)
class DegreeProfile:
    """Degree sequence summary.

    ``delta_star`` is the smallest degree strictly greater than 1, or None
    when every vertex has degree <= 1.
    """

    degrees: tuple[int, ...]
    delta_min: int
    delta_max: int
    delta_star: int | None


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Attributes:
        n: vertex count (>= 1).
        edges: sorted tuple of (u, v) pairs with u < v.
        adjacency: per-vertex frozen neighbor sets.
        degrees: per-vertex degree, aligned with vertex index.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[frozenset[int], ...]
    degrees: tuple[int, ...]

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        """Build a validated graph from an iterable of endpoint pairs."""
        if n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={n}")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n) or not (0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) uses a vertex outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({key[0]}, {key[1]})")
            seen.add(key)
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in seen:
            adj[u].add(v)
            adj[v].add(u)
        return cls(
            n=n,
            edges=tuple(sorted(seen)),
            adjacency=tuple(frozenset(s) for s in adj),
            degrees=tuple(len(s) for s in adj),
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, u: int) -> list[int]:
        return sorted(self.adjacency[u])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]


def parse_edge_list(text: str) -> Graph:
    """Parse the plain-text edge-list format.

    The first non-comment line is the header ``n m``; each of the following
    m lines holds one edge ``u v`` with 0-based endpoints. Lines starting
    with ``#`` and blank lines are ignored. Self-loops, duplicate edges,
    out-of-range indices, and edge-count mismatches are rejected with the
    offending line named in the error.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise EdgeListParseError(f"line {lineno}: expected header 'n m', got {line!r}")
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise EdgeListParseError(f"line {lineno}: header fields must be integers, got {line!r}") from None
            if n < 1:
                raise EdgeListParseError(f"line {lineno}: vertex count must be >= 1, got {n}")
            if m < 0:
                raise EdgeListParseError(f"line {lineno}: edge count must be >= 0, got {m}")
            header = (n, m)
            continue
        n, m = header
        if len(parts) != 2:
            raise EdgeListParseError(f"line {lineno}: expected edge 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(f"line {lineno}: edge endpoints must be integers, got {line!r}") from None
        if len(edges) >= m:
            raise EdgeListParseError(f"line {lineno}: more than the declared {m} edges")
        if u == v:
            raise EdgeListParseError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n) or not (0 <= v < n):
            raise EdgeListParseError(f"line {lineno}: vertex index out of range 0..{n - 1} in edge {u} {v}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise EdgeListParseError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add(key)
        edges.append(key)
    if header is None:
        raise EdgeListParseError("no header line 'n m' found")
    if len(edges) != header[1]:
        raise EdgeListParseError(f"expected {header[1]} edges, found {len(edges)}")
    return Graph.from_edges(header[0], edges)


def build_family(name: str, *sizes: int) -> Graph:
    """Build the canonical labeled graph of a named family.

    Families and size parameters:
        path(n), cycle(n >= 3), star(n >= 2) with center 0, complete(n),
        complete_bipartite(a, b) with parts 0..a-1 and a..a+b-1, and
        c4_pendant (fixed 5-vertex graph: a 4-cycle with one extra vertex
        attached to cycle vertex 0).
    """
    if name == "path":
        (n,) = _family_sizes(name, sizes, 1)
        if n < 1:
            raise ValueError(f"path needs at least 1 vertex, got {n}")
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if name == "cycle":
        (n,) = _family_sizes(name, sizes, 1)
        if n < 3:
            raise ValueError(f"cycle needs at least 3 vertices, got {n}")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if name == "star":
        (n,) = _family_sizes(name, sizes, 1)
        if n < 2:
            raise ValueError(f"star needs at least 2 vertices, got {n}")
        return Graph.from_edges(n, [(0, i) for i in range(1, n)])
    if name == "complete":
        (n,) = _family_sizes(name, sizes, 1)
        if n < 1:
            raise ValueError(f"complete graph needs at least 1 vertex, got {n}")
        return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if name == "complete_bipartite":
        a, b = _family_sizes(name, sizes, 2)
        if a < 1 or b < 1:
            raise ValueError(f"complete bipartite parts must be >= 1, got ({a}, {b})")
        return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    if name == "c4_pendant":
        if sizes:
            raise ValueError("c4_pendant takes no size parameters")
        return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
    raise ValueError(f"unknown family {name!r}; choose from {', '.join(FAMILY_NAMES)}")


def _family_sizes(name: str, sizes: tuple[int, ...], want: int) -> tuple[int, ...]:
    if len(sizes) != want:
        raise ValueError(f"{name} takes {want} size parameter(s), got {len(sizes)}")
    return sizes


def degree_profile(g: Graph) -> DegreeProfile:
    """Summarize the degree sequence of ``g``."""
    above_one = [d for d in g.degrees if d > 1]
    return DegreeProfile(
        degrees=g.degrees,
        delta_min=min(g.degrees),
        delta_max=max(g.degrees),
        delta_star=min(above_one) if above_one else None,
    )


def connected_components(g: Graph) -> list[list[int]]:
    """Partition the vertex set into maximal connected components (BFS).

    Components are listed by their smallest vertex, each sorted ascending.
    """
    seen = [False] * g.n
    components: list[list[int]] = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in sorted(g.adjacency[u]):
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        components.append(sorted(comp))
    return components


def bipartition(g: Graph) -> tuple[int, ...] | None:
    """Return a proper 2-coloring (0/1 per vertex) if one exists, else None."""
    colors: list[int | None] = [None] * g.n
    for root in range(g.n):
        if colors[root] is not None:
            continue
        colors[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in sorted(g.adjacency[u]):
                if colors[v] is None:
                    colors[v] = 1 - colors[u]
                    queue.append(v)
                elif colors[v] == colors[u]:
                    return None
    return tuple(colors)  # type: ignore[arg-type]


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def is_regular(g: Graph) -> bool:
    return min(g.degrees) == max(g.degrees)


def disjoint_union(*graphs: Graph) -> Graph:
    """Relabel the inputs onto consecutive index ranges and take their union."""
    if not graphs:
        raise ValueError("disjoint_union needs at least one graph")
    edges: list[tuple[int, int]] = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph.from_edges(offset, edges)


def random_connected_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Draw G(n, p) samples until one is connected."""
    if n < 2:
        raise ValueError(f"random connected graphs need n >= 2, got {n}")
    for _ in range(100_000):
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < p
        ]
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            return g
    raise RuntimeError(f"no connected G({n}, {p}) sample found")


def random_connected_graphs(n_lo: int, n_hi: int, count: int, seed: int) -> list[Graph]:
    """Deterministic list of connected G(n, p) samples.

    Sizes are drawn uniformly from [n_lo, n_hi] and p cycles over
    {0.3, 0.5, 0.7}; the whole sequence is reproducible from ``seed``.
    """
    if n_lo > n_hi:
        raise ValueError(f"empty size range {n_lo}..{n_hi}")
    rng = np.random.default_rng(seed)
    out: list[Graph] = []
    while len(out) < count:
        n = int(rng.integers(n_lo, n_hi + 1))
        p = RANDOM_EDGE_PROBABILITIES[int(rng.integers(len(RANDOM_EDGE_PROBABILITIES)))]
        out.append(random_connected_graph(n, p, rng))
    return out
