import pytest

from degspec import build_family, random_connected_graphs


def family_corpus():
    """Every built-in family instance up to 16 vertices, labeled."""
    graphs = []
    for n in range(2, 17):
        graphs.append((f"path({n})", build_family("path", n)))
    for n in range(3, 17):
        graphs.append((f"cycle({n})", build_family("cycle", n)))
    for n in range(2, 17):
        graphs.append((f"star({n})", build_family("star", n)))
    for n in range(2, 17):
        graphs.append((f"complete({n})", build_family("complete", n)))
    for a in range(1, 9):
        for b in range(a, 17 - a):
            graphs.append((f"complete_bipartite({a},{b})", build_family("complete_bipartite", a, b)))
    graphs.append(("c4_pendant", build_family("c4_pendant")))
    return graphs


@pytest.fixture(scope="session")
def families():
    return family_corpus()


@pytest.fixture(scope="session")
def random_small():
    """50 seeded connected graphs with at most 10 vertices."""
    return random_connected_graphs(4, 10, 50, 1812)


@pytest.fixture(scope="session")
def random_medium():
    """50 seeded connected graphs with 5 to 12 vertices."""
    return random_connected_graphs(5, 12, 50, 96024)
