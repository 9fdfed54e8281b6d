import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degspec import (
    EdgeListParseError,
    Graph,
    bipartition,
    build_family,
    connected_components,
    degree_profile,
    disjoint_union,
    parse_edge_list,
)

K3_TEXT = "3 3\n0 1\n1 2\n0 2\n"
C4_TEXT = "4 4\n0 1\n1 2\n2 3\n3 0\n"


def test_parse_k3():
    g = parse_edge_list(K3_TEXT)
    assert g.n == 3 and g.m == 3
    assert g.degrees == (2, 2, 2)


def test_parse_c4_with_comments_and_blanks():
    g = parse_edge_list("# a 4-cycle\n\n" + C4_TEXT)
    assert g.n == 4 and g.m == 4
    assert g.degrees == (2, 2, 2, 2)


def test_parse_duplicate_edge_names_line():
    with pytest.raises(EdgeListParseError, match=r"line 3: duplicate edge 0 1"):
        parse_edge_list("2 2\n0 1\n0 1\n")


def test_parse_duplicate_edge_reversed_orientation():
    with pytest.raises(EdgeListParseError, match="duplicate edge"):
        parse_edge_list("3 3\n0 1\n1 0\n1 2\n")


def test_parse_self_loop():
    with pytest.raises(EdgeListParseError, match=r"line 2: self-loop at vertex 1"):
        parse_edge_list("3 2\n1 1\n0 2\n")


def test_parse_index_out_of_range():
    with pytest.raises(EdgeListParseError, match=r"line 2: vertex index out of range"):
        parse_edge_list("3 1\n0 3\n")


def test_parse_edge_count_mismatch():
    with pytest.raises(EdgeListParseError, match="expected 3 edges, found 2"):
        parse_edge_list("3 3\n0 1\n1 2\n")
    with pytest.raises(EdgeListParseError, match="more than the declared"):
        parse_edge_list("3 1\n0 1\n1 2\n")


def test_parse_rejects_garbage():
    with pytest.raises(EdgeListParseError, match="header"):
        parse_edge_list("three edges\n")
    with pytest.raises(EdgeListParseError, match="no header"):
        parse_edge_list("# only comments\n")
    with pytest.raises(EdgeListParseError, match="endpoints must be integers"):
        parse_edge_list("2 1\na b\n")


def test_star_four_is_k13():
    g = build_family("star", 4)
    assert sorted(g.degrees) == [1, 1, 1, 3]
    assert g.m == 3


def test_c4_pendant_shape():
    g = build_family("c4_pendant")
    assert g.n == 5 and g.m == 5
    assert sorted(g.degrees) == [1, 2, 2, 2, 3]


def test_cycle_and_complete_edge_counts():
    for n in range(3, 10):
        assert build_family("cycle", n).m == n
    for n in range(1, 10):
        assert build_family("complete", n).m == n * (n - 1) // 2


def test_complete_bipartite():
    g = build_family("complete_bipartite", 2, 3)
    assert g.n == 5 and g.m == 6
    assert sorted(g.degrees) == [2, 2, 2, 3, 3]


def test_family_size_validation():
    with pytest.raises(ValueError, match="cycle needs at least 3"):
        build_family("cycle", 2)
    with pytest.raises(ValueError, match="star needs at least 2"):
        build_family("star", 1)
    with pytest.raises(ValueError, match="unknown family"):
        build_family("hypercube", 3)
    with pytest.raises(ValueError, match="takes no size"):
        build_family("c4_pendant", 5)
    with pytest.raises(ValueError, match="takes 2 size"):
        build_family("complete_bipartite", 3)


def test_degree_profile_examples():
    c4 = degree_profile(build_family("cycle", 4))
    assert (c4.delta_min, c4.delta_max, c4.delta_star) == (2, 2, 2)
    k13 = degree_profile(build_family("star", 4))
    assert (k13.delta_min, k13.delta_max, k13.delta_star) == (1, 3, 3)
    cp = degree_profile(build_family("c4_pendant"))
    assert (cp.delta_min, cp.delta_max, cp.delta_star) == (1, 3, 2)
    k2 = degree_profile(build_family("path", 2))
    assert k2.delta_star is None


def test_connected_components():
    assert len(connected_components(build_family("cycle", 4))) == 1
    two = disjoint_union(build_family("complete", 3), build_family("complete", 3))
    assert connected_components(two) == [[0, 1, 2], [3, 4, 5]]
    edgeless = Graph.from_edges(3, [])
    assert connected_components(edgeless) == [[0], [1], [2]]


def test_bipartition_examples():
    colors = bipartition(build_family("cycle", 4))
    assert colors == (0, 1, 0, 1)
    assert bipartition(build_family("complete", 3)) is None
    cp = build_family("c4_pendant")
    colors = bipartition(cp)
    assert colors is not None
    assert all(colors[u] != colors[v] for u, v in cp.edges)


def test_graph_construction_validation():
    with pytest.raises(ValueError, match="self-loop"):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError, match="duplicate"):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError, match="outside"):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(ValueError, match="at least one vertex"):
        Graph.from_edges(0, [])


def test_graph_is_immutable():
    g = build_family("cycle", 4)
    with pytest.raises(AttributeError):
        g.n = 5  # type: ignore[misc]


@st.composite
def graphs(draw):
    n = draw(st.integers(min_value=2, max_value=8))
    possible = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.sets(st.sampled_from(possible)))
    return Graph.from_edges(n, edges)


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_degree_sum_is_twice_edge_count(g):
    assert sum(g.degrees) == 2 * g.m


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_components_partition_and_bipartition_proper(g):
    comps = connected_components(g)
    seen = sorted(v for comp in comps for v in comp)
    assert seen == list(range(g.n))
    colors = bipartition(g)
    if colors is not None:
        assert all(colors[u] != colors[v] for u, v in g.edges)
