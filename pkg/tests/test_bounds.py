import pytest

from degspec import (
    all_pairs_distances,
    alternating_polynomial_lp,
    build_family,
    conditional_excess,
    conditional_wiener_bound,
    degree_adjacency,
    degree_diameter_bound,
    disjoint_union,
    eigenvalues,
    excess_bound,
    excess_bound_regular,
    graph_excess,
    mesh_from_spectrum,
    verify_all,
)
from degspec.bounds import threshold_passes
from degspec.graph import Graph


def polynomial_values(g):
    mesh = mesh_from_spectrum(eigenvalues(degree_adjacency(g)))
    return [alternating_polynomial_lp(mesh, k).value_at_1 for k in range(mesh.b)]


def test_excess_bound_pendant_fixtures():
    cp = build_family("c4_pendant")
    pk = polynomial_values(cp)
    u = cp.degrees.index(1)
    expected = {0: 4, 1: 3, 2: 1}
    for k, want in expected.items():
        bound = excess_bound(cp.m, cp.degrees[u], pk[k], 2)
        assert bound == want
        assert bound == conditional_excess(cp, u, k, 2)


def test_excess_bound_validation():
    with pytest.raises(ValueError, match="beta"):
        excess_bound(5, 1, 1.0, 0)
    with pytest.raises(ValueError, match="at least 1"):
        excess_bound(5, 1, 0.5, 1)


def test_floor_guard():
    # a polynomial value carrying +1e-12 of solver noise must not drop the
    # true integer bound one step
    assert excess_bound_regular(4, 3.0) == 1
    assert excess_bound_regular(4, 3.0 + 1e-12) == 1
    assert excess_bound_regular(4, 3.1) == 0


def test_excess_bound_regular_fixtures():
    c4 = build_family("cycle", 4)
    pk = polynomial_values(c4)
    assert excess_bound_regular(4, pk[1]) == 1 == graph_excess(c4, 1)
    assert excess_bound_regular(4, pk[0]) == 3 == graph_excess(c4, 0)
    k3 = build_family("complete", 3)
    assert excess_bound_regular(3, polynomial_values(k3)[0]) == 2 == graph_excess(k3, 0)


def test_threshold_strictness():
    assert not threshold_passes(3.0, 3.0)
    assert not threshold_passes(3.0 + 1e-12, 3.0)  # equality plus noise must not pass
    assert threshold_passes(3.1, 3.0)


def test_degree_diameter_bound_fixtures():
    k13 = build_family("star", 4)
    pk = polynomial_values(k13)
    assert pk[1] == pytest.approx(3.0)
    assert degree_diameter_bound(k13.m, pk, 1, 3) == 1
    assert degree_diameter_bound(k13.m, pk, 3, 3) == 1
    c4 = build_family("cycle", 4)
    # P_1(1) = 3 equals the threshold n - 1 = 3, so nothing qualifies
    assert degree_diameter_bound(c4.m, polynomial_values(c4), 2, 2) is None
    with pytest.raises(ValueError, match="thresholds"):
        degree_diameter_bound(4, [1.0], 0, 1)
    with pytest.raises(ValueError, match="total degree"):
        degree_diameter_bound(1, [1.0], 3, 1)


def test_conditional_wiener_bound_fixtures():
    k13 = build_family("star", 4)
    pk = polynomial_values(k13)
    x = sum(1 for d in k13.degrees if d >= 3)
    assert conditional_wiener_bound(k13.m, x, pk, 3) == pytest.approx(0.5)
    c4 = build_family("cycle", 4)
    assert conditional_wiener_bound(c4.m, 4, polynomial_values(c4), 2) is None


def test_wiener_bound_specialization_sound():
    # with the threshold at the minimum degree the bound dominates the
    # plain Wiener index whenever it exists
    for g in (build_family("star", 6), build_family("complete_bipartite", 1, 5)):
        pk = polynomial_values(g)
        delta = min(g.degrees)
        bound = conditional_wiener_bound(g.m, g.n, pk, delta)
        if bound is not None:
            assert bound >= all_pairs_distances(g).wiener


def test_verify_all_c4():
    reports = verify_all(build_family("cycle", 4))
    assert all(r.sound for r in reports)
    cor8 = {r.param("k"): r for r in reports if r.name == "excess_regular"}
    assert cor8[1].tight and cor8[1].bound == 1


def test_verify_all_c4_pendant_equalities():
    cp = build_family("c4_pendant")
    u = cp.degrees.index(1)
    reports = verify_all(cp)
    assert all(r.sound for r in reports)
    for k, want in ((0, 4), (1, 3), (2, 1)):
        matches = [
            r
            for r in reports
            if r.name == "excess" and r.params == (("u", u), ("k", k), ("beta", 2))
        ]
        assert len(matches) == 1
        assert matches[0].bound == want and matches[0].tight


def test_verify_all_k13_degree_diameter_tight():
    reports = verify_all(build_family("star", 4))
    assert all(r.sound for r in reports)
    hit = [r for r in reports if r.name == "degree_diameter" and r.params == (("alpha", 1), ("beta", 3))]
    assert len(hit) == 1 and hit[0].bound == 1 and hit[0].exact == 1 and hit[0].tight


def test_verify_all_rejects_bad_input():
    with pytest.raises(ValueError, match="connected"):
        verify_all(disjoint_union(build_family("complete", 3), build_family("complete", 3)))
    with pytest.raises(ValueError, match="isolated"):
        verify_all(Graph.from_edges(1, []))
    with pytest.raises(ValueError, match="capped"):
        verify_all(build_family("cycle", 65))


def test_excess_bound_monotone_in_k_and_beta():
    for g in (build_family("c4_pendant"), build_family("path", 8)):
        pk = polynomial_values(g)
        for d in sorted(set(g.degrees)):
            for beta in (1, 2, 3):
                series = [excess_bound(g.m, d, p, beta) for p in pk]
                assert all(a >= b for a, b in zip(series, series[1:]))
            for p in pk:
                by_beta = [excess_bound(g.m, d, p, beta) for beta in (1, 2, 3)]
                assert all(a >= b for a, b in zip(by_beta, by_beta[1:]))


def test_regular_specialization_identity():
    # on regular graphs the general formula collapses to the regular one
    for g in (build_family("cycle", 6), build_family("complete", 5), build_family("complete_bipartite", 3, 3)):
        pk = polynomial_values(g)
        delta = g.degrees[0]
        for p in pk:
            general = 2 * g.m * (2 * g.m - delta) / (delta * (delta * p**2 + 2 * g.m - delta))
            special = g.n * (g.n - 1) / (p**2 + g.n - 1)
            assert general == pytest.approx(special, rel=1e-9)


def test_report_structure():
    reports = verify_all(build_family("star", 4))
    names = {r.name for r in reports}
    assert names == {"excess", "degree_diameter", "conditional_wiener"}
    for r in reports:
        if r.bound is None:
            assert r.reason is not None and r.sound
    regular = verify_all(build_family("cycle", 4))
    assert {"excess_regular", "wiener_regular"} <= {r.name for r in regular}
