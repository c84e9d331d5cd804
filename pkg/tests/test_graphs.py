"""Core graph values: recoding bijection, degrees, B-graphs, net-degrees."""

from itertools import product

import pytest

from twomain import (
    Multigraph, SignedGraph, SimpleGraph, associated_multigraph, b_graph,
    degree_profile, is_connected, is_net_regular, net_degree_profile,
    signed_from_multigraph, walk_matrix,
)


def test_positive_k2_maps_to_empty_multigraph():
    s = SignedGraph.from_edges(2, [(0, 1, 1)])
    m = associated_multigraph(s)
    assert list(m.edges()) == []


def test_negative_k2_maps_to_double_edge():
    s = SignedGraph.from_edges(2, [(0, 1, -1)])
    m = associated_multigraph(s)
    assert list(m.edges()) == [(0, 1, 2)]


def test_all_negative_triangle_maps_to_all_double_triangle():
    s = SignedGraph.from_edges(3, [(0, 1, -1), (0, 2, -1), (1, 2, -1)])
    m = associated_multigraph(s)
    assert sorted(m.edges()) == [(0, 1, 2), (0, 2, 2), (1, 2, 2)]


def test_bijection_round_trip_exhaustive_small():
    # every multigraph of order <= 4, both directions
    for n in (1, 2, 3, 4):
        pairs = n * (n - 1) // 2
        for table in product((0, 1, 2), repeat=pairs):
            m = Multigraph(n, table)
            assert associated_multigraph(signed_from_multigraph(m)) == m
        for table in product((0, 1, -1), repeat=pairs):
            s = SignedGraph(n, table)
            assert signed_from_multigraph(associated_multigraph(s)) == s


def test_degree_profile_triangle_with_doubles():
    m = Multigraph.from_edges(3, [(0, 1, 2), (0, 2, 2), (1, 2, 1)])
    prof = degree_profile(m)
    assert prof.degrees == (4, 3, 3)
    assert prof.s_values == (12, 11, 11)


def test_degree_profile_empty():
    m = Multigraph(3, (0, 0, 0))
    prof = degree_profile(m)
    assert prof.degrees == (0, 0, 0)
    assert prof.s_values == (0, 0, 0)


def test_degree_multiset_of_single_double_edge_cycle():
    m = Multigraph.from_edges(4, [(0, 1, 2), (1, 2, 1), (2, 3, 1), (0, 3, 1)])
    assert sorted(degree_profile(m).degrees) == [2, 2, 3, 3]


def test_degree_profile_matches_walk_columns():
    # d = A j and s = A^2 j, entrywise, on assorted graphs
    graphs = [
        Multigraph.from_edges(3, [(0, 1, 2), (0, 2, 2), (1, 2, 1)]),
        Multigraph.from_edges(5, [(0, 1, 1), (1, 2, 2), (2, 3, 1), (3, 4, 2)]),
        Multigraph(4, (0, 0, 0, 0, 0, 0)),
    ]
    for m in graphs:
        w = walk_matrix(m)
        prof = degree_profile(m)
        assert w.columns[0] == tuple([1] * m.n)
        assert w.columns[1] == prof.degrees
        assert w.columns[2] == prof.s_values


def test_b_graph_collapses_multiplicity():
    m = Multigraph.from_edges(5, [(i, (i + 1) % 5, 2) for i in range(5)])
    simple = b_graph(m)
    assert sorted(simple.edges()) == [(0, 1, 1), (0, 4, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1)]


def test_b_graph_unchanged_when_weight2_reduced_to_1():
    m = Multigraph.from_edges(3, [(0, 1, 2), (0, 2, 2), (1, 2, 1)])
    reduced = Multigraph.from_edges(3, [(0, 1, 1), (0, 2, 2), (1, 2, 1)])
    assert b_graph(m) == b_graph(reduced)


def test_empty_multigraph_has_empty_b_graph():
    assert b_graph(Multigraph(3, (0, 0, 0))) == SimpleGraph(3, (0, 0, 0))


def test_net_degrees():
    s = SignedGraph.from_edges(4, [(i, (i + 1) % 4, 1) for i in range(4)])
    assert net_degree_profile(s) == (2, 2, 2, 2)
    assert is_net_regular(s)

    tri = SignedGraph.from_edges(3, [(0, 1, -1), (0, 2, -1), (1, 2, -1)])
    assert net_degree_profile(tri) == (-2, -2, -2)
    assert is_net_regular(tri)

    path = SignedGraph.from_edges(3, [(0, 1, 1), (1, 2, -1)])
    assert net_degree_profile(path) == (1, 0, -1)
    assert not is_net_regular(path)


def test_validation_rejects_bad_entries():
    with pytest.raises(ValueError):
        Multigraph(3, (0, 1, 3))
    with pytest.raises(ValueError):
        SignedGraph(3, (0, 1, 2))
    with pytest.raises(ValueError):
        Multigraph.from_edges(3, [(1, 1, 1)])
    with pytest.raises(ValueError):
        Multigraph.from_edges(3, [(0, 5, 1)])


def test_values_are_immutable_and_hashable():
    m = Multigraph.from_edges(3, [(0, 1, 2)])
    with pytest.raises(AttributeError):
        m.n = 5
    assert m == Multigraph.from_edges(3, [(1, 0, 2)])
    assert len({m, Multigraph.from_edges(3, [(0, 1, 2)])}) == 1


def test_connectivity():
    assert is_connected(Multigraph.from_edges(3, [(0, 1, 1), (1, 2, 2)]))
    assert not is_connected(Multigraph.from_edges(3, [(0, 1, 1)]))
    assert is_connected(Multigraph(1, ()))
