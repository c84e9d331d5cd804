"""Family generators, the certificate table, and the membership predicate."""

import pytest

from twomain import (
    BadParameters, CyclicPattern, FamilySpec, Multigraph, ONE_MAIN, OrderTooSmall,
    UnknownTag, b_graph, degree_profile, expected_ab, generate_cyclic,
    generate_family, is_member_H1, main_count_exact, solve_ab, unicyclic_decompose,
)
from twomain.families import h1_structure


def cycle_weights(g):
    d = unicyclic_decompose(b_graph(g))
    cyc = d.cycle_vertices
    return [g.weight(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]


def test_generate_cyclic_examples():
    g = generate_cyclic(CyclicPattern(1, 3, 1))
    assert sorted(g.edges()) == [(0, 1, 2), (0, 3, 1), (1, 2, 1), (2, 3, 1)]

    tri = generate_cyclic(CyclicPattern(1, 0, 3))
    assert sorted(tri.edges()) == [(0, 1, 2), (0, 2, 2), (1, 2, 2)]

    g6 = generate_cyclic(CyclicPattern(2, 1, 2))
    word = [g6.weight(i, (i + 1) % 6) for i in range(6)]
    assert word == [2, 2, 1, 2, 2, 1]


def test_generate_cyclic_too_small():
    with pytest.raises(OrderTooSmall):
        generate_cyclic(CyclicPattern(1, 0, 2))
    with pytest.raises(BadParameters):
        generate_cyclic(CyclicPattern(0, 2, 3))


def test_expected_ab_table():
    assert expected_ab("U1") == (3, -1)
    assert expected_ab("U2") == (2, 2)
    assert expected_ab("U3") == (1, 8)
    assert expected_ab("U4") == (4, -2)
    assert expected_ab("U5") == (3, 2)
    assert expected_ab("U6") == ONE_MAIN
    assert expected_ab("U7") == ONE_MAIN
    with pytest.raises(UnknownTag):
        expected_ab("U9")


@pytest.mark.parametrize("tag", ["U1", "U2", "U3", "U4", "U5"])
@pytest.mark.parametrize("t", [1, 2, 3, 4])
def test_two_main_families_match_table(tag, t):
    g = generate_family(FamilySpec(tag, t))
    cert = solve_ab(g)
    assert cert.valid
    assert (cert.a, cert.b) == expected_ab(tag)
    assert main_count_exact(g) == 2


@pytest.mark.parametrize("tag,ts", [("U6", range(2, 7)), ("U7", range(2, 7))])
def test_one_main_families(tag, ts):
    for t in ts:
        g = generate_family(FamilySpec(tag, t))
        assert main_count_exact(g) == 1


def test_u7_degenerate_order_two_is_the_double_edge():
    g = generate_family(FamilySpec("U7", 2))
    assert g == Multigraph.from_edges(2, [(0, 1, 2)])


def test_degenerate_patterns_with_no_valid_graph():
    with pytest.raises(BadParameters):
        generate_family(FamilySpec("U6", 1))
    with pytest.raises(BadParameters):
        generate_family(FamilySpec("U7", 1))
    with pytest.raises(BadParameters):
        generate_family(FamilySpec("U1", 0))


def test_u5_t1_shape():
    g = generate_family(FamilySpec("U5", 1))
    assert sorted(cycle_weights(g)) == [1, 2, 2, 2]


@pytest.mark.parametrize("b", [6, 10])
@pytest.mark.parametrize("t", [4, 6])
def test_h1_grid(b, t):
    g = generate_family(FamilySpec("H1", t, b))
    cert = solve_ab(g)
    assert cert.valid and (cert.a, cert.b) == (0, b)
    assert main_count_exact(g) == 2
    assert is_member_H1(g, b)


@pytest.mark.parametrize("b", [4, 8, 12])
@pytest.mark.parametrize("t", [3, 4, 5])
def test_h2_grid(b, t):
    g = generate_family(FamilySpec("H2", t, b))
    cert = solve_ab(g)
    assert cert.valid and (cert.a, cert.b) == (1, b)
    assert main_count_exact(g) == 2
    deg = degree_profile(g).degrees
    hubs = {deg[v] for v in unicyclic_decompose(b_graph(g)).cycle_vertices if deg[v] != 2}
    assert hubs == {1 + b // 2}
    assert (1 + b // 2) % 2 == 1


@pytest.mark.parametrize("b", [6, 10])
@pytest.mark.parametrize("t", [3, 4])
def test_h3_grid(b, t):
    g = generate_family(FamilySpec("H3", t, b))
    cert = solve_ab(g)
    assert cert.valid and (cert.a, cert.b) == (1, b)
    assert main_count_exact(g) == 2
    deg = degree_profile(g).degrees
    hubs = {deg[v] for v in unicyclic_decompose(b_graph(g)).cycle_vertices if deg[v] != 2}
    assert hubs == {1 + b // 2}
    assert (1 + b // 2) % 2 == 0


def test_h_parameter_validation():
    with pytest.raises(BadParameters):
        generate_family(FamilySpec("H1", 4, 5))    # b not 2 mod 4
    with pytest.raises(BadParameters):
        generate_family(FamilySpec("H1", 3, 6))    # t odd
    with pytest.raises(BadParameters):
        generate_family(FamilySpec("H1", 4))       # b missing
    with pytest.raises(BadParameters):
        generate_family(FamilySpec("H2", 2, 4))    # t < 3
    with pytest.raises(BadParameters):
        generate_family(FamilySpec("H2", 3, 6))    # b not multiple of 4
    with pytest.raises(BadParameters):
        generate_family(FamilySpec("H3", 3, 8))
    with pytest.raises(UnknownTag):
        generate_family(FamilySpec("X1", 3))


def test_membership_rejects_cycle_families():
    u1 = generate_family(FamilySpec("U1", 1))
    verdict = is_member_H1(u1, 6)
    assert not verdict
    assert verdict.failed_condition == 2

    tree_like = Multigraph.from_edges(3, [(0, 1, 1), (1, 2, 1)])
    verdict = is_member_H1(tree_like, 6)
    assert not verdict and verdict.failed_condition == 1


def test_membership_rejects_block_families():
    for b, t in ((6, 3), (10, 3)):
        assert not is_member_H1(generate_family(FamilySpec("H3", t, b)), b)
    assert not is_member_H1(generate_family(FamilySpec("H2", 3, 4)), 6)


def test_membership_out_of_domain_b():
    g = generate_family(FamilySpec("H1", 4, 6))
    bad = is_member_H1(g, 8)
    assert not bad and bad.failed_condition is None


def test_membership_catches_broken_pendant_weights():
    g = generate_family(FamilySpec("H1", 4, 6))
    # flip one leaf edge from weight 2 to weight 1
    edges = [(u, v, 1 if w == 2 else w) for u, v, w in g.edges()]
    broken = Multigraph.from_edges(g.n, edges)
    verdict = is_member_H1(broken, 6)
    assert not verdict and verdict.failed_condition == 3


def test_structure_check_without_domain_gate():
    # the alternating-cycle shape exists at b = 0 mod 4 as well
    g = Multigraph.from_edges(
        6, [(0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (0, 4, 2), (1, 5, 2)]
    )
    assert h1_structure(g, 8)
    assert not is_member_H1(g, 8)
