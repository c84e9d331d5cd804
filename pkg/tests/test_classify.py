"""Family classification, the six pendant-neighborhood types, and the
cycle mirror-symmetry check."""

import pytest

from twomain import (
    BadParameters, FamilySpec, Multigraph, NoTypeMatches, NotAdjacent,
    NotUnicyclic, UNCLASSIFIED, b_graph, case_of, check_cycle_symmetry,
    classify_two_main, generate_family, six_type_classify, solve_ab,
    two_main_check, unicyclic_decompose,
)
from twomain.enumeration import EnumerationTask, enumerate_graphs


def cycle_with_weights(word):
    n = len(word)
    return Multigraph.from_edges(n, [(i, (i + 1) % n, word[i]) for i in range(n)])


def test_case_mapping():
    assert case_of(0, 5) == 1
    assert case_of(1, -2) == 2
    assert case_of(3, 1) == 3
    assert case_of(2, 0) == 4
    assert case_of(1, 0) == 4
    assert case_of(0, 0) is None
    assert case_of(-1, 3) is None


def test_classify_cycle_families():
    r = classify_two_main(generate_family(FamilySpec("U3", 1)))
    assert (r.case_tag, r.family_tag, r.family_params) == (2, "U3", {"t": 1})
    assert (r.certificate.a, r.certificate.b) == (1, 8)

    r = classify_two_main(generate_family(FamilySpec("U1", 1)))
    assert (r.case_tag, r.family_tag) == (3, "U1")
    assert (r.certificate.a, r.certificate.b) == (3, -1)


def test_classify_h1():
    g = generate_family(FamilySpec("H1", 4, 6))
    r = classify_two_main(g)
    assert (r.case_tag, r.family_tag) == (1, "H1")
    assert r.family_params == {"b": 6, "t": 4}


def test_classify_block_families_match_their_generators():
    for tag, b, t in (("H2", 4, 3), ("H2", 8, 3), ("H3", 6, 3), ("H3", 10, 4)):
        g = generate_family(FamilySpec(tag, t, b))
        r = classify_two_main(g)
        assert (r.case_tag, r.family_tag) == (2, tag)
        assert r.family_params == {"b": b, "t": t}


def test_classify_preconditions():
    regular = cycle_with_weights((1, 1, 1, 1))
    with pytest.raises(ValueError):
        classify_two_main(regular)
    tree = Multigraph.from_edges(3, [(0, 1, 1), (1, 2, 2)])
    if two_main_check(tree).two_main:
        with pytest.raises(NotUnicyclic):
            classify_two_main(tree)


def test_classify_unclassified_open_case():
    # triangle with w(0,1)=2 and one double pendant on each of 0 and 1: (a,b)=(2,6)
    g = Multigraph.from_edges(5, [(0, 1, 2), (0, 2, 1), (1, 2, 1), (0, 3, 2), (1, 4, 2)])
    ev = two_main_check(g)
    assert ev.two_main
    r = classify_two_main(g, ev)
    assert r.case_tag == 3
    assert r.family_tag == UNCLASSIFIED


def test_six_type_path_is_type_one():
    p3 = Multigraph.from_edges(3, [(0, 1, 1), (1, 2, 1)])
    cert = solve_ab(p3)
    assert (cert.a, cert.b) == (0, 2)
    res = six_type_classify(p3, 1, 2, cert)
    assert res.type_index == 1
    assert (res.d_v1, res.d_v2) == (2, 1)


def test_six_type_block_hub_is_type_two():
    g = generate_family(FamilySpec("H2", 3, 4))
    cert = solve_ab(g)
    decomp = unicyclic_decompose(b_graph(g))
    # inner hub (off-cycle, weight-1 link to a cycle hub, weight-2 pendants)
    inner = next(
        v for v in decomp.forest_vertices
        if any(g.weight(v, u) == 1 for u in g.neighbors(v))
        and any(g.weight(v, u) == 2 for u in g.neighbors(v))
    )
    cycle_hub = next(u for u in g.neighbors(inner) if g.weight(inner, u) == 1)
    res = six_type_classify(g, inner, cycle_hub, cert)
    assert res.type_index == 2
    assert res.d_v1 == 1 + cert.b // 2


def test_six_type_star_is_type_one():
    star = Multigraph.from_edges(4, [(0, 1, 1), (0, 2, 1), (0, 3, 1)])
    cert = solve_ab(star)
    assert (cert.a, cert.b) == (0, 3)
    res = six_type_classify(star, 0, 1, cert)
    assert res.type_index == 1 and (res.d_v1, res.d_v2) == (3, 1)


def test_six_type_preconditions():
    from twomain.spectral import ABCertificate

    p3 = Multigraph.from_edges(3, [(0, 1, 1), (1, 2, 1)])
    cert = solve_ab(p3)
    with pytest.raises(NotAdjacent):
        six_type_classify(p3, 0, 2, cert)
    with pytest.raises(ValueError):
        # neighbor 2 of v1=1 is not pendant in C3
        tri = Multigraph.from_edges(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
        six_type_classify(tri, 1, 0, solve_ab(p3))
    wrong = ABCertificate(a=5, b=5, residuals=(0, 0, 0),
                          j_is_eigenvector=False, status="valid")
    with pytest.raises(NoTypeMatches):
        six_type_classify(p3, 1, 2, wrong)


def test_six_type_unique_on_enumerated_two_main_trees():
    base = b_graph
    for n in (4, 5, 6):
        task = EnumerationTask(n, "tree", filter="two-main-only")
        for rec in enumerate_graphs(task):
            g = rec.graph
            cert = rec.certificate
            if not cert.valid:
                continue
            simple = base(g)
            for v1 in range(n):
                nbrs = g.neighbors(v1)
                for v2 in nbrs:
                    others = [x for x in nbrs if x != v2]
                    if not others:
                        continue
                    if any(simple.degree(x) != 1 for x in others):
                        continue
                    res = six_type_classify(g, v1, v2, cert)
                    assert res.type_index in (1, 2, 3, 4, 5, 6)


def test_mixed_pendant_weights_force_b_zero():
    for kind in ("tree", "unicyclic"):
        for n in (3, 4, 5, 6):
            task = EnumerationTask(n, kind, filter="two-main-only")
            for rec in enumerate_graphs(task):
                cert = rec.certificate
                if not cert.valid:
                    continue
                g = rec.graph
                simple = b_graph(g)
                for v1 in range(n):
                    pendants = [x for x in g.neighbors(v1) if simple.degree(x) == 1]
                    ws = {g.weight(x, v1) for x in pendants}
                    if ws == {1, 2}:
                        assert cert.b == 0, (rec.key, cert)


def test_cycle_symmetry_examples():
    u1 = cycle_with_weights((2, 1, 1, 1))
    assert check_cycle_symmetry(u1, 0, 1) is True

    u5 = cycle_with_weights((2, 2, 2, 1))
    # anchor at the middle double edge of the (2,2,2) run: edge (1,2)
    assert check_cycle_symmetry(u5, 1, 2) is True


def test_cycle_symmetry_preconditions():
    u1 = cycle_with_weights((2, 1, 1, 1))
    with pytest.raises(BadParameters):
        check_cycle_symmetry(u1, 1, 2)  # weight-1 anchor
    regular = cycle_with_weights((2, 2, 2, 2))
    with pytest.raises(BadParameters):
        check_cycle_symmetry(regular, 0, 1)  # one main eigenvalue
    u5 = cycle_with_weights((2, 2, 2, 1))
    with pytest.raises(BadParameters):
        check_cycle_symmetry(u5, 0, 1)  # asymmetric first step: 1 vs 2
    pendant = Multigraph.from_edges(4, [(0, 1, 2), (1, 2, 1), (0, 2, 1), (0, 3, 1)])
    if two_main_check(pendant).two_main:
        with pytest.raises(BadParameters):
            check_cycle_symmetry(pendant, 0, 1)


def test_cycle_symmetry_holds_on_all_enumerated_two_main_cycles():
    for n in range(3, 11):
        task = EnumerationTask(n, "cycle", filter="two-main-only")
        for rec in enumerate_graphs(task):
            g = rec.graph
            for u, v, w in g.edges():
                if w != 2:
                    continue
                cyc = unicyclic_decompose(b_graph(g)).cycle_vertices
                pos = {x: i for i, x in enumerate(cyc)}
                length = len(cyc)

                def nbr(x, avoid):
                    i = pos[x]
                    a, b2 = cyc[(i - 1) % length], cyc[(i + 1) % length]
                    return a if b2 == avoid else b2

                if g.weight(u, nbr(u, v)) == g.weight(v, nbr(v, u)):
                    assert check_cycle_symmetry(g, u, v) is True
