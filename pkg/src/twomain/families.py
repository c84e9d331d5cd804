"""Generators and membership predicates for the classified families.

Cycle-pattern families are weighted cycles built from a repeating run of
double and single edges. The block families glue t copies of a fixed
hub-plus-pendants block into a ring by identifying consecutive connector
vertices. The remaining family is an infinite set with free tree shapes:
a generator produces one canonical representative, and membership of an
arbitrary multigraph is decided by a structural predicate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadParameters, NotUnicyclic, OrderTooSmall, UnknownTag
from .graphs import Multigraph, b_graph, degree_profile
from .structure import unicyclic_decompose

ONE_MAIN = "ONE_MAIN"

# (double-edge run, single-edge run) per cycle-pattern tag
U_PATTERNS = {
    "U1": (1, 3),
    "U2": (1, 2),
    "U3": (2, 1),
    "U4": (3, 2),
    "U5": (3, 1),
    "U6": (1, 1),
    "U7": (1, 0),
}

U_TAGS = tuple(U_PATTERNS)
H_TAGS = ("H1", "H2", "H3")
FAMILY_TAGS = U_TAGS + H_TAGS

_TABLE_AB = {"U1": (3, -1), "U2": (2, 2), "U3": (1, 8), "U4": (4, -2), "U5": (3, 2)}


@dataclass(frozen=True)
class CyclicPattern:
    """t-fold repetition of n1 double edges then n2 single edges around a cycle."""

    n1: int
    n2: int
    t: int

    def weight_word(self) -> tuple[int, ...]:
        return ((2,) * self.n1 + (1,) * self.n2) * self.t


@dataclass(frozen=True)
class FamilySpec:
    """Family identifier with parameters; b applies to the H tags only."""

    tag: str
    t: int
    b: int | None = None


def cycle_multigraph(weights: tuple[int, ...] | list[int]) -> Multigraph:
    """Weighted cycle: edge (i, i+1 mod n) carries weights[i]."""
    n = len(weights)
    if n < 3:
        raise OrderTooSmall(f"cycle needs order >= 3, got {n}")
    return Multigraph.from_edges(
        n, [(i, (i + 1) % n, weights[i]) for i in range(n)]
    )


def generate_cyclic(p: CyclicPattern) -> Multigraph:
    """Realize a cyclic pattern as a weighted cycle multigraph."""
    if p.n1 < 1 or p.n2 < 0 or p.t < 1:
        raise BadParameters(f"pattern out of domain: n1={p.n1}, n2={p.n2}, t={p.t}")
    word = p.weight_word()
    if len(word) < 3:
        raise OrderTooSmall(f"pattern order {(p.n1 + p.n2) * p.t} < 3")
    return cycle_multigraph(word)


def expected_ab(tag: str):
    """Certificate pair the two-main cycle families must produce, or ONE_MAIN."""
    if tag in _TABLE_AB:
        return _TABLE_AB[tag]
    if tag in ("U6", "U7"):
        return ONE_MAIN
    raise UnknownTag(tag)


def _h2_block_graph(b: int, t: int) -> Multigraph:
    # ring of t blocks: bridge, hub (1 + b/2 odd), one off-cycle hub with
    # weight-2 pendants; pendant counts are forced by the stated degrees
    k = b // 4
    stride = 2 * k + 2
    edges = []
    for i in range(t):
        base = i * stride
        bridge, hub = base, base + 1
        hub_leaves = [base + 2 + j for j in range(k - 1)]
        inner = base + k + 1
        inner_leaves = [base + k + 2 + j for j in range(k)]
        edges.append((bridge, hub, 1))
        edges.append((hub, inner, 1))
        edges.extend((hub, leaf, 2) for leaf in hub_leaves)
        edges.extend((inner, leaf, 2) for leaf in inner_leaves)
        edges.append((hub, ((i + 1) % t) * stride, 1))
    return Multigraph.from_edges(t * stride, edges)


def _h3_block_graph(b: int, t: int) -> Multigraph:
    # ring of t blocks: bridge, then two adjacent hubs (1 + b/2 even),
    # each carrying k weight-2 pendants
    k = (b - 2) // 4
    stride = 2 * k + 3
    edges = []
    for i in range(t):
        base = i * stride
        bridge, hub_a = base, base + 1
        a_leaves = [base + 2 + j for j in range(k)]
        hub_b = base + k + 2
        b_leaves = [base + k + 3 + j for j in range(k)]
        edges.append((bridge, hub_a, 1))
        edges.append((hub_a, hub_b, 1))
        edges.extend((hub_a, leaf, 2) for leaf in a_leaves)
        edges.extend((hub_b, leaf, 2) for leaf in b_leaves)
        edges.append((hub_b, ((i + 1) % t) * stride, 1))
    return Multigraph.from_edges(t * stride, edges)


def _h1_representative(b: int, t: int) -> Multigraph:
    # weight-1 cycle of length t alternating degree-2 bridges and degree-b/2
    # hubs; each hub carries k-1 weight-2 leaves plus one depth-2 pendant
    # path whose middle vertex carries k-1 weight-2 leaves of its own
    k = (b - 2) // 4
    block = 2 * k + 1
    edges = [(i, (i + 1) % t, 1) for i in range(t)]
    hubs = [i for i in range(t) if i % 2 == 1]
    for idx, hub in enumerate(hubs):
        base = t + idx * block
        hub_leaves = [base + j for j in range(k - 1)]
        v2, v1, v0 = base + k - 1, base + k, base + k + 1
        mid_leaves = [base + k + 2 + j for j in range(k - 1)]
        edges.extend((hub, leaf, 2) for leaf in hub_leaves)
        edges.append((hub, v2, 1))
        edges.append((v2, v1, 1))
        edges.append((v1, v0, 2))
        edges.extend((v1, leaf, 2) for leaf in mid_leaves)
    return Multigraph.from_edges(t + len(hubs) * block, edges)


def generate_family(spec: FamilySpec) -> Multigraph:
    """Build the family member for a tag and parameters.

    Raises BadParameters naming the violated constraint, UnknownTag for
    unrecognized tags.
    """
    tag, t, b = spec.tag, spec.t, spec.b
    if tag in U_PATTERNS:
        if t < 1:
            raise BadParameters(f"{tag}: t must be >= 1, got {t}")
        n1, n2 = U_PATTERNS[tag]
        order = (n1 + n2) * t
        if order >= 3:
            return generate_cyclic(CyclicPattern(n1, n2, t))
        word = CyclicPattern(n1, n2, t).weight_word()
        if order == 2 and len(set(word)) == 1 and word[0] == 2:
            # the 2-vertex ring with both pattern slots agreeing on a double
            # edge collapses to the double edge itself (only U7 with t=2)
            return Multigraph.from_edges(2, [(0, 1, 2)])
        raise BadParameters(f"{tag}: t={t} yields order {order} < 3 with no valid degenerate form")
    if tag == "H1":
        if b is None:
            raise BadParameters("H1: b is required")
        if b % 4 != 2 or b < 6:
            raise BadParameters("H1: b must be congruent to 2 mod 4 and >= 6")
        if t < 4 or t % 2 != 0:
            raise BadParameters("H1: t must be even and >= 4")
        return _h1_representative(b, t)
    if tag == "H2":
        if b is None:
            raise BadParameters("H2: b is required")
        if b % 4 != 0 or b < 4:
            raise BadParameters("H2: b must be a positive multiple of 4")
        if t < 3:
            raise BadParameters("H2: t must be >= 3")
        return _h2_block_graph(b, t)
    if tag == "H3":
        if b is None:
            raise BadParameters("H3: b is required")
        if b % 4 != 2 or b < 6:
            raise BadParameters("H3: b must be congruent to 2 mod 4 and >= 6")
        if t < 3:
            raise BadParameters("H3: t must be >= 3")
        return _h3_block_graph(b, t)
    raise UnknownTag(f"unknown family tag: {tag}")


@dataclass(frozen=True)
class H1Membership:
    """Membership verdict with the first failed condition (1, 2 or 3)."""

    is_member: bool
    failed_condition: int | None
    detail: str

    def __bool__(self) -> bool:
        return self.is_member


def _no(cond: int | None, detail: str) -> H1Membership:
    return H1Membership(False, cond, detail)


def is_member_H1(m: Multigraph, b: int) -> H1Membership:
    """Structural membership test for the alternating-cycle pendant family.

    Condition 1: unicyclic B-graph. Condition 2: weight-1 cycle whose
    degrees alternate 2 and b/2. Condition 3: pendant trees follow the
    distance parity rule (odd distance to the cycle -> degree 2, even ->
    degree b/2), every leaf sits at odd distance, and an edge carries
    weight 2 exactly when its deeper endpoint is a leaf.
    """
    if b % 4 != 2 or b < 6:
        return _no(None, f"b={b} outside domain (must be 2 mod 4 and >= 6)")
    return h1_structure(m, b)


def h1_structure(m: Multigraph, b: int) -> H1Membership:
    """The three structural conditions alone, without the b parity gate
    (enumeration finds two-main graphs with this shape at b = 0 mod 4)."""
    base = b_graph(m)
    try:
        decomp = unicyclic_decompose(base)
    except NotUnicyclic as exc:
        return _no(1, f"B-graph not unicyclic: {exc}")

    half = b // 2
    deg = degree_profile(m).degrees
    cyc = decomp.cycle_vertices
    length = len(cyc)
    for i in range(length):
        u, v = cyc[i], cyc[(i + 1) % length]
        if m.weight(u, v) != 1:
            return _no(2, f"cycle edge ({u},{v}) has weight {m.weight(u, v)} != 1")
    for i in range(length):
        u, v = cyc[i], cyc[(i + 1) % length]
        if {deg[u], deg[v]} != {2, half}:
            return _no(
                2,
                f"cycle degrees do not alternate 2 and {half}: "
                f"d({u})={deg[u]}, d({v})={deg[v]}",
            )

    # distances from the cycle through the pendant forest
    dist = {v: 0 for v in cyc}
    frontier = list(cyc)
    parent: dict[int, int] = {}
    while frontier:
        nxt = []
        for x in frontier:
            for u in base.neighbors(x):
                if u not in dist:
                    dist[u] = dist[x] + 1
                    parent[u] = x
                    nxt.append(u)
        frontier = nxt

    for x in sorted(decomp.forest_vertices):
        is_leaf = base.degree(x) == 1
        want_deg = 2 if dist[x] % 2 == 1 else half
        if deg[x] != want_deg:
            return _no(
                3,
                f"forest vertex {x} at distance {dist[x]} has degree "
                f"{deg[x]}, expected {want_deg}",
            )
        if is_leaf and dist[x] % 2 == 0:
            return _no(3, f"leaf {x} sits at even distance {dist[x]} from the cycle")
        want_w = 2 if is_leaf else 1
        got_w = m.weight(x, parent[x])
        if got_w != want_w:
            return _no(
                3,
                f"edge ({x},{parent[x]}) has weight {got_w}, expected {want_w}",
            )
    return H1Membership(True, None, "member")
