"""Canonical forms, isomorphism tests and automorphism orbits.

Brute-force over vertex orderings with three standard cuts: iterated
color refinement (degree sequences and beyond), restriction to
orderings that maximize the running (color, adjacency-column) encoding,
and twin collapsing (interchangeable vertices explored once). Exact for
every input; intended for the desk-scale orders this package works at,
guarded by a configurable cap.
"""

from __future__ import annotations

from .caps import canonical_cap
from .errors import OrderTooLarge
from .graphs import PairTable


def _refined_colors(rows: list[list[int]], n: int) -> list[int]:
    """Iterated neighborhood refinement; returns invariant color ranks.

    Termination is on the induced partition (rank labels may swap between
    rounds even once the classes are stable)."""

    def partition(cs):
        groups: dict[int, list[int]] = {}
        for v, c in enumerate(cs):
            groups.setdefault(c, []).append(v)
        return sorted(groups.values())

    colors = [0] * n
    while True:
        sigs = []
        for v in range(n):
            around = sorted((rows[v][u], colors[u]) for u in range(n) if u != v)
            sigs.append((colors[v], tuple(around)))
        ranking = {s: r for r, s in enumerate(sorted(set(sigs), reverse=True))}
        new = [ranking[s] for s in sigs]
        if partition(new) == partition(colors):
            return new
        colors = new


def _twin_classes(rows: list[list[int]], n: int) -> list[int]:
    """Partition vertices into classes whose pairwise swap is an automorphism."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(n):
        for v in range(u + 1, n):
            if find(u) == find(v):
                continue
            if all(rows[u][x] == rows[v][x] for x in range(n) if x != u and x != v):
                parent[find(v)] = find(u)
    return [find(v) for v in range(n)]


def _canonical_order(rows: list[list[int]], n: int) -> list[int]:
    """Vertex order maximizing the interleaved (color, column) encoding.

    Only orderings whose next (color, column) chunk is maximal given the
    placed prefix can attain the global maximum, so everything else is cut;
    twin classes collapse provably interchangeable candidates.
    """
    colors = _refined_colors(rows, n)
    twins = _twin_classes(rows, n)

    best_enc: list[int] | None = None
    best_perm: list[int] | None = None

    def extend(placed: list[int], used: list[bool], enc: list[int]):
        nonlocal best_enc, best_perm
        equal_prefix = False
        if best_enc is not None:
            ref = best_enc[: len(enc)]
            if enc < ref:
                return
            equal_prefix = enc == ref
        k = len(placed)
        if k == n:
            if best_enc is None or enc > best_enc:
                best_enc = list(enc)
                best_perm = list(placed)
            return
        chunk_best: list[int] | None = None
        chosen: list[int] = []
        for v in range(n):
            if used[v]:
                continue
            chunk = [colors[v]]
            chunk.extend(rows[p][v] for p in placed)
            if chunk_best is None or chunk > chunk_best:
                chunk_best = chunk
                chosen = [v]
            elif chunk == chunk_best:
                chosen.append(v)
        if equal_prefix:
            pos = len(enc)
            if chunk_best < best_enc[pos: pos + len(chunk_best)]:
                return
        enc.extend(chunk_best)
        seen_twins = set()
        for v in chosen:
            t = twins[v]
            if t in seen_twins:
                continue
            seen_twins.add(t)
            placed.append(v)
            used[v] = True
            extend(placed, used, enc)
            used[v] = False
            placed.pop()
        del enc[len(enc) - len(chunk_best):]

    extend([], [False] * n, [])
    assert best_perm is not None
    return best_perm


def _relabeled_table(rows: list[list[int]], perm: list[int]) -> tuple[int, ...]:
    n = len(perm)
    out = []
    for i in range(n):
        pi = perm[i]
        for j in range(i + 1, n):
            out.append(rows[pi][perm[j]])
    return tuple(out)


def canonical_form(g: PairTable, max_order: int | None = None) -> tuple[int, ...]:
    """Canonical key: (n, flattened pair table of the canonically relabeled graph).

    Keys of two graphs of the same kind are equal iff the graphs are
    weight-preserving isomorphic.
    """
    cap = canonical_cap(max_order)
    if g.n > cap:
        raise OrderTooLarge(f"order {g.n} exceeds canonicalization cap {cap}")
    if g.n == 1:
        return (1,)
    rows = g.adjacency_rows()
    perm = _canonical_order(rows, g.n)
    return (g.n,) + _relabeled_table(rows, perm)


def canonical_graph(g: PairTable, max_order: int | None = None):
    """The canonically relabeled copy of g (same kind, deterministic labels)."""
    key = canonical_form(g, max_order)
    return type(g)(key[0], key[1:])


def graph_from_key(key: tuple[int, ...], cls):
    """Rebuild the canonical representative stored in a key."""
    return cls(key[0], key[1:])


def are_isomorphic(g1: PairTable, g2: PairTable, max_order: int | None = None) -> bool:
    """Weight-preserving isomorphism test via canonical keys."""
    if type(g1) is not type(g2) or g1.n != g2.n:
        return False
    if sorted(g1.table) != sorted(g2.table):
        return False
    return canonical_form(g1, max_order) == canonical_form(g2, max_order)


def _find_automorphism(rows, n, colors, pin_src: int, pin_dst: int):
    """Search for an automorphism mapping pin_src to pin_dst; None if impossible."""
    if colors[pin_src] != colors[pin_dst]:
        return None
    order = [pin_src] + [v for v in range(n) if v != pin_src]
    image = [-1] * n
    used = [False] * n

    def place(k: int):
        v = order[k]
        if k == 0:
            cands = [pin_dst]
        else:
            cands = [w for w in range(n) if not used[w] and colors[w] == colors[v]]
        for w in cands:
            ok = True
            for j in range(k):
                u = order[j]
                if rows[v][u] != rows[w][image[u]]:
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used[w] = True
            if k + 1 == n:
                return list(image)
            found = place(k + 1)
            if found is not None:
                return found
            used[w] = False
            image[v] = -1
        return None

    return place(0)


def automorphism_orbit_count(g: PairTable, max_order: int | None = None) -> int:
    """Number of vertex orbits under the weight-preserving automorphism group."""
    cap = canonical_cap(max_order)
    if g.n > cap:
        raise OrderTooLarge(f"order {g.n} exceeds canonicalization cap {cap}")
    n = g.n
    if n == 1:
        return 1
    rows = g.adjacency_rows()
    colors = _refined_colors(rows, n)

    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    for v in range(n):
        for w in range(v + 1, n):
            if find(v) == find(w):
                continue
            auto = _find_automorphism(rows, n, colors, v, w)
            if auto is not None:
                for x in range(n):
                    union(x, auto[x])
    return len({find(v) for v in range(n)})
