"""Unicyclic decomposition and pendant-tree path utilities for B-graphs."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAdjacent, NotUnicyclic
from .graphs import SimpleGraph, is_connected


@dataclass(frozen=True)
class UnicyclicDecomposition:
    """The unique cycle (in traversal order) and the attached pendant forest."""

    cycle_vertices: tuple[int, ...]
    forest_vertices: frozenset[int]
    attachment: dict[int, tuple[int, ...]]


def unicyclic_decompose(g: SimpleGraph) -> UnicyclicDecomposition:
    """Split a connected unicyclic simple graph into cycle and forest.

    Raises NotUnicyclic when the graph is disconnected or |E| != |V|.
    """
    n = g.n
    if not is_connected(g):
        raise NotUnicyclic("graph is disconnected")
    if g.edge_count() != n:
        raise NotUnicyclic(f"|E| = {g.edge_count()} != |V| = {n}")

    # strip pendant vertices until only the cycle remains
    alive = [True] * n
    deg = [g.degree(v) for v in range(n)]
    queue = [v for v in range(n) if deg[v] == 1]
    while queue:
        v = queue.pop()
        alive[v] = False
        for u in g.neighbors(v):
            if alive[u]:
                deg[u] -= 1
                if deg[u] == 1:
                    queue.append(u)
    cycle_set = {v for v in range(n) if alive[v]}

    start = min(cycle_set)
    prev = -1
    cur = start
    order = [start]
    while True:
        nxt = min(u for u in g.neighbors(cur) if u in cycle_set and u != prev)
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt

    forest = frozenset(range(n)) - cycle_set
    attachment = {}
    for hub in order:
        roots = tuple(sorted(u for u in g.neighbors(hub) if u in forest))
        if roots:
            attachment[hub] = roots
    return UnicyclicDecomposition(tuple(order), forest, attachment)


def _tree_paths_from(g: SimpleGraph, v: int, allowed: set[int]):
    """All maximal paths from v staying inside `allowed` (a tree vertex set)."""
    out = []

    def walk(path: list[int]):
        tip = path[-1]
        extended = False
        for u in sorted(g.neighbors(tip)):
            if u in allowed and u not in path:
                extended = True
                path.append(u)
                walk(path)
                path.pop()
        if not extended:
            out.append(tuple(path))

    walk([v])
    return out


def longest_v_path(g: SimpleGraph, v: int, within: set[int] | None = None) -> tuple[int, ...]:
    """Longest path starting at v in a tree; ties resolved to the
    lexicographically smallest vertex sequence. Length is counted in edges."""
    allowed = set(range(g.n)) if within is None else set(within)
    candidates = _tree_paths_from(g, v, allowed)
    return min(candidates, key=lambda p: (-len(p), p))


@dataclass(frozen=True)
class VertexRole:
    """A neighbor of `anchor` whose deepest path away from it has `depth` vertices."""

    anchor: int
    depth: int


def vertex_role(g: SimpleGraph, v: int, anchor: int) -> VertexRole:
    """Depth of v relative to anchor: vertex count of the longest v-path
    in the tree with anchor removed."""
    if g.weight(v, anchor) == 0:
        raise NotAdjacent(f"{v} is not adjacent to {anchor}")
    allowed = set(range(g.n)) - {anchor}
    path = longest_v_path(g, v, within=allowed)
    return VertexRole(anchor=anchor, depth=len(path))


def component_of(g: SimpleGraph, v: int, excluded: set[int]) -> set[int]:
    """Vertices reachable from v without passing through `excluded`."""
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for u in g.neighbors(x):
            if u not in seen and u not in excluded:
                seen.add(u)
                stack.append(u)
    return seen
