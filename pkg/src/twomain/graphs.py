"""Immutable graph values: signed graphs, (0,1,2)-multigraphs, simple graphs.

All three kinds store a dense symmetric table of vertex-pair entries
(upper triangle, flattened) with a zero diagonal. Vertices are the
integers 0..n-1. Instances are hashable values: enumeration code shares
them freely across workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


def _tri_index(n: int, u: int, v: int) -> int:
    # caller guarantees u < v
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


class PairTable:
    """Symmetric n-by-n integer table with zero diagonal, stored as a flat tuple."""

    __slots__ = ("n", "table")

    DOMAIN: frozenset = frozenset()
    KIND = "table"

    def __init__(self, n: int, table: Iterable[int]):
        if n < 1:
            raise ValueError("order must be >= 1")
        table = tuple(table)
        if len(table) != n * (n - 1) // 2:
            raise ValueError("table length does not match order")
        bad = set(table) - self.DOMAIN
        if bad:
            raise ValueError(f"entries outside {sorted(self.DOMAIN)}: {sorted(bad)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "table", table)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, int]]):
        """Build from (u, v, value) triples; missing pairs default to 0."""
        flat = [0] * (n * (n - 1) // 2)
        for u, v, x in edges:
            if u == v:
                raise ValueError(f"self-loop forbidden: ({u},{v})")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"vertex out of range: ({u},{v})")
            if u > v:
                u, v = v, u
            flat[_tri_index(n, u, v)] = x
        return cls(n, flat)

    def weight(self, u: int, v: int) -> int:
        if u == v:
            return 0
        if u > v:
            u, v = v, u
        return self.table[_tri_index(self.n, u, v)]

    def degree(self, v: int) -> int:
        # number of incident edges: for signed entries abs() counts each edge once
        return sum(abs(self.weight(v, u)) for u in range(self.n) if u != v)

    def neighbors(self, v: int) -> list[int]:
        return [u for u in range(self.n) if u != v and self.weight(v, u) != 0]

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield (u, v, value) for nonzero pairs, u < v, sorted."""
        n = self.n
        k = 0
        for u in range(n):
            for v in range(u + 1, n):
                x = self.table[k]
                k += 1
                if x != 0:
                    yield (u, v, x)

    def adjacency_rows(self) -> list[list[int]]:
        """Full symmetric matrix as nested lists of Python ints."""
        n = self.n
        rows = [[0] * n for _ in range(n)]
        for u, v, x in self.edges():
            rows[u][v] = x
            rows[v][u] = x
        return rows

    def __eq__(self, other):
        return (
            type(self) is type(other)
            and self.n == other.n
            and self.table == other.table
        )

    def __hash__(self):
        return hash((type(self).__name__, self.n, self.table))

    def __repr__(self):
        es = ", ".join(f"{u}-{v}:{x}" for u, v, x in self.edges())
        return f"{type(self).__name__}(n={self.n}, {{{es}}})"


class SignedGraph(PairTable):
    """Simple graph with edge signs: entries in {0, +1, -1}."""

    DOMAIN = frozenset({0, 1, -1})
    KIND = "signed"


class Multigraph(PairTable):
    """(0,1,2)-multigraph: each vertex pair carries 0, 1 or 2 parallel edges."""

    DOMAIN = frozenset({0, 1, 2})
    KIND = "multigraph"


class SimpleGraph(PairTable):
    """Plain 0/1 adjacency, used for B-graphs and shape enumeration."""

    DOMAIN = frozenset({0, 1})
    KIND = "simple"

    def edge_count(self) -> int:
        return sum(self.table)


def associated_multigraph(s: SignedGraph) -> Multigraph:
    """Recode a signed graph as its associated multigraph (pairwise 1 - sign)."""
    return Multigraph(s.n, (1 - x for x in s.table))


def signed_from_multigraph(m: Multigraph) -> SignedGraph:
    """Inverse recoding: multiplicity w maps back to sign 1 - w."""
    return SignedGraph(m.n, (1 - x for x in m.table))


def b_graph(m: Multigraph) -> SimpleGraph:
    """Collapse parallel edges: adjacent iff multiplicity >= 1."""
    return SimpleGraph(m.n, (1 if x else 0 for x in m.table))


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex edge counts d(v) and length-2 walk counts s(v)."""

    degrees: tuple[int, ...]
    s_values: tuple[int, ...]


def degree_profile(m: Multigraph) -> DegreeProfile:
    """d(v) = sum of incident multiplicities; s(v) = sum over u~v of w(u,v)*d(u)."""
    n = m.n
    d = [0] * n
    for u, v, w in m.edges():
        d[u] += w
        d[v] += w
    s = [0] * n
    for u, v, w in m.edges():
        s[u] += w * d[v]
        s[v] += w * d[u]
    return DegreeProfile(tuple(d), tuple(s))


def net_degree_profile(s: SignedGraph) -> tuple[int, ...]:
    """Per-vertex net-degree: positive minus negative incident edge counts."""
    net = [0] * s.n
    for u, v, x in s.edges():
        net[u] += x
        net[v] += x
    return tuple(net)


def is_net_regular(s: SignedGraph) -> bool:
    net = net_degree_profile(s)
    return len(set(net)) <= 1


def is_connected(g: PairTable) -> bool:
    n = g.n
    if n == 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == n
