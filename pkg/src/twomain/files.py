"""Line-oriented graph file format.

Header `multigraph <n>` or `signed <n>`, then one `e <u> <v> <x>` line per
edge with 0 <= u < v < n; x is 1 or 2 for multigraphs and +1 or -1 for
signed graphs. Lines starting with `#` and blank lines are ignored.
Serialization sorts edges by (u, v), so parse-serialize round-trips are
byte-identical on normalized files.
"""

from __future__ import annotations

from .errors import GraphParseError
from .graphs import Multigraph, PairTable, SignedGraph

_KINDS = {"multigraph": Multigraph, "signed": SignedGraph}
_VALUES = {"multigraph": {1, 2}, "signed": {1, -1}}


def parse_graph_file(text: str) -> PairTable:
    """Parse a graph file; raises GraphParseError with the line number."""
    kind = None
    n = 0
    edges: dict[tuple[int, int], int] = {}
    header_seen = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if not header_seen:
            if len(tokens) != 2 or tokens[0] not in _KINDS:
                raise GraphParseError(lineno, "expected header 'multigraph <n>' or 'signed <n>'")
            kind = tokens[0]
            try:
                n = int(tokens[1])
            except ValueError:
                raise GraphParseError(lineno, f"order is not an integer: {tokens[1]!r}")
            if n < 1:
                raise GraphParseError(lineno, f"order must be >= 1, got {n}")
            header_seen = True
            continue
        if tokens[0] != "e":
            raise GraphParseError(lineno, f"unknown line tag {tokens[0]!r}")
        if len(tokens) != 4:
            raise GraphParseError(lineno, "edge line needs exactly 'e <u> <v> <x>'")
        try:
            u, v, x = int(tokens[1]), int(tokens[2]), int(tokens[3])
        except ValueError:
            raise GraphParseError(lineno, f"non-integer edge fields: {line!r}")
        if u == v:
            raise GraphParseError(lineno, "self-loop forbidden")
        if not (0 <= u < v < n):
            raise GraphParseError(lineno, f"edge must satisfy 0 <= u < v < n, got ({u},{v}) with n={n}")
        if (u, v) in edges:
            raise GraphParseError(lineno, f"duplicate edge ({u},{v})")
        if x not in _VALUES[kind]:
            allowed = "1 or 2" if kind == "multigraph" else "+1 or -1"
            raise GraphParseError(lineno, f"edge value must be {allowed}, got {x}")
        edges[(u, v)] = x
    if not header_seen:
        raise GraphParseError(1, "empty file: missing header")
    return _KINDS[kind].from_edges(n, [(u, v, x) for (u, v), x in edges.items()])


def serialize_graph(g: PairTable) -> str:
    """Normalized file text: header plus (u, v)-sorted edge lines."""
    if isinstance(g, Multigraph):
        head = f"multigraph {g.n}"
        fmt = str
    elif isinstance(g, SignedGraph):
        head = f"signed {g.n}"
        fmt = lambda x: f"+{x}" if x > 0 else str(x)
    else:
        raise TypeError(f"cannot serialize {type(g).__name__}")
    lines = [head]
    for u, v, x in g.edges():
        lines.append(f"e {u} {v} {fmt(x)}")
    return "\n".join(lines) + "\n"
