"""Exhaustive enumeration of (0,1,2)-multigraphs over small B-graphs.

B-graph shapes are generated constructively (trees by leaf augmentation,
unicyclic graphs as tree-plus-edge, connected graphs by vertex
augmentation), deduplicated by canonical form. Every weighting of every
shape is canonicalized; the surviving canonical keys form the output,
sorted, so reports are identical for any worker count. Workers only
produce keys; analysis runs once per isomorphism class during the merge.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from itertools import product

from .canon import canonical_form, graph_from_key
from .caps import canonical_cap, enum_cap
from .classify import ClassificationResult, classify_two_main
from .errors import NotUnicyclic, OrderTooLarge, OrderTooSmall
from .graphs import Multigraph, SimpleGraph, b_graph
from .spectral import two_main_check
from .structure import unicyclic_decompose

KINDS = ("cycle", "unicyclic", "tree", "any-connected")


@dataclass(frozen=True)
class EnumerationTask:
    order: int
    bgraph_kind: str
    filter: str = "all"  # "all" or "two-main-only"
    classify: bool = False


@dataclass(frozen=True)
class EnumerationRecord:
    graph: Multigraph
    key: tuple[int, ...]
    walk_rank: int
    certificate: object
    classification: ClassificationResult | None


_shape_cache: dict[tuple[str, int], list[SimpleGraph]] = {}


def tree_shapes(n: int) -> list[SimpleGraph]:
    """All non-isomorphic trees of order n, grown by leaf augmentation."""
    if n < 1:
        return []
    cached = _shape_cache.get(("tree", n))
    if cached is not None:
        return cached
    if n == 1:
        shapes = [SimpleGraph(1, ())]
    else:
        shapes = []
        seen = set()
        for small in tree_shapes(n - 1):
            for v in range(small.n):
                edges = list(small.edges()) + [(v, small.n, 1)]
                grown = SimpleGraph.from_edges(n, edges)
                key = canonical_form(grown)
                if key not in seen:
                    seen.add(key)
                    shapes.append(graph_from_key(key, SimpleGraph))
        shapes.sort(key=lambda g: g.table)
    _shape_cache[("tree", n)] = shapes
    return shapes


def unicyclic_shapes(n: int) -> list[SimpleGraph]:
    """All non-isomorphic connected unicyclic graphs of order n
    (every one is a spanning tree plus one extra edge)."""
    if n < 3:
        return []
    cached = _shape_cache.get(("unicyclic", n))
    if cached is not None:
        return cached
    shapes = []
    seen = set()
    for tree in tree_shapes(n):
        for u in range(n):
            for v in range(u + 1, n):
                if tree.weight(u, v):
                    continue
                grown = SimpleGraph.from_edges(n, list(tree.edges()) + [(u, v, 1)])
                key = canonical_form(grown)
                if key not in seen:
                    seen.add(key)
                    shapes.append(graph_from_key(key, SimpleGraph))
    shapes.sort(key=lambda g: g.table)
    _shape_cache[("unicyclic", n)] = shapes
    return shapes


def connected_shapes(n: int) -> list[SimpleGraph]:
    """All non-isomorphic connected graphs of order n, by vertex augmentation."""
    if n < 1:
        return []
    cached = _shape_cache.get(("connected", n))
    if cached is not None:
        return cached
    if n == 1:
        shapes = [SimpleGraph(1, ())]
    else:
        shapes = []
        seen = set()
        for small in connected_shapes(n - 1):
            base_edges = list(small.edges())
            for mask in range(1, 1 << small.n):
                extra = [(v, small.n, 1) for v in range(small.n) if mask >> v & 1]
                grown = SimpleGraph.from_edges(n, base_edges + extra)
                key = canonical_form(grown)
                if key not in seen:
                    seen.add(key)
                    shapes.append(graph_from_key(key, SimpleGraph))
        shapes.sort(key=lambda g: g.table)
    _shape_cache[("connected", n)] = shapes
    return shapes


def _dihedral_min(word: tuple[int, ...]) -> tuple[int, ...]:
    n = len(word)
    doubled = word + word
    rev = word[::-1] + word[::-1]
    return min(
        min(doubled[i:i + n] for i in range(n)),
        min(rev[i:i + n] for i in range(n)),
    )


def _cycle_block_keys(args) -> set[tuple[int, ...]]:
    """Canonical keys of all cycle weightings with a fixed prefix.

    A weighting is processed only when its weight word is the dihedral
    minimum of its class (isomorphisms of weighted cycles are exactly the
    dihedral symmetries), so each class is canonicalized once globally.
    """
    n, prefix, cap = args
    keys = set()
    for suffix in product((1, 2), repeat=n - len(prefix)):
        word = prefix + suffix
        if word != _dihedral_min(word):
            continue
        g = Multigraph.from_edges(n, [(i, (i + 1) % n, word[i]) for i in range(n)])
        keys.add(canonical_form(g, cap))
    return keys


def _shape_block_keys(args) -> set[tuple[int, ...]]:
    """Canonical keys of all weightings of one B-shape with a fixed prefix."""
    n, edges, prefix, cap = args
    keys = set()
    rest = len(edges) - len(prefix)
    for suffix in product((1, 2), repeat=rest):
        weights = prefix + suffix
        g = Multigraph.from_edges(
            n, [(u, v, w) for (u, v, _), w in zip(edges, weights)]
        )
        keys.add(canonical_form(g, cap))
    return keys


def _prefix_blocks(length: int, jobs: int):
    if jobs <= 1 or length == 0:
        return [()]
    p = min(length, max(1, (4 * jobs - 1).bit_length()))
    return list(product((1, 2), repeat=p))


def _shapes_for(kind: str, n: int) -> list[SimpleGraph]:
    if kind == "unicyclic":
        return unicyclic_shapes(n)
    if kind == "tree":
        return tree_shapes(n)
    if kind == "any-connected":
        return connected_shapes(n)
    raise ValueError(f"unknown B-graph kind: {kind}")


def enumerate_keys(task: EnumerationTask, jobs: int = 1,
                   max_order: int | None = None,
                   canon_order: int | None = None) -> list[tuple[int, ...]]:
    """Sorted canonical keys of every isomorphism class for the task."""
    kind, n = task.bgraph_kind, task.order
    if kind not in KINDS:
        raise ValueError(f"unknown B-graph kind: {kind}")
    cap = enum_cap(kind, max_order)
    if n > cap:
        raise OrderTooLarge(f"order {n} exceeds enumeration cap {cap} for {kind}")
    if kind in ("cycle", "unicyclic") and n < 3:
        raise OrderTooSmall(f"{kind} B-graphs need order >= 3")
    ccap = canonical_cap(canon_order)
    if n > ccap:
        raise OrderTooLarge(f"order {n} exceeds canonicalization cap {ccap}")

    if kind == "cycle":
        worker = _cycle_block_keys
        blocks = [(n, pre, ccap) for pre in _prefix_blocks(n, jobs)]
    else:
        worker = _shape_block_keys
        shapes = _shapes_for(kind, n)
        blocks = []
        for shape in shapes:
            edges = tuple(shape.edges())
            for pre in _prefix_blocks(len(edges), jobs):
                blocks.append((n, edges, pre, ccap))

    if jobs <= 1:
        key_sets = [worker(blk) for blk in blocks]
    else:
        with multiprocessing.Pool(jobs) as pool:
            key_sets = pool.map(worker, blocks)
    merged: set[tuple[int, ...]] = set()
    for ks in key_sets:
        merged |= ks
    return sorted(merged)


def analyze_key(key: tuple[int, ...], classify: bool = False,
                canon_order: int | None = None) -> EnumerationRecord:
    """Full analysis of one canonical representative."""
    g = graph_from_key(key, Multigraph)
    ev = two_main_check(g)
    classification = None
    if classify and ev.two_main:
        try:
            classification = classify_two_main(g, ev, canon_order)
        except NotUnicyclic:
            classification = None
    return EnumerationRecord(g, key, ev.walk_rank, ev.certificate, classification)


def enumerate_graphs(task: EnumerationTask, jobs: int = 1,
                     max_order: int | None = None,
                     canon_order: int | None = None) -> list[EnumerationRecord]:
    """Enumerate, deduplicate, analyze and (optionally) classify, in
    canonical key order. Output is independent of the worker count."""
    keys = enumerate_keys(task, jobs, max_order, canon_order)
    records = []
    for key in keys:
        rec = analyze_key(key, task.classify, canon_order)
        if task.filter == "two-main-only" and rec.walk_rank != 2:
            continue
        records.append(rec)
    return records


def is_unicyclic_b_graph(g: Multigraph) -> bool:
    try:
        unicyclic_decompose(b_graph(g))
        return True
    except NotUnicyclic:
        return False
