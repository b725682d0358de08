"""Circle enumeration and the definitional balance/consistency oracles.

The enumerator works on signed or marked multigraphs: digons come from
unordered parallel-edge pairs, longer circles from an elementary vertex-cycle
search confined to biconnected blocks, expanded over every choice of parallel
edge.  Cycle counts grow exponentially, so enumeration carries a hard cap;
these oracles are desk-scale tools by design.
"""

from __future__ import annotations

import itertools
from collections import defaultdict, deque
from typing import NamedTuple, Optional

from ._traversal import biconnected_components
from .core import Circle, GraphError, Sign, SignedGraph, sign_product

DEFAULT_CIRCLE_CAP = 1_000_000


class CircleLimitError(GraphError):
    """Raised when enumeration would exceed the configured circle cap."""


class ConsistencyResult(NamedTuple):
    consistent: bool
    witness: Optional[Circle]


def _parallel_groups(edge_triples):
    groups = defaultdict(list)
    for eid, u, v in edge_triples:
        groups[(min(u, v), max(u, v))].append(eid)
    return {pair: sorted(eids) for pair, eids in sorted(groups.items())}


def _vertex_cycles_through(adj, start, banned):
    """Elementary vertex cycles (length >= 3) through ``start``.

    ``adj`` maps vertex -> sorted distinct neighbours.  Cycles visiting any
    vertex in ``banned`` are skipped; each cycle is produced once (the reverse
    traversal is suppressed by requiring path[1] < path[-1]).
    """
    path = [start]
    on_path = {start}
    stack = [iter(adj[start])]
    while stack:
        w = next(stack[-1], None)
        if w is None:
            stack.pop()
            on_path.discard(path.pop())
            continue
        if w == start:
            if len(path) >= 3 and path[1] < path[-1]:
                yield tuple(path)
            continue
        if w in on_path or w in banned:
            continue
        path.append(w)
        on_path.add(w)
        stack.append(iter(adj[w]))


def _circles(graph, targets, max_circles):
    """Yield canonical circles of ``graph`` containing a target vertex.

    ``targets=None`` means every vertex, i.e. full enumeration.  Each circle
    is yielded exactly once: at its first target in sorted order.
    """
    triples = graph.edge_triples()
    count = 0

    def emit(circle):
        nonlocal count
        count += 1
        if count > max_circles:
            raise CircleLimitError(f"more than {max_circles} circles")
        return circle

    target_set = None if targets is None else set(targets)
    for (u, v), eids in _parallel_groups(triples).items():
        if len(eids) < 2:
            continue
        if target_set is not None and u not in target_set and v not in target_set:
            continue
        for a, b in itertools.combinations(eids, 2):
            yield emit(Circle((a, b), (u, v)).canonical())

    for block_vertices, block_edges in biconnected_components(
        graph.vertex_ids, triples
    ):
        if len(block_edges) < 3:
            continue
        block_triples = [t for t in triples if t[0] in block_edges]
        pair_edges = _parallel_groups(block_triples)
        adj = {bv: set() for bv in block_vertices}
        for _, u, v in block_triples:
            adj[u].add(v)
            adj[v].add(u)
        adj = {bv: tuple(sorted(ws)) for bv, ws in adj.items()}
        if target_set is None:
            block_targets = sorted(block_vertices)
        else:
            block_targets = sorted(block_vertices & target_set)
        for i, t in enumerate(block_targets):
            banned = set(block_targets[:i])
            for vertex_cycle in _vertex_cycles_through(adj, t, banned):
                choices = [
                    pair_edges[
                        (
                            min(vertex_cycle[j], vertex_cycle[(j + 1) % len(vertex_cycle)]),
                            max(vertex_cycle[j], vertex_cycle[(j + 1) % len(vertex_cycle)]),
                        )
                    ]
                    for j in range(len(vertex_cycle))
                ]
                for combo in itertools.product(*choices):
                    yield emit(Circle(combo, vertex_cycle).canonical())


def _first_circle_through(graph, target, banned):
    """The first circle through ``target`` avoiding ``banned``, or None.

    Deterministic (sorted adjacency, lexicographically least parallel edges);
    used as a fast path by the consistency oracle.
    """
    triples = graph.edge_triples()
    pair_edges = _parallel_groups(triples)
    for (u, v), eids in pair_edges.items():
        if target not in (u, v) or len(eids) < 2:
            continue
        if (v if target == u else u) in banned:
            continue
        return Circle((eids[0], eids[1]), (u, v)).canonical()
    adj = {x: set() for x in graph.vertex_ids}
    for _, u, v in triples:
        adj[u].add(v)
        adj[v].add(u)
    adj = {x: tuple(sorted(ws)) for x, ws in adj.items()}
    for vertex_cycle in _vertex_cycles_through(adj, target, banned):
        pairs = zip(vertex_cycle, vertex_cycle[1:] + vertex_cycle[:1])
        edges = tuple(pair_edges[(min(a, b), max(a, b))][0] for a, b in pairs)
        return Circle(edges, vertex_cycle).canonical()
    return None


def enumerate_circles(graph, *, max_circles: int = DEFAULT_CIRCLE_CAP) -> list:
    """Every elementary circle exactly once, canonical, deterministic order.

    Works on SignedGraph and MarkedGraph alike.  Raises CircleLimitError when
    the graph has more than ``max_circles`` circles.
    """
    return list(_circles(graph, None, max_circles))


def is_balanced_oracle(graph: SignedGraph, *,
                       max_circles: int = DEFAULT_CIRCLE_CAP) -> bool:
    """Balance by definition: every circle has positive edge-sign product."""
    for circle in _circles(graph, None, max_circles):
        signs = (graph.edge(eid).sign for eid in circle.edges)
        if sign_product(signs).is_negative:
            return False
    return True


def _two_coloring(graph: SignedGraph):
    """Switching marks making every edge sign the product of endpoint marks.

    Returns (marks, conflict_edge, parent_edge, depth); conflict_edge is None
    iff the graph is balanced.  BFS over sorted adjacency, so deterministic.
    """
    marks = {}
    parent_edge = {}
    depth = {}
    incidence = {v: sorted(graph.incident_edges(v), key=lambda e: e.id)
                 for v in graph.vertices}
    for root in graph.vertices:
        if root in marks:
            continue
        marks[root] = Sign.POSITIVE
        parent_edge[root] = None
        depth[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for e in incidence[v]:
                w = e.other_endpoint(v)
                expected = marks[v] * e.sign
                if w not in marks:
                    marks[w] = expected
                    parent_edge[w] = e
                    depth[w] = depth[v] + 1
                    queue.append(w)
                elif marks[w] is not expected:
                    return marks, e, parent_edge, depth
    return marks, None, parent_edge, depth


def is_balanced_fast(graph: SignedGraph) -> bool:
    """Balance in linear time via the switching two-coloring."""
    return _two_coloring(graph)[1] is None


def find_negative_circle(graph: SignedGraph) -> Optional[Circle]:
    """A negative circle when the graph is unbalanced, else None.

    The witness is the fundamental circle of the first conflicting edge found
    by the two-coloring: the BFS tree path between its endpoints plus the edge.
    """
    _, conflict, parent_edge, depth = _two_coloring(graph)
    if conflict is None:
        return None

    def path_up(v, levels):
        edges = []
        vertices = [v]
        for _ in range(levels):
            e = parent_edge[v]
            edges.append(e.id)
            v = e.other_endpoint(v)
            vertices.append(v)
        return edges, vertices

    a, b = conflict.u, conflict.v
    while depth[a] > depth[b]:
        a = parent_edge[a].other_endpoint(a)
    while depth[b] > depth[a]:
        b = parent_edge[b].other_endpoint(b)
    x, y = a, b
    while x != y:
        x = parent_edge[x].other_endpoint(x)
        y = parent_edge[y].other_endpoint(y)
    meet = x

    up_u, verts_u = path_up(conflict.u, depth[conflict.u] - depth[meet])
    up_v, verts_v = path_up(conflict.v, depth[conflict.v] - depth[meet])
    # meet .. u, then the conflict edge, then v .. back up to meet
    vertices = list(reversed(verts_u)) + list(verts_v[:-1])
    edges = list(reversed(up_u)) + [conflict.id] + up_v
    circle = Circle(tuple(edges), tuple(vertices)).canonical()
    assert graph.sign_of_walk(circle).is_negative
    return circle


def circle_vertex_sign(marked, circle: Circle) -> Sign:
    """Product of the vertex marks around a circle of a marked graph."""
    from .core import validate_circle

    validate_circle(marked, circle)
    return sign_product(marked.mark(v) for v in circle.vertices)


def is_consistent_oracle(marked, *,
                         max_circles: int = DEFAULT_CIRCLE_CAP) -> ConsistencyResult:
    """Consistency by definition, with a violating circle as witness.

    Circles avoiding every negative vertex are positive by inspection, so only
    circles through a negative vertex are enumerated.  A fast pass first looks
    for a circle through exactly one negative vertex (such a circle is negative
    outright, and enumeration order can otherwise bury it in dense graphs);
    the full restricted enumeration then decides, returning the first negative
    circle found in deterministic order as witness.
    """
    targets = marked.negative_vertex_ids
    if not targets:
        return ConsistencyResult(True, None)
    target_set = set(targets)
    for t in targets:
        circle = _first_circle_through(marked, t, target_set - {t})
        if circle is not None:
            return ConsistencyResult(False, circle)
    for circle in _circles(marked, targets, max_circles):
        if sign_product(marked.mark(v) for v in circle.vertices).is_negative:
            return ConsistencyResult(False, circle)
    return ConsistencyResult(True, None)
