"""Structural line-consistency checks, classification, and counterexamples.

Four independent decision routes live here: three local/structural conditions,
a simple-graph criterion, and a full structural classification.  All of them
must agree with the definitional oracle (``cycles.is_consistent_oracle`` on
the line graph); the test suite enforces that agreement exhaustively.  The
second condition is the production checker (degree and sign facts plus one
bridge pass and one balance pass); the others are cross-validation routes.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, replace
from typing import Optional

from ._traversal import bridge_edges, biconnected_components, connected_components
from .core import Circle, GraphError, SignedGraph, sign_product
from .cycles import (
    circle_vertex_sign,
    enumerate_circles,
    find_negative_circle,
    is_balanced_fast,
    is_consistent_oracle,
)
from .linegraph import circle_image, line_edge_id, line_graph


@dataclass(frozen=True)
class Verdict:
    """A line-consistency decision with the failing clause, when negative.

    ``vertex``/``edge`` name the offending elements when a local clause fails;
    ``witness`` is a negative circle of the line graph when one was attached.
    """

    line_consistent: bool
    failed_clause: Optional[str] = None
    vertex: Optional[str] = None
    edge: Optional[str] = None
    witness: Optional[Circle] = None

    def __post_init__(self):
        if not self.line_consistent and self.failed_clause is None:
            raise GraphError("negative verdict requires a failed clause")

    def with_witness(self, witness: Circle) -> "Verdict":
        return replace(self, witness=witness)


@dataclass(frozen=True)
class Block:
    """A maximal biconnected edge set, or an isolated vertex."""

    vertices: frozenset
    edges: frozenset
    nontrivial: bool


@dataclass(frozen=True)
class ComponentReport:
    """Classification of one component of the negative subgraph."""

    kind: str  # "circle" | "nontrivial-path" | "single-vertex" | "other"
    vertices: tuple
    edges: tuple
    ok: bool
    violations: tuple = ()
    is_block: Optional[bool] = None
    path_form: Optional[str] = None  # "induced" | "closes-circle-block"
    case: Optional[str] = None  # "a" | "b"
    endpoints: tuple = ()
    # Derived observations (consequences, reported but not enforced):
    endpoints_divalent: Optional[bool] = None
    endpoint_extras_positive_isthmi: Optional[bool] = None


@dataclass(frozen=True)
class StructureReport:
    """Per-component structural facts plus the overall decision."""

    balanced: bool
    components: tuple
    line_consistent: bool

    def as_verdict(self) -> Verdict:
        if self.line_consistent:
            return Verdict(True)
        if not self.balanced:
            return Verdict(False, "unbalanced")
        for comp in self.components:
            if comp.violations:
                return Verdict(False, comp.violations[0])
        raise GraphError("inconsistent structure report")


def find_isthmi(graph: SignedGraph) -> frozenset:
    """Edges lying on no circle (deletion raises the component count)."""
    return bridge_edges(graph.vertex_ids, graph.edge_triples())


def blocks(graph: SignedGraph) -> list:
    """Maximal biconnected edge-subgraphs plus isolated vertices.

    A block is nontrivial iff it contains a circle, i.e. has at least two
    edges; trivial blocks are exactly isthmi and isolated vertices.
    """
    return [
        Block(vertices, edges, nontrivial=len(edges) >= 2)
        for vertices, edges in biconnected_components(
            graph.vertex_ids, graph.edge_triples()
        )
    ]


def _split_signs(edges):
    positive = [e for e in edges if e.sign.is_positive]
    negative = [e for e in edges if e.sign.is_negative]
    return positive, negative


def check_condition_i(graph: SignedGraph) -> Verdict:
    """Balanced; degree > 3 totally positive; degree 3 totally positive or
    exactly one positive edge, which is an isthmus."""
    isthmi = find_isthmi(graph)
    for v in graph.vertices:
        incident = graph.incident_edges(v)
        positive, _ = _split_signs(incident)
        if len(incident) > 3 and len(positive) != len(incident):
            return Verdict(False, "degree>3 not totally positive", vertex=v)
        if len(incident) == 3 and len(positive) != 3:
            if len(positive) != 1:
                return Verdict(False, "degree-3 vertex signs invalid", vertex=v)
            if positive[0].id not in isthmi:
                return Verdict(
                    False,
                    "degree-3 positive edge not an isthmus",
                    vertex=v,
                    edge=positive[0].id,
                )
    if not is_balanced_fast(graph):
        return Verdict(False, "unbalanced")
    return Verdict(True)


def check_condition_ii(graph: SignedGraph) -> Verdict:
    """Balanced; the negative subgraph is a disjoint union of paths and
    circles; each endpoint of a negative edge has at most one positive edge,
    an isthmus when the vertex has two negative edges."""
    isthmi = find_isthmi(graph)
    negative = graph.negative_subgraph()
    for v in graph.vertices:
        neg_degree = negative.degree(v)
        if neg_degree == 0:
            continue
        if neg_degree > 2:
            return Verdict(False, "negative-subgraph degree exceeds 2", vertex=v)
        positive, _ = _split_signs(graph.incident_edges(v))
        if len(positive) > 1:
            return Verdict(
                False, "negative-edge endpoint with two positive edges", vertex=v
            )
        if neg_degree == 2 and positive and positive[0].id not in isthmi:
            return Verdict(
                False,
                "negative-degree-2 positive edge not an isthmus",
                vertex=v,
                edge=positive[0].id,
            )
    if not is_balanced_fast(graph):
        return Verdict(False, "unbalanced")
    return Verdict(True)


def check_condition_iii(graph: SignedGraph) -> Verdict:
    """Degree > 3 totally positive; degree 3 totally positive or exactly one
    positive edge; after deleting all positive isthmi, balanced with every
    negative edge's endpoints of degree at most 2."""
    for v in graph.vertices:
        incident = graph.incident_edges(v)
        positive, _ = _split_signs(incident)
        if len(incident) > 3 and len(positive) != len(incident):
            return Verdict(False, "degree>3 not totally positive", vertex=v)
        if len(incident) == 3 and len(positive) not in (1, 3):
            return Verdict(False, "degree-3 vertex signs invalid", vertex=v)
    isthmi = find_isthmi(graph)
    pruned = graph.without_edges(
        e.id for e in graph.positive_edges if e.id in isthmi
    )
    if not is_balanced_fast(pruned):
        return Verdict(False, "unbalanced after deleting positive isthmi")
    for e in pruned.negative_edges:
        for v in (e.u, e.v):
            if pruned.degree(v) > 2:
                return Verdict(
                    False,
                    "negative-edge endpoint degree exceeds 2 "
                    "after deleting positive isthmi",
                    vertex=v,
                )
    return Verdict(True)


def check_theorem1_simple(graph: SignedGraph) -> Verdict:
    """The simple-graph criterion: balanced; degree > 3 totally positive;
    degree 3 totally positive or two negative edges lying on every circle
    through the vertex (checked against the circle enumeration)."""
    if not graph.is_simple:
        raise GraphError("requires a simple graph")
    circles = enumerate_circles(graph)
    for v in graph.vertices:
        incident = graph.incident_edges(v)
        positive, negative = _split_signs(incident)
        if len(incident) > 3 and len(positive) != len(incident):
            return Verdict(False, "degree>3 not totally positive", vertex=v)
        if len(incident) == 3 and len(positive) != 3:
            if len(negative) != 2:
                return Verdict(
                    False,
                    "degree-3 vertex without exactly two negative edges",
                    vertex=v,
                )
            pair = {negative[0].id, negative[1].id}
            for circle in circles:
                if v in circle.vertices and not pair <= set(circle.edges):
                    return Verdict(
                        False,
                        "degree-3 negative pair not on all circles "
                        "through the vertex",
                        vertex=v,
                    )
    if not is_balanced_fast(graph):
        return Verdict(False, "unbalanced")
    return Verdict(True)


def check_corollary_3(graph: SignedGraph) -> Optional[bool]:
    """For connected bridgeless graphs of order >= 4 with no divalent vertex:
    line consistent iff all positive.  None when the corollary does not apply."""
    if len(graph.vertices) < 4:
        return None
    if len(connected_components(graph.vertex_ids, graph.edge_triples())) != 1:
        return None
    if find_isthmi(graph):
        return None
    if any(graph.degree(v) == 2 for v in graph.vertices):
        return None
    return all(e.sign.is_positive for e in graph.edges)


def _classify_kind(component, neg: SignedGraph):
    degrees = {v: neg.degree(v) for v in component}
    if len(component) == 1 and not any(degrees.values()):
        return "single-vertex", ()
    if all(d == 2 for d in degrees.values()):
        return "circle", ()
    ones = sorted(v for v, d in degrees.items() if d == 1)
    if all(d in (1, 2) for d in degrees.values()) and len(ones) == 2:
        return "nontrivial-path", tuple(ones)
    return "other", ()


def classify_structure(graph: SignedGraph) -> StructureReport:
    """Classify every negative-subgraph component against the structural form.

    Overall: balanced, every component a circle, nontrivial path, or single
    vertex, circle components forming blocks with only positive-isthmus
    attachments, and path components either induced or closing a circle block,
    sitting inside a nontrivial block (a) or made entirely of isthmi with
    block-free endpoints (b).  Divalent-endpoint and endpoint-attachment facts
    are consequences of the form; they are reported, not enforced.
    """
    negative = graph.negative_subgraph()
    isthmi = find_isthmi(graph)
    all_blocks = blocks(graph)
    block_edge_sets = {b.edges for b in all_blocks if b.edges}
    nontrivial = [b for b in all_blocks if b.nontrivial]
    in_nontrivial = set()
    for b in nontrivial:
        in_nontrivial.update(b.vertices)

    reports = []
    for component in connected_components(
        negative.vertex_ids, negative.edge_triples()
    ):
        vertices = tuple(sorted(component))
        comp_edges = tuple(
            sorted(e.id for e in negative.edges if e.u in component)
        )
        edge_set = frozenset(comp_edges)
        kind, endpoints = _classify_kind(component, negative)
        violations = []
        is_block = None
        path_form = None
        case = None
        endpoints_divalent = None
        endpoint_extras_ok = None

        def extras_at(v):
            return [e for e in graph.incident_edges(v) if e.id not in edge_set]

        if kind == "other":
            violations.append(
                "negative component is not a circle, path, or single vertex"
            )
        elif kind == "circle":
            is_block = edge_set in block_edge_sets
            if not is_block:
                violations.append("circle component is not a block")
            for v in vertices:
                extras = extras_at(v)
                if len(extras) > 1:
                    violations.append(
                        f"more than one extra edge at circle vertex {v!r}"
                    )
                elif extras and not (
                    extras[0].sign.is_positive and extras[0].id in isthmi
                ):
                    violations.append(
                        f"extra edge at circle vertex {v!r} "
                        "is not a positive isthmus"
                    )
        elif kind == "nontrivial-path":
            for v in endpoints:
                if graph.degree(v) > 2:
                    violations.append(f"path endpoint {v!r} is not at most divalent")
            for v in vertices:
                if v in endpoints:
                    continue
                extras = extras_at(v)
                if len(extras) > 1:
                    violations.append(
                        f"more than one extra edge at path vertex {v!r}"
                    )
                elif extras and not (
                    extras[0].sign.is_positive and extras[0].id in isthmi
                ):
                    violations.append(
                        f"extra edge at path vertex {v!r} is not a positive isthmus"
                    )
            inside = [
                e
                for e in graph.edges
                if e.id not in edge_set
                and e.u in component
                and e.v in component
            ]
            if not inside:
                path_form = "induced"
            elif (
                len(inside) == 1
                and inside[0].sign.is_positive
                and inside[0].endpoints == frozenset(endpoints)
                and frozenset(edge_set | {inside[0].id}) in block_edge_sets
            ):
                path_form = "closes-circle-block"
            else:
                violations.append("path is neither induced nor closes a circle block")
            if any(edge_set <= b.edges for b in nontrivial):
                case = "a"
                endpoints_divalent = all(graph.degree(v) == 2 for v in endpoints)
            elif edge_set <= isthmi and not any(
                v in in_nontrivial for v in endpoints
            ):
                case = "b"
                endpoint_extras_ok = all(
                    e.sign.is_positive and e.id in isthmi
                    for v in endpoints
                    for e in extras_at(v)
                )
            else:
                violations.append(
                    "path is neither inside a nontrivial block nor an "
                    "isthmus path with block-free endpoints"
                )

        reports.append(
            ComponentReport(
                kind=kind,
                vertices=vertices,
                edges=comp_edges,
                ok=not violations,
                violations=tuple(violations),
                is_block=is_block,
                path_form=path_form,
                case=case,
                endpoints=endpoints,
                endpoints_divalent=endpoints_divalent,
                endpoint_extras_positive_isthmi=endpoint_extras_ok,
            )
        )

    balanced = is_balanced_fast(graph)
    overall = balanced and all(r.ok for r in reports)
    return StructureReport(
        balanced=balanced, components=tuple(reports), line_consistent=overall
    )


def _circle_through_edge(graph: SignedGraph, edge) -> Optional[Circle]:
    """A shortest circle containing ``edge``: BFS between its endpoints
    avoiding the edge itself, then close with it.  None if it is an isthmus."""
    adjacency = {v: [] for v in graph.vertices}
    for e in graph.edges:
        if e.id == edge.id:
            continue
        adjacency[e.u].append((e.id, e.v))
        adjacency[e.v].append((e.id, e.u))
    for v in adjacency:
        adjacency[v].sort()
    start, goal = edge.u, edge.v
    parent = {start: None}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        if v == goal:
            break
        for eid, w in adjacency[v]:
            if w not in parent:
                parent[w] = (eid, v)
                queue.append(w)
    if goal not in parent:
        return None
    path_edges = []
    path_vertices = [goal]
    v = goal
    while parent[v] is not None:
        eid, v = parent[v]
        path_edges.append(eid)
        path_vertices.append(v)
    path_edges.reverse()
    path_vertices.reverse()
    # path_vertices runs start..goal; the closing edge returns goal -> start
    return Circle(tuple(path_edges) + (edge.id,), tuple(path_vertices))


def _interposition_circle(circle: Circle, vertex: str, extra_edge: str) -> Circle:
    """Insert ``extra_edge`` between the two circle edges meeting at ``vertex``
    in the line-graph image of ``circle``."""
    n = len(circle)
    j = circle.vertices.index(vertex)
    link = (j - 1) % n
    lvertices = []
    lshared = []
    for i in range(n):
        lvertices.append(circle.edges[i])
        if i == link:
            lvertices.append(extra_edge)
            lshared.append(vertex)
            lshared.append(vertex)
        else:
            lshared.append(circle.vertices[(i + 1) % n])
    m = len(lvertices)
    ledges = tuple(
        line_edge_id(lvertices[k], lvertices[(k + 1) % m], lshared[k])
        for k in range(m)
    )
    return Circle(ledges, tuple(lvertices)).canonical()


def find_witness(graph: SignedGraph, failed: Verdict) -> Circle:
    """A negative circle of the line graph for a failed verdict.

    Candidates follow the explicit constructions: the line-graph image of a
    negative circle, negative vertex triangles, and the circle interposing the
    second negative edge at a degree-3 vertex whose positive edge is not an
    isthmus.  Falls back to the oracle's witness when none applies.  The
    shortest candidate wins, ties broken by canonical circle order.
    """
    if failed.line_consistent:
        raise GraphError("graph is line consistent; there is no witness")
    marked = line_graph(graph)
    candidates = []

    negative_circle = find_negative_circle(graph)
    if negative_circle is not None:
        candidates.append(circle_image(negative_circle))

    for v in graph.vertices:
        incident = graph.incident_edges(v)
        if len(incident) < 3:
            continue
        for a, b, c in itertools.combinations(incident, 3):
            if sign_product((a.sign, b.sign, c.sign)).is_negative:
                triangle = Circle(
                    (
                        line_edge_id(a.id, b.id, v),
                        line_edge_id(b.id, c.id, v),
                        line_edge_id(c.id, a.id, v),
                    ),
                    (a.id, b.id, c.id),
                )
                candidates.append(triangle.canonical())

    isthmi = find_isthmi(graph)
    for v in graph.vertices:
        incident = graph.incident_edges(v)
        if len(incident) != 3:
            continue
        positive, negative = _split_signs(incident)
        if len(negative) != 2 or positive[0].id in isthmi:
            continue
        circle = _circle_through_edge(graph, positive[0])
        if circle is None:
            continue
        used = set(circle.edges)
        spare = next(e for e in negative if e.id not in used)
        candidates.append(_interposition_circle(circle, v, spare.id))

    valid = [
        c for c in candidates if circle_vertex_sign(marked, c).is_negative
    ]
    if not valid:
        result = is_consistent_oracle(marked)
        if result.witness is None:
            raise GraphError("no witness found: the line graph is consistent")
        valid.append(result.witness)
    return min(valid, key=lambda c: (len(c), c.edges, c.vertices))
