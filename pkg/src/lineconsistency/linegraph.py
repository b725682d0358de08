"""Vertex-marked line graphs of signed multigraphs.

The line graph has one vertex per edge of the input, marked with that edge's
sign, and one edge per unordered pair of distinct input edges *per shared
endpoint*, so a parallel pair in the input becomes a double edge here.
"""

from __future__ import annotations

import itertools

from .core import Circle, MarkedGraph, SignedGraph, new_marked_graph


def line_edge_id(edge_a: str, edge_b: str, shared_vertex: str) -> str:
    """Identifier of the line-graph edge joining two edges at a common vertex.

    Encodes the pair and the shared endpoint so the two edges of a digon stay
    distinct.  Collisions from pathological input ids containing '~'/'@' are
    caught by MarkedGraph's duplicate-id check.
    """
    a, b = sorted((edge_a, edge_b))
    return f"{a}~{b}@{shared_vertex}"


def line_graph(graph: SignedGraph) -> MarkedGraph:
    """The line graph of ``graph`` with vertex marks inherited from edge signs.

    Line-graph vertex ids are the originating edge ids verbatim, so circles in
    the result read directly against the input graph.
    """
    vertices = [(e.id, e.sign) for e in graph.edges]
    edges = []
    for v in graph.vertices:
        incident = graph.incident_edges(v)
        for a, b in itertools.combinations(incident, 2):
            edges.append((line_edge_id(a.id, b.id, v), a.id, b.id))
    return new_marked_graph(vertices, edges)


def circle_image(circle: Circle) -> Circle:
    """The circle of the line graph traced by a circle of the base graph.

    Its vertex-sign product in the line graph equals the original circle's
    edge-sign product.
    """
    n = len(circle)
    edges = tuple(
        line_edge_id(
            circle.edges[i], circle.edges[(i + 1) % n], circle.vertices[(i + 1) % n]
        )
        for i in range(n)
    )
    return Circle(edges, circle.edges).canonical()


def vertex_triangles(graph: SignedGraph) -> list:
    """Triangles of the line graph from three edges meeting at one vertex.

    One triangle per 3-subset of the incident edges of each vertex of degree
    at least 3; its vertex-sign product equals the product of the three edge
    signs.
    """
    triangles = []
    for v in graph.vertices:
        incident = [e.id for e in graph.incident_edges(v)]
        for a, b, c in itertools.combinations(incident, 3):
            triangle = Circle(
                (line_edge_id(a, b, v), line_edge_id(b, c, v), line_edge_id(c, a, v)),
                (a, b, c),
            )
            triangles.append(triangle.canonical())
    return triangles
