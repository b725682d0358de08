import math

from lineconsistency import (
    Sign,
    circle_image,
    circle_vertex_sign,
    enumerate_circles,
    exhaustive_signed_graphs,
    line_graph,
    new_signed_graph,
    validate_circle,
    vertex_triangles,
)


def star(k, signs=None):
    signs = signs or "+" * k
    return new_signed_graph(
        ["c"] + [f"l{i}" for i in range(k)],
        [(f"e{i}", "c", f"l{i}", s) for i, s in enumerate(signs)],
    )


class TestLineGraph:
    def test_path_gives_single_edge(self):
        g = new_signed_graph("abc", [("e1", "a", "b", "+"), ("e2", "b", "c", "-")])
        m = line_graph(g)
        assert m.vertex_ids == ("e1", "e2")
        assert [(e.u, e.v) for e in m.edges] == [("e1", "e2")]

    def test_parallel_pair_gives_double_edge(self):
        g = new_signed_graph("ab", [("e1", "a", "b", "+"), ("e2", "a", "b", "-")])
        m = line_graph(g)
        assert m.vertex_ids == ("e1", "e2")
        assert len(m.edges) == 2
        assert all(e.endpoints == frozenset(("e1", "e2")) for e in m.edges)

    def test_triangle_maps_to_triangle(self):
        g = new_signed_graph(
            "abc", [("e1", "a", "b", "+"), ("e2", "b", "c", "-"),
                    ("e3", "c", "a", "+")]
        )
        m = line_graph(g)
        assert len(m.vertices) == 3 and len(m.edges) == 3
        assert m.mark("e1") is Sign.POSITIVE
        assert m.mark("e2") is Sign.NEGATIVE

    def test_marks_are_edge_signs(self):
        g = star(4, "+-+-")
        m = line_graph(g)
        for e in g.edges:
            assert m.mark(e.id) is e.sign

    def test_counting_formulae(self):
        for g in exhaustive_signed_graphs(4, 4):
            m = line_graph(g)
            assert len(m.vertices) == len(g.edges)
            expected = sum(
                math.comb(g.degree(v), 2) for v in g.vertices
            )
            assert len(m.edges) == expected


class TestCircleImage:
    def test_image_sign_equals_circle_sign(self):
        for g in exhaustive_signed_graphs(4, 5):
            m = line_graph(g)
            for circle in enumerate_circles(g):
                if len(circle) < 3:
                    continue
                image = circle_image(circle)
                validate_circle(m, image)
                assert circle_vertex_sign(m, image) is g.sign_of_walk(circle)

    def test_digon_image(self):
        g = new_signed_graph("ab", [("e1", "a", "b", "-"), ("e2", "a", "b", "+")])
        m = line_graph(g)
        [digon] = enumerate_circles(g)
        image = circle_image(digon)
        validate_circle(m, image)
        assert circle_vertex_sign(m, image) is Sign.NEGATIVE


class TestVertexTriangles:
    def test_counts(self):
        assert len(vertex_triangles(star(3))) == 1
        assert len(vertex_triangles(star(4))) == 4
        triangle = new_signed_graph(
            "abc", [("e1", "a", "b", "+"), ("e2", "b", "c", "+"),
                    ("e3", "c", "a", "+")]
        )
        assert vertex_triangles(triangle) == []

    def test_triangles_are_line_graph_circles(self):
        g = star(4, "+--+")
        m = line_graph(g)
        for t in vertex_triangles(g):
            validate_circle(m, t)
            signs = [m.mark(v) for v in t.vertices]
            product = Sign.POSITIVE
            for s in signs:
                product = product * s
            assert circle_vertex_sign(m, t) is product
