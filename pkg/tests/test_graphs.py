import random

import pytest

from graphsplines.graphs import (
    EdgeLabeledGraph,
    GraphFormatError,
    Spline,
    boundary_matrix,
    classify_edges,
    cycle_basis,
    parse_graph,
    parse_spline_file,
    trivial_spline,
    verify_spline,
)
from graphsplines.poly import Ring, format_poly, parse_poly

from randgen import random_decomposable_graph, random_homogeneous

RXY = Ring(["x", "y"])


def P(text, ring=RXY):
    return parse_poly(text, ring)


def triangle(ring=RXY, labels=("x", "y", "x + y")):
    polys = [parse_poly(s, ring) for s in labels]
    return EdgeLabeledGraph(
        ["a", "b", "c"],
        [("a", "b", polys[0]), ("b", "c", polys[1]), ("a", "c", polys[2])],
        ring,
    )


class TestGraphConstruction:
    def test_loop_rejected(self):
        with pytest.raises(ValueError):
            EdgeLabeledGraph(["a"], [("a", "a", P("x"))], RXY)

    def test_zero_label_rejected(self):
        with pytest.raises(ValueError):
            EdgeLabeledGraph(["a", "b"], [("a", "b", P("0"))], RXY)

    def test_orientation_normalized(self):
        G = EdgeLabeledGraph(["a", "b"], [("b", "a", P("x"))], RXY)
        assert (G.edges[0].u, G.edges[0].v) == ("a", "b")

    def test_parallel_edges_allowed(self):
        G = EdgeLabeledGraph(["a", "b"], [("a", "b", P("x")), ("a", "b", P("y"))], RXY)
        assert G.num_edges == 2


class TestCycleBasis:
    def test_triangle(self):
        basis = cycle_basis(triangle())
        assert len(basis) == 1
        assert len(basis.cycles[0]) == 3

    def test_diamond_shares_middle_edge(self, d33_linear):
        basis = cycle_basis(d33_linear)
        assert len(basis) == 2
        for cycle in basis.cycles:
            assert 4 in cycle.edge_set  # e5
            assert len(cycle) == 3

    def test_tree_has_empty_basis(self):
        G = EdgeLabeledGraph(
            ["a", "b", "c", "d"],
            [("a", "b", P("x")), ("b", "c", P("y")), ("b", "d", P("x + y"))],
            RXY,
        )
        assert len(cycle_basis(G)) == 0

    def test_dimension_formula(self):
        rng = random.Random(3)
        for seed in range(12):
            G = random_decomposable_graph(RXY, random.Random(seed))
            expected = G.num_edges - len(G.vertices) + len(G.components())
            for mode in ("minimum", "fundamental"):
                assert len(cycle_basis(G, mode)) == expected

    def test_minimum_prefers_short_cycles(self):
        # square with a chord: minimum basis uses two triangles
        G = EdgeLabeledGraph(
            ["a", "b", "c", "d"],
            [
                ("a", "b", P("x")), ("b", "c", P("y")), ("c", "d", P("x")),
                ("a", "d", P("y")), ("a", "c", P("x + y")),
            ],
            RXY,
        )
        basis = cycle_basis(G, "minimum")
        assert sorted(len(c) for c in basis.cycles) == [3, 3]

    def test_two_cycle(self):
        G = EdgeLabeledGraph(["a", "b"], [("a", "b", P("x^2")), ("a", "b", P("y^2"))], RXY)
        basis = cycle_basis(G)
        assert len(basis) == 1
        assert basis.cycles[0].edge_ids == (0, 1)
        assert basis.cycles[0].signs == (1, -1)

    def test_gf2_independence(self, d33_linear):
        basis = cycle_basis(d33_linear)
        masks = []
        for c in basis.cycles:
            m = 0
            for eid in c.edge_ids:
                m |= 1 << eid
            masks.append(m)
        assert masks[0] ^ masks[1] != 0


class TestClassifyEdges:
    def test_diamond(self, d33_linear):
        basis = cycle_basis(d33_linear)
        cls = classify_edges(d33_linear, basis)
        assert cls[4] == "interior"
        assert all(cls[j] == "exterior" for j in range(4))

    def test_pendant_edge_free(self):
        G = EdgeLabeledGraph(
            ["a", "b", "c", "d"],
            [("a", "b", P("x")), ("b", "c", P("y")), ("a", "c", P("x + y")),
             ("c", "d", P("x"))],
            RXY,
        )
        cls = classify_edges(G, cycle_basis(G))
        assert cls[3] == "free"

    def test_disjoint_triangles_all_exterior(self):
        G = EdgeLabeledGraph(
            ["a", "b", "c", "d", "e", "f"],
            [("a", "b", P("x")), ("b", "c", P("y")), ("a", "c", P("x + y")),
             ("d", "e", P("x")), ("e", "f", P("y")), ("d", "f", P("x - y"))],
            RXY,
        )
        cls = classify_edges(G, cycle_basis(G))
        assert all(v == "exterior" for v in cls.values())

    def test_partition(self):
        for seed in range(8):
            G = random_decomposable_graph(RXY, random.Random(seed + 100))
            cls = classify_edges(G, cycle_basis(G))
            assert set(cls) == {e.index for e in G.edges}


class TestBoundaryMatrix:
    def test_diamond_exact(self, d33_linear):
        m = boundary_matrix(d33_linear)
        rows = [[format_poly(p) for p in row] for row in m.rows()]
        assert rows == [
            ["x", "-y", "0", "0", "-x^2 - y^2"],
            ["0", "0", "-y", "x", "-x^2 - y^2"],
        ]

    def test_single_edge_zero_row(self):
        G = EdgeLabeledGraph(["a", "b"], [("a", "b", P("x"))], RXY)
        m = boundary_matrix(G)
        assert m.nrows == 1
        assert [str(p) for p in m.rows()[0]] == ["0"]

    def test_two_cycle_row(self):
        G = EdgeLabeledGraph(["a", "b"], [("a", "b", P("x^2")), ("a", "b", P("y^2"))], RXY)
        m = boundary_matrix(G)
        assert [format_poly(p) for p in m.rows()[0]] == ["x^2", "-y^2"]

    def test_kernel_annihilates_every_cycle(self):
        # every kernel vector sums to zero around each basis cycle and
        # around the non-basis outer cycle of the diamond
        G = parse_graph("""
            ring x, y
            vertices 1 2 3 4
            edge 1 3 : x
            edge 1 2 : y
            edge 3 4 : y
            edge 2 4 : x
            edge 2 3 : x^2 + y^2
        """)
        m = boundary_matrix(G)
        ker = m.kernel()
        for v in ker.generators:
            assert all(p.is_zero() for p in m.apply(v.coords))
            # outer 4-cycle 1 -> 3 -> 4 -> 2 -> 1: signs for stored orientations
            outer = [(0, 1), (2, 1), (3, -1), (1, -1)]
            total = G.ring.zero()
            for eid, sign in outer:
                term = G.edges[eid].label * v.coords[eid]
                total = total + (term if sign == 1 else -term)
            assert total.is_zero()


class TestSplines:
    def test_trivial_spline_everywhere(self):
        for seed in range(6):
            G = random_decomposable_graph(RXY, random.Random(seed + 7))
            ok, failures = verify_spline(G, trivial_spline(G))
            assert ok and not failures

    def test_figure_style_univariate_cycle(self):
        # labels reconstructed as divisors of the vertex differences
        R = Ring(["x"])
        G = EdgeLabeledGraph(
            ["v1", "v2", "v3"],
            [
                ("v1", "v2", parse_poly("x", R)),
                ("v2", "v3", parse_poly("x^2 + x", R)),
                ("v1", "v3", parse_poly("x^2 + 2*x", R)),
            ],
            R,
        )
        F = Spline({
            "v1": parse_poly("1", R),
            "v2": parse_poly("x + 1", R),
            "v3": parse_poly("x^2 + 2*x + 1", R),
        })
        ok, failures = verify_spline(G, F)
        assert ok and not failures

    def test_failing_edge_reported(self):
        G = EdgeLabeledGraph(["a", "b"], [("a", "b", P("x"))], RXY)
        F = Spline({"a": P("0"), "b": P("1")})
        ok, failures = verify_spline(G, F)
        assert not ok
        assert len(failures) == 1
        assert failures[0][0].index == 0

    def test_missing_vertex_label(self):
        G = EdgeLabeledGraph(["a", "b"], [("a", "b", P("x"))], RXY)
        with pytest.raises(ValueError):
            verify_spline(G, Spline({"a": P("0")}))

    def test_module_operations(self):
        G = triangle()
        one = trivial_spline(G)
        scaled = one.scale(P("x^2"))
        assert all(p == P("x^2") for p in scaled.values.values())
        cancel = scaled + scaled.scale(P("-1"))
        assert all(p.is_zero() for p in cancel.values.values())
        ok, _ = verify_spline(G, scaled)
        assert ok

    def test_vanishing_shift(self):
        # subtracting f(v) * 1 produces a spline vanishing at v
        G = triangle()
        F = Spline({"a": P("1"), "b": P("x + 1"), "c": P("x + y + 1")})
        ok, _ = verify_spline(G, F)
        assert ok
        shifted = F + trivial_spline(G).scale(F["a"].scale(-1))
        assert shifted["a"].is_zero()
        ok, _ = verify_spline(G, shifted)
        assert ok


class TestFileFormats:
    def test_graph_roundtrip(self, d33_linear):
        assert d33_linear.num_edges == 5
        assert d33_linear.vertices == ("1", "2", "3", "4")
        assert format_poly(d33_linear.edges[4].label) == "x^2 + y^2"

    def test_comments_and_blank_lines(self):
        G = parse_graph("""
            # a triangle
            ring x, y

            vertices a b c
            edge a b : x   # first edge
            edge b c : y
            edge a c : x + y
        """)
        assert G.num_edges == 3

    def test_bad_directive(self):
        with pytest.raises(GraphFormatError):
            parse_graph("ring x\nvertices a b\nedgee a b : x")

    def test_edge_before_ring(self):
        with pytest.raises(GraphFormatError):
            parse_graph("edge a b : x")

    def test_unknown_variable_in_label(self):
        with pytest.raises(GraphFormatError):
            parse_graph("ring x\nvertices a b\nedge a b : w + 1")

    def test_spline_file(self, d33_linear):
        F = parse_spline_file("1 : 0\n2 : x^2 + y^2\n3 : 0\n4 : 0\n", d33_linear)
        assert F["2"] == P("x^2 + y^2")

    def test_spline_file_unknown_vertex(self, d33_linear):
        with pytest.raises(GraphFormatError):
            parse_spline_file("9 : x\n", d33_linear)
