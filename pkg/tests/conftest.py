import pytest

from graphsplines import Ring, parse_graph, parse_poly

D33_LINEAR = """
ring x, y
vertices 1 2 3 4
edge 1 3 : x
edge 1 2 : y
edge 3 4 : y
edge 2 4 : x
edge 2 3 : x^2 + y^2
"""

D33_SQUARES = """
ring x, y
vertices 1 2 3 4
edge 1 3 : x^2
edge 1 2 : y^2
edge 3 4 : y^2
edge 2 4 : x^2
edge 2 3 : x^2 + y^2
"""

# shared edge lies outside both exterior ideals and one cycle carries the
# codimension-4 ideal, so the kernel has positive projective dimension
DIAMOND_NOT_FREE = """
ring x, y, z, t
vertices 1 2 3 4
edge 1 3 : z^2
edge 1 2 : t^2
edge 3 4 : y^2
edge 2 4 : x^2
edge 2 3 : x*z + y*t
"""


@pytest.fixture
def ring_xy():
    return Ring(["x", "y"])


@pytest.fixture
def ring_xyz():
    return Ring(["x", "y", "z"])


@pytest.fixture
def ring_xyzt():
    return Ring(["x", "y", "z", "t"])


@pytest.fixture
def d33_linear():
    return parse_graph(D33_LINEAR)


@pytest.fixture
def d33_squares():
    return parse_graph(D33_SQUARES)


@pytest.fixture
def diamond_not_free():
    return parse_graph(DIAMOND_NOT_FREE)


@pytest.fixture
def p():
    """Shorthand parser: p(ring)("x^2 + y")."""
    def bind(ring):
        return lambda text: parse_poly(text, ring)
    return bind
