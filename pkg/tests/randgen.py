"""Seeded random instances for tests: polynomials, cycles, decomposable graphs."""

import random

from graphsplines.graphs import EdgeLabeledGraph
from graphsplines.poly import Polynomial, Ring

from oracles import monomials_of_degree


def random_homogeneous(ring, degree, rng, max_terms=3):
    """A nonzero homogeneous polynomial of exact degree."""
    monomials = monomials_of_degree(ring, degree)
    while True:
        chosen = rng.sample(monomials, k=min(len(monomials), rng.randint(1, max_terms)))
        terms = {m: ring.coeff(rng.choice([-3, -2, -1, 1, 2, 3])) for m in chosen}
        f = Polynomial(ring, terms)
        if not f.is_zero():
            return f


def random_poly(ring, max_degree, rng, max_terms=4):
    """A nonzero polynomial with terms up to max_degree."""
    pool = [m for d in range(max_degree + 1) for m in monomials_of_degree(ring, d)]
    while True:
        chosen = rng.sample(pool, k=min(len(pool), rng.randint(1, max_terms)))
        terms = {m: ring.coeff(rng.choice([-3, -2, -1, 1, 2, 3])) for m in chosen}
        f = Polynomial(ring, terms)
        if not f.is_zero():
            return f


def random_linear(ring, rng):
    return random_homogeneous(ring, 1, rng, max_terms=ring.num_vars)


def cycle_graph(labels, ring, prefix="v"):
    """A single cycle with the given labels, in declaration order."""
    n = len(labels)
    vertices = [f"{prefix}{i}" for i in range(n)]
    if n == 2:
        edges = [(vertices[0], vertices[1], labels[0]),
                 (vertices[0], vertices[1], labels[1])]
    else:
        edges = [(vertices[i], vertices[(i + 1) % n], labels[i]) for i in range(n)]
    return EdgeLabeledGraph(vertices, edges, ring)


def random_cycle(ring, rng, length=None, degree=None, max_degree=4, homogeneous=True):
    """A random edge-labeled cycle graph."""
    if length is None:
        length = rng.randint(2, 5)
    labels = []
    for _ in range(length):
        d = degree if degree is not None else rng.randint(1, max_degree)
        if homogeneous:
            labels.append(random_homogeneous(ring, d, rng))
        else:
            labels.append(random_poly(ring, max_degree, rng))
    return cycle_graph(labels, ring)


def random_decomposable_graph(ring, rng, max_vertices=8):
    """A connected graph that decomposes: a cycle plus trees, with an
    optional second cycle glued along a removable shared edge.

    The shared edge's label is an explicit combination of the second
    cycle's exterior labels, so the removal is always legal.
    """
    n_cycle = rng.randint(2, min(5, max_vertices - 1))
    vertices = [f"v{i}" for i in range(n_cycle)]
    degree_pool = [1, 2]
    labels = [random_homogeneous(ring, rng.choice(degree_pool), rng) for _ in range(n_cycle)]
    if n_cycle == 2:
        edges = [(vertices[0], vertices[1], labels[0]),
                 (vertices[0], vertices[1], labels[1])]
    else:
        edges = [(vertices[i], vertices[(i + 1) % n_cycle], labels[i])
                 for i in range(n_cycle)]

    if n_cycle >= 3 and max_vertices - n_cycle >= 2 and rng.random() < 0.5:
        # glue a triangle along the first cycle edge: shared label is
        # rewritten as a combination of the new exterior labels
        a, b = vertices[0], vertices[1]
        c = f"v{len(vertices)}"
        vertices.append(c)
        ext1 = random_homogeneous(ring, 1, rng)
        ext2 = random_homogeneous(ring, 1, rng)
        coef1 = random_homogeneous(ring, 1, rng)
        shared = ext1 * coef1 + ext2 * ext2
        if shared.is_zero():
            shared = ext1 * ext1 + ext2 * ext2
        edges[0] = (a, b, shared)
        edges.append((a, c, ext1))
        edges.append((b, c, ext2))

    # hang free tree edges off existing vertices
    while len(vertices) < max_vertices and rng.random() < 0.6:
        parent = rng.choice(vertices)
        leaf = f"v{len(vertices)}"
        vertices.append(leaf)
        edges.append((parent, leaf, random_homogeneous(ring, rng.choice(degree_pool), rng)))
    return EdgeLabeledGraph(vertices, edges, ring)
