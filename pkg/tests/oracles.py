"""Brute-force oracles, independent of the Groebner engine.

Everything here reduces questions to exact linear algebra over the
rationals on finite monomial bases, which is complete for homogeneous
inputs: a homogeneous combination never needs coefficients outside the
forced degree.
"""

from fractions import Fraction
from itertools import combinations_with_replacement

from graphsplines.groebner import ModuleElement
from graphsplines.poly import Polynomial


def monomials_of_degree(ring, degree):
    """All exponent tuples of the given total degree, deterministic order."""
    n = ring.num_vars
    if degree == 0:
        return [(0,) * n]
    out = []
    for combo in combinations_with_replacement(range(n), degree):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    return sorted(set(out))


def _rref(rows):
    """In-place fraction row reduction; returns pivot column list."""
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def _rank(rows):
    return len(_rref([list(r) for r in rows]))


def _coords(element, rank, basis_index):
    """Coefficient vector of a module element over a (position, monomial) basis."""
    row = [Fraction(0)] * len(basis_index)
    for i, poly in enumerate(element.coords):
        for m, c in poly.terms.items():
            row[basis_index[(i, m)]] = Fraction(c)
    return row


def module_slice_dimension(gens, twists, degree, ring, rank):
    """dim_k of the degree slice of the submodule spanned by the generators.

    The slice is spanned by monomial multiples m * g with
    deg(m) + deg(g) == degree (degrees include the ambient twists).
    """
    basis = [
        (i, m)
        for i in range(rank)
        if degree - twists[i] >= 0
        for m in monomials_of_degree(ring, degree - twists[i])
    ]
    index = {b: k for k, b in enumerate(basis)}
    rows = []
    for g in gens:
        d = g.degree_wrt(twists)
        if not isinstance(d, int) or d > degree:
            continue
        for m in monomials_of_degree(ring, degree - d):
            rows.append(_coords(g.term_mul(m, ring.coeff(1)), rank, index))
    return _rank(rows)


def kernel_slice_dimension(rows_of_matrix, twists, degree, ring, ncols):
    """dim_k { v : A v = 0, v homogeneous of the given twisted degree }.

    Solved as exact linear algebra: unknowns are the coefficients of each
    v_j over the monomials of degree (degree - twists[j]).
    """
    nrows = len(rows_of_matrix)
    unknowns = []
    for j in range(ncols):
        d = degree - twists[j]
        if d < 0:
            continue
        for m in monomials_of_degree(ring, d):
            unknowns.append((j, m))
    if not unknowns:
        return 0
    # equations: for each row i, each output monomial, the sum vanishes
    eq_index = {}
    equations = []

    def eq_row():
        return [Fraction(0)] * len(unknowns)

    table = {}
    for k, (j, m) in enumerate(unknowns):
        for i in range(nrows):
            entry = rows_of_matrix[i][j]
            if entry.is_zero():
                continue
            for em, ec in entry.terms.items():
                out = (i, tuple(a + b for a, b in zip(em, m)))
                if out not in eq_index:
                    eq_index[out] = len(equations)
                    equations.append(eq_row())
                equations[eq_index[out]][k] += Fraction(ec)
    rank = _rank(equations)
    return len(unknowns) - rank


def membership_by_linear_algebra(target, gens, ring, rank, twists=None):
    """Homogeneous membership: target in <gens> iff target is in the span
    of the monomial multiples of the generators in its degree."""
    if twists is None:
        twists = (0,) * rank
    degree = target.degree_wrt(twists)
    if not isinstance(degree, int):
        raise ValueError("oracle needs a homogeneous nonzero target")
    basis = [
        (i, m)
        for i in range(rank)
        if degree - twists[i] >= 0
        for m in monomials_of_degree(ring, degree - twists[i])
    ]
    index = {b: k for k, b in enumerate(basis)}
    rows = []
    for g in gens:
        d = g.degree_wrt(twists)
        if not isinstance(d, int) or d > degree:
            continue
        for m in monomials_of_degree(ring, degree - d):
            rows.append(_coords(g.term_mul(m, ring.coeff(1)), rank, index))
    without = _rank(rows)
    rows.append(_coords(target, rank, index))
    with_target = _rank(rows)
    return with_target == without


def expand_combination(quotients, divisors, remainder):
    """Re-expansion sum(q_i * g_i) + r for the division identity."""
    total = remainder
    for q, g in zip(quotients, divisors):
        total = total + q * g
    return total
