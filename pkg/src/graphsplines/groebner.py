"""Groebner bases for submodules of R^m, syzygies, resolutions, Hilbert series.

Everything is computed with a position-over-term order (positions compared
by ascending index, grevlex on the term part by default).  Ideals are the
m = 1 case throughout.  The engine is deliberately plain Buchberger: inputs
are desk scale (few variables, low degree) and auditability beats speed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .poly import (
    GREVLEX,
    MonomialOrder,
    Polynomial,
    Ring,
    ZERO_DEGREE,
    homogeneous_degree,
    monomial_degree,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)

__all__ = [
    "ModuleElement",
    "Submodule",
    "GroebnerBasis",
    "FreeResolution",
    "RationalSeries",
    "HomogeneityError",
    "buchberger",
    "normal_form",
    "ideal_membership",
    "syzygies",
    "kernel_of_matrix",
    "minimal_generators",
    "free_resolution",
    "projective_dimension",
    "hilbert_series",
    "is_regular_sequence",
    "colon_ideal",
    "equal_ideals",
]


class HomogeneityError(ValueError):
    """Graded-only operation applied to inhomogeneous input.

    Resolutions, projective dimension and Hilbert series are only valid for
    homogeneous data (graded Nakayama); homogenize the input first.
    """


class ModuleElement:
    """An element of a free module R^m: a tuple of m polynomials."""

    __slots__ = ("ring", "coords", "_hash")

    def __init__(self, ring: Ring, coords: Sequence[Polynomial]):
        coords = tuple(coords)
        for p in coords:
            if p.ring != ring:
                raise ValueError("ring mismatch in module element")
        self.ring = ring
        self.coords = coords
        self._hash = None

    @classmethod
    def unit(cls, ring: Ring, rank: int, position: int) -> "ModuleElement":
        coords = [ring.zero()] * rank
        coords[position] = ring.one()
        return cls(ring, coords)

    @classmethod
    def from_poly(cls, p: Polynomial) -> "ModuleElement":
        return cls(p.ring, (p,))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.coords)

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        return ModuleElement(self.ring, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        return ModuleElement(self.ring, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "ModuleElement":
        return ModuleElement(self.ring, [-a for a in self.coords])

    def poly_mul(self, p: Polynomial) -> "ModuleElement":
        return ModuleElement(self.ring, [a * p for a in self.coords])

    def term_mul(self, monomial: tuple, coefficient) -> "ModuleElement":
        return ModuleElement(self.ring, [a.term_mul(monomial, coefficient) for a in self.coords])

    def scale(self, scalar) -> "ModuleElement":
        return ModuleElement(self.ring, [a.scale(scalar) for a in self.coords])

    def leading(self, order: MonomialOrder):
        """(position, monomial, coefficient) of the largest term, POT order."""
        best = None
        best_key = None
        for i, p in enumerate(self.coords):
            if p.is_zero():
                continue
            m, c = p.leading_term(order)
            key = order.module_key(i, m)
            if best_key is None or key > best_key:
                best_key = key
                best = (i, m, c)
        if best is None:
            raise ValueError("zero element has no leading term")
        return best

    def monic(self, order: MonomialOrder) -> "ModuleElement":
        if self.is_zero():
            return self
        _, _, c = self.leading(order)
        return self.scale(self.ring.coeff_div(self.ring.coeff(1), c))

    def degree_wrt(self, twists: Optional[Sequence[int]] = None):
        """Uniform degree of the element (coordinate degree + ambient twist).

        Returns the degree, ZERO_DEGREE for the zero element, or None when
        the coordinates do not agree on one degree.
        """
        degrees = set()
        for i, p in enumerate(self.coords):
            if p.is_zero():
                continue
            d = homogeneous_degree(p)
            if d is None:
                return None
            degrees.add(d + (twists[i] if twists is not None else 0))
        if not degrees:
            return ZERO_DEGREE
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def __eq__(self, other):
        return (
            isinstance(other, ModuleElement)
            and self.ring == other.ring
            and self.coords == other.coords
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.coords))
        return self._hash

    def __repr__(self):
        return "(" + ", ".join(str(p) for p in self.coords) + ")"


def _as_elements(generators, ring: Ring, rank: int):
    out = []
    for g in generators:
        if isinstance(g, Polynomial):
            g = ModuleElement.from_poly(g)
        if g.rank != rank:
            raise ValueError(f"ambient rank mismatch: {g.rank} != {rank}")
        if g.ring != ring:
            raise ValueError("ring mismatch")
        out.append(g)
    return out


@dataclass(frozen=True)
class Submodule:
    """A finitely generated submodule of R^m, given by its generators."""

    ring: Ring
    ambient_rank: int
    generators: tuple

    @classmethod
    def from_generators(cls, generators, ring: Ring = None, ambient_rank: int = None):
        generators = list(generators)
        if generators and isinstance(generators[0], Polynomial):
            generators = [ModuleElement.from_poly(g) for g in generators]
        if ring is None:
            if not generators:
                raise ValueError("empty generator list needs an explicit ring")
            ring = generators[0].ring
        if ambient_rank is None:
            if not generators:
                raise ValueError("empty generator list needs an explicit ambient rank")
            ambient_rank = generators[0].rank
        return cls(ring, ambient_rank, tuple(_as_elements(generators, ring, ambient_rank)))

    def canonical(self) -> "Submodule":
        """Drop zero generators and exact duplicates, keeping first occurrences."""
        seen = set()
        kept = []
        for g in self.generators:
            if g.is_zero() or g in seen:
                continue
            seen.add(g)
            kept.append(g)
        return Submodule(self.ring, self.ambient_rank, tuple(kept))


def _gens_ring_rank(M, ring=None, rank=None):
    """Accept a Submodule or a raw generator sequence (zeros and duplicates kept)."""
    if isinstance(M, Submodule):
        return list(M.generators), M.ring, M.ambient_rank
    gens = list(M)
    if gens and isinstance(gens[0], Polynomial):
        gens = [ModuleElement.from_poly(g) for g in gens]
    if ring is None:
        if not gens:
            raise ValueError("cannot infer ring from an empty generator list")
        ring = gens[0].ring
    if rank is None:
        if not gens:
            raise ValueError("cannot infer ambient rank from an empty generator list")
        rank = gens[0].rank
    return _as_elements(gens, ring, rank), ring, rank


# ---------------------------------------------------------------------------
# module division
# ---------------------------------------------------------------------------

def _flat_terms(v: ModuleElement) -> dict:
    terms = {}
    for i, p in enumerate(v.coords):
        for m, c in p.terms.items():
            terms[(i, m)] = c
    return terms


def _unflatten(terms: dict, ring: Ring, rank: int) -> ModuleElement:
    coords = [dict() for _ in range(rank)]
    for (i, m), c in terms.items():
        coords[i][m] = c
    return ModuleElement(ring, [Polynomial(ring, d) for d in coords])


def module_divide(v: ModuleElement, divisors: Sequence[ModuleElement], order: MonomialOrder):
    """Divide v by module elements; quotients are ring elements.

    Returns (quotients, remainder) with v == sum(q_k * g_k) + r and no term
    of r divisible by any divisor's leading term (equal position, dividing
    monomial).
    """
    ring = v.ring
    rank = v.rank
    quotients = [ring.zero() for _ in divisors]
    if not divisors:
        return quotients, v
    leads = [g.leading(order) for g in divisors]
    work = _flat_terms(v)
    remainder: dict = {}
    div = ring.coeff_div
    add = ring.coeff_add
    neg = ring.coeff_neg
    key = order.module_key
    while work:
        pos, m = max(work, key=lambda t: key(t[0], t[1]))
        c = work.pop((pos, m))
        for k, (lp, lm, lc) in enumerate(leads):
            if lp == pos and monomial_divides(lm, m):
                q = monomial_div(m, lm)
                coeff = div(c, lc)
                quotients[k] = quotients[k] + Polynomial(ring, {q: coeff})
                sub = divisors[k].term_mul(q, coeff)
                for (i, mm), cc in _flat_terms(sub).items():
                    if (i, mm) == (pos, m):
                        continue
                    s = add(work.get((i, mm), 0), neg(cc))
                    if s:
                        work[(i, mm)] = s
                    else:
                        work.pop((i, mm), None)
                break
        else:
            remainder[(pos, m)] = c
    return quotients, _unflatten(remainder, ring, rank)


# ---------------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis together with its provenance.

    `transform[k]` expresses elements[k] as a combination of the original
    generators, which is what membership witnesses are built from.
    """

    ring: Ring
    ambient_rank: int
    order: MonomialOrder
    elements: tuple
    transform: tuple  # transform[k][j]: Polynomial, elements[k] = sum_j transform[k][j] * gen_j
    source: tuple     # the original generators
    reduced: bool = True

    def __len__(self):
        return len(self.elements)


def buchberger(M, order: MonomialOrder = GREVLEX, ring: Ring = None, ambient_rank: int = None) -> GroebnerBasis:
    """Reduced Groebner basis of a submodule of R^m (ideal when m = 1).

    Pair elimination uses the coprimality criterion (ideals only; it is not
    valid for module positions) and the chain criterion; the pair queue is
    processed in increasing lcm degree.
    """
    gens, ring, rank = _gens_ring_rank(M, ring, ambient_rank)
    basis: list = []
    transform: list = []
    leads: list = []
    source = tuple(gens)
    n_src = len(source)

    def src_row(j):
        return [ring.one() if i == j else ring.zero() for i in range(n_src)]

    def add_element(elem, trans):
        pos, mono, coeff = elem.leading(order)
        inv = ring.coeff_div(ring.coeff(1), coeff)
        basis.append(elem.scale(inv))
        transform.append([t.scale(inv) for t in trans])
        leads.append((pos, mono))
        k = len(basis) - 1
        return k

    pairs = set()
    for j, g in enumerate(gens):
        if g.is_zero():
            continue
        k = add_element(g, src_row(j))
        for i in range(k):
            if leads[i][0] == leads[k][0]:
                pairs.add((i, k))

    def pair_sort_key(p):
        i, j = p
        lcm = monomial_lcm(leads[i][1], leads[j][1])
        return (monomial_degree(lcm), order.key(lcm), i, j)

    while pairs:
        i, j = min(pairs, key=pair_sort_key)
        pairs.discard((i, j))
        pi, mi = leads[i]
        pj, mj = leads[j]
        lcm = monomial_lcm(mi, mj)
        # coprimality criterion, valid for ideals only
        if rank == 1 and monomial_mul(mi, mj) == lcm:
            continue
        # chain criterion: some lead divides the lcm and both sub-lcms are
        # strictly smaller, so the pair's syzygy is induced by smaller pairs
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or leads[k][0] != pi:
                continue
            if monomial_divides(leads[k][1], lcm):
                if monomial_lcm(leads[k][1], mi) != lcm and monomial_lcm(leads[k][1], mj) != lcm:
                    skip = True
                    break
        if skip:
            continue
        s_elem = basis[i].term_mul(monomial_div(lcm, mi), ring.coeff(1)) - \
            basis[j].term_mul(monomial_div(lcm, mj), ring.coeff(1))
        s_trans = [
            a.term_mul(monomial_div(lcm, mi), ring.coeff(1)) -
            b.term_mul(monomial_div(lcm, mj), ring.coeff(1))
            for a, b in zip(transform[i], transform[j])
        ]
        quots, rem = module_divide(s_elem, basis, order)
        if rem.is_zero():
            continue
        for k, q in enumerate(quots):
            if q.is_zero():
                continue
            s_trans = [a - b * q for a, b in zip(s_trans, transform[k])]
        new = add_element(rem, s_trans)
        for k in range(new):
            if leads[k][0] == leads[new][0]:
                pairs.add((k, new))

    # minimalize: drop elements whose leading term is divided by another's
    keep = _minimal_lead_subset(leads)
    basis = [basis[k] for k in keep]
    transform = [transform[k] for k in keep]

    # interreduce tails for the unique reduced basis
    for k in range(len(basis)):
        others = basis[:k] + basis[k + 1:]
        quots, rem = module_divide(basis[k], others, order)
        if rem == basis[k]:
            continue
        trans = transform[k]
        oidx = list(range(0, k)) + list(range(k + 1, len(basis)))
        for q, oi in zip(quots, oidx):
            if q.is_zero():
                continue
            trans = [a - b * q for a, b in zip(trans, transform[oi])]
        basis[k] = rem
        transform[k] = trans

    ordering = sorted(
        range(len(basis)),
        key=lambda k: order.module_key(*basis[k].leading(order)[:2]),
    )
    basis = [basis[k] for k in ordering]
    transform = [tuple(transform[k]) for k in ordering]
    return GroebnerBasis(ring, rank, order, tuple(basis), tuple(transform), source)


def _minimal_lead_subset(leads):
    """Indices whose leading terms are not strictly divided by another kept lead."""
    keep = []
    for k in range(len(leads)):
        pk, mk = leads[k]
        redundant = False
        for kk in range(len(leads)):
            if kk == k or leads[kk][0] != pk:
                continue
            if monomial_divides(leads[kk][1], mk):
                if leads[kk][1] != mk or kk < k:
                    redundant = True
                    break
        if not redundant:
            keep.append(k)
    return keep


def normal_form(v, GB: GroebnerBasis) -> ModuleElement:
    """Unique remainder of v modulo the basis; zero iff v lies in the submodule."""
    if isinstance(v, Polynomial):
        v = ModuleElement.from_poly(v)
    if v.rank != GB.ambient_rank:
        raise ValueError(f"ambient rank mismatch: {v.rank} != {GB.ambient_rank}")
    _, rem = module_divide(v, list(GB.elements), GB.order)
    return rem


def ideal_membership(f, M, order: MonomialOrder = GREVLEX):
    """Decide f in <generators>; on success also return witness coefficients.

    The witness is taken against the original generators: f equals the dot
    product of the witness with them, exactly.
    """
    gb = M if isinstance(M, GroebnerBasis) else buchberger(M, order)
    if isinstance(f, Polynomial):
        v = ModuleElement.from_poly(f)
    else:
        v = f
    if v.rank != gb.ambient_rank:
        raise ValueError("ambient rank mismatch")
    quots, rem = module_divide(v, list(gb.elements), gb.order)
    if not rem.is_zero():
        return False, None
    ring = gb.ring
    witness = [ring.zero() for _ in gb.source]
    for q, row in zip(quots, gb.transform):
        if q.is_zero():
            continue
        witness = [w + t * q for w, t in zip(witness, row)]
    return True, witness


# ---------------------------------------------------------------------------
# syzygies
# ---------------------------------------------------------------------------

def syzygies(M, order: MonomialOrder = GREVLEX, ring: Ring = None, ambient_rank: int = None) -> Submodule:
    """Generating set of the syzygy module of the given generators.

    Schreyer construction: syzygies of the Groebner basis from all
    same-position S-pair reductions, pulled back to the original generators
    through the basis transformation, plus the rows of I - S*T that record
    how each generator rewrites over the basis.  The result is trimmed of
    generators that divide to zero against the rest.
    """
    gens, ring, rank = _gens_ring_rank(M, ring, ambient_rank)
    s = len(gens)
    gb = buchberger(gens, order, ring=ring, ambient_rank=rank)
    t = len(gb.elements)
    zero = ring.zero()

    # S matrix: gen_j = sum_k S[j][k] * basis_k
    S = []
    for g in gens:
        quots, rem = module_divide(g, list(gb.elements), order)
        if not rem.is_zero():
            raise AssertionError("generator did not reduce to zero against its own basis")
        S.append(quots)

    # Schreyer syzygies among the basis elements, in R^t
    leads = [e.leading(order) for e in gb.elements]
    basis_syz = []
    for i in range(t):
        for j in range(i + 1, t):
            if leads[i][0] != leads[j][0]:
                continue
            mi, ci = leads[i][1], leads[i][2]
            mj, cj = leads[j][1], leads[j][2]
            lcm = monomial_lcm(mi, mj)
            ui = (monomial_div(lcm, mi), ring.coeff_div(ring.coeff(1), ci))
            uj = (monomial_div(lcm, mj), ring.coeff_div(ring.coeff(1), cj))
            s_elem = gb.elements[i].term_mul(*ui) - gb.elements[j].term_mul(*uj)
            quots, rem = module_divide(s_elem, list(gb.elements), order)
            if not rem.is_zero():
                raise AssertionError("S-pair of a Groebner basis did not reduce to zero")
            row = [zero] * t
            row[i] = row[i] + Polynomial(ring, {ui[0]: ui[1]})
            row[j] = row[j] - Polynomial(ring, {uj[0]: uj[1]})
            for k, q in enumerate(quots):
                row[k] = row[k] - q
            basis_syz.append(row)

    # pull back to the original generators: z -> z * T
    out = []
    for row in basis_syz:
        coords = [zero] * s
        for k, z in enumerate(row):
            if z.is_zero():
                continue
            for j in range(s):
                tkj = gb.transform[k][j]
                if not tkj.is_zero():
                    coords[j] = coords[j] + z * tkj
        elem = ModuleElement(ring, coords)
        if not elem.is_zero():
            out.append(elem)

    # rows of I - S*T
    for j in range(s):
        coords = [ring.one() if jj == j else zero for jj in range(s)]
        for k in range(t):
            sjk = S[j][k]
            if sjk.is_zero():
                continue
            for jj in range(s):
                tkj = gb.transform[k][jj]
                if not tkj.is_zero():
                    coords[jj] = coords[jj] - sjk * tkj
        elem = ModuleElement(ring, coords)
        if not elem.is_zero():
            out.append(elem)

    out = _trim(out, order)
    return Submodule(ring, s, tuple(out))


def _trim(elements, order: MonomialOrder):
    """Drop duplicates and elements that divide to zero against the rest."""
    unique = []
    seen = set()
    for e in elements:
        if e.is_zero() or e in seen:
            continue
        seen.add(e)
        unique.append(e)
    unique.sort(key=lambda e: order.module_key(*e.leading(order)[:2]))
    changed = True
    while changed:
        changed = False
        for idx in range(len(unique) - 1, -1, -1):
            others = unique[:idx] + unique[idx + 1:]
            if not others:
                continue
            _, rem = module_divide(unique[idx], others, order)
            if rem.is_zero():
                del unique[idx]
                changed = True
    return unique


def kernel_of_matrix(rows, ring: Ring = None, ncols: int = None,
                     order: MonomialOrder = GREVLEX) -> Submodule:
    """Generators of { v in R^ncols : A v = 0 } for a matrix given by rows.

    Computed as the syzygies of the columns of A viewed as elements of the
    free module indexed by the rows.
    """
    rows = [list(r) for r in rows]
    if ring is None:
        ring = rows[0][0].ring
    if ncols is None:
        if not rows or not rows[0]:
            raise ValueError("cannot infer column count")
        ncols = len(rows[0])
    for r in rows:
        if len(r) != ncols:
            raise ValueError("ragged matrix")
    nrows = len(rows)
    columns = [
        ModuleElement(ring, [rows[i][j] for i in range(nrows)])
        for j in range(ncols)
    ]
    syz = syzygies(columns, order, ring=ring, ambient_rank=nrows)
    return Submodule(ring, ncols, syz.generators)


# ---------------------------------------------------------------------------
# graded machinery: minimal generators, resolutions, Hilbert series
# ---------------------------------------------------------------------------

def _check_graded(gens, twists, what="input"):
    degrees = []
    for g in gens:
        d = g.degree_wrt(twists)
        if d is None:
            raise HomogeneityError(
                f"{what} is not homogeneous: {g!r}; homogenize before resolving")
        degrees.append(d)
    return degrees


def minimal_generators(gens, twists=None, order: MonomialOrder = GREVLEX):
    """Minimal homogeneous generating set (a subset of the input).

    Repeatedly removes any generator contained in the submodule generated
    by the others; in the graded case the surviving set is minimal by the
    Nakayama criterion.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    ring = gens[0].ring
    rank = gens[0].rank
    _check_graded(gens, twists)
    # drop exact duplicates up front
    seen = set()
    unique = []
    for g in gens:
        if g not in seen:
            seen.add(g)
            unique.append(g)
    gens = unique
    gens.sort(key=lambda g: (
        g.degree_wrt(twists) if isinstance(g.degree_wrt(twists), int) else -1,
        order.module_key(*g.leading(order)[:2]),
    ))
    changed = True
    while changed:
        changed = False
        for idx in range(len(gens) - 1, -1, -1):
            others = gens[:idx] + gens[idx + 1:]
            if not others:
                continue
            gb = buchberger(others, order, ring=ring, ambient_rank=rank)
            if normal_form(gens[idx], gb).is_zero():
                del gens[idx]
                changed = True
    return gens


@dataclass(frozen=True)
class ResolutionStep:
    rank: int
    twists: tuple        # multiset of generator degrees, sorted
    matrix: Optional[tuple]  # rows in the previous step's free module; None for an ambient step


@dataclass(frozen=True)
class FreeResolution:
    """A minimal graded free resolution.

    steps[0] is the cover F_0 (for a quotient: the ambient free module, no
    matrix; for a submodule: one generator per minimal generator, the
    matrix being the embedding into R^m).  steps[k].matrix for k >= 1 maps
    F_k into F_{k-1}; consecutive matrices compose to zero and no entry has
    a nonzero constant term.
    """

    ring: Ring
    ambient_rank: int
    as_quotient: bool
    steps: tuple

    @property
    def length(self) -> int:
        last = 0
        for k, step in enumerate(self.steps):
            if step.rank > 0:
                last = k
        return last

    def betti_numbers(self) -> list:
        return [step.rank for step in self.steps]


def free_resolution(M, as_quotient: bool = False, twists=None,
                    order: MonomialOrder = GREVLEX, ring: Ring = None,
                    ambient_rank: int = None) -> FreeResolution:
    """Minimal graded free resolution of a submodule M of R^m (or of R^m/M).

    Iterated syzygies on minimal homogeneous generating sets, followed by a
    unit-striking pass so the result is minimal even when generators have
    unit coordinates.  Input must be homogeneous; length equals pd and is
    bounded by the number of variables.
    """
    gens, ring, rank = _gens_ring_rank(M, ring, ambient_rank)
    gens = [g for g in gens if not g.is_zero()]
    if twists is None:
        twists = (0,) * rank
    else:
        twists = tuple(twists)
        if len(twists) != rank:
            raise ValueError("twist list does not match ambient rank")
    _check_graded(gens, twists)

    layers = []   # (twists_k, rows_k) with rows over the previous layer
    current = minimal_generators(gens, twists, order)
    prev_twists = twists
    while current:
        degrees = tuple(g.degree_wrt(prev_twists) for g in current)
        layers.append((degrees, current))
        syz = syzygies(current, order, ring=ring, ambient_rank=current[0].rank)
        current = minimal_generators(list(syz.generators), degrees, order)
        prev_twists = degrees
        if len(layers) > ring.num_vars + 1:
            raise AssertionError("resolution exceeded the syzygy-theorem bound")

    if as_quotient:
        steps = [(list(twists), None)]
        for degrees, rows in layers:
            steps.append((list(degrees), [list(r.coords) for r in rows]))
    else:
        if not layers:
            return FreeResolution(ring, rank, False, (ResolutionStep(0, (), None),))
        first_deg, first_rows = layers[0]
        steps = [(list(first_deg), [list(r.coords) for r in first_rows])]
        for degrees, rows in layers[1:]:
            steps.append((list(degrees), [list(r.coords) for r in rows]))

    _strike_units(steps, ring)

    out = []
    for k, (degs, matrix) in enumerate(steps):
        rows = None
        if matrix is not None:
            rows = tuple(ModuleElement(ring, r) for r in matrix)
        out.append(ResolutionStep(len(degs), tuple(sorted(degs)), rows))
    while len(out) > 1 and out[-1].rank == 0:
        out.pop()
    resolution = FreeResolution(ring, rank, as_quotient, tuple(out))
    _assert_minimal_complex(resolution)
    return resolution


def _strike_units(steps, ring: Ring):
    """Cancel all unit (nonzero constant) entries from the step matrices.

    steps[k] = (twists list, matrix rows or None); matrix rows of step k
    are coordinates over step k-1's generators.  steps[0]'s matrix, when
    present, is the embedding into the ambient module and is updated but
    never searched for units.
    """
    zero_mono = (0,) * ring.num_vars

    def find_unit():
        for k in range(1, len(steps)):
            matrix = steps[k][1]
            if matrix is None:
                continue
            for r, row in enumerate(matrix):
                for c, entry in enumerate(row):
                    if not entry.is_zero() and entry.total_degree() == 0:
                        return k, r, c
        return None

    while True:
        found = find_unit()
        if found is None:
            return
        k, r, c = found
        matrix = steps[k][1]
        u = matrix[r][c].constant_coefficient()
        # clear column c with row operations; mirror on the next matrix
        col_factors = {}
        for rr in range(len(matrix)):
            if rr == r or matrix[rr][c].is_zero():
                continue
            factor = matrix[rr][c].scale(ring.coeff_div(ring.coeff(1), u))
            col_factors[rr] = factor
            matrix[rr] = [a - b * factor for a, b in zip(matrix[rr], matrix[r])]
        if k + 1 < len(steps) and steps[k + 1][1] is not None:
            nxt = steps[k + 1][1]
            for row in nxt:
                bump = ring.zero()
                for rr, factor in col_factors.items():
                    bump = bump + row[rr] * factor
                row[r] = row[r] + bump
        # clear row r with column operations; mirror on the previous matrix
        row_factors = {}
        for cc in range(len(matrix[r])):
            if cc == c or matrix[r][cc].is_zero():
                continue
            factor = matrix[r][cc].scale(ring.coeff_div(ring.coeff(1), u))
            row_factors[cc] = factor
            for row in matrix:
                row[cc] = row[cc] - row[c] * factor
        prev_matrix = steps[k - 1][1]
        if prev_matrix is not None and row_factors:
            bump = [ring.zero()] * len(prev_matrix[c])
            for cc, factor in row_factors.items():
                bump = [b + a * factor for b, a in zip(bump, prev_matrix[cc])]
            prev_matrix[c] = [a + b for a, b in zip(prev_matrix[c], bump)]
        # the cleared row/column pair drops out of the complex
        if k + 1 < len(steps) and steps[k + 1][1] is not None:
            for row in steps[k + 1][1]:
                if not row[r].is_zero():
                    raise AssertionError("complex not exact at struck unit")
                del row[r]
        del matrix[r]
        del steps[k][0][r]
        for row in matrix:
            del row[c]
        del steps[k - 1][0][c]
        if prev_matrix is not None:
            del prev_matrix[c]


def _assert_minimal_complex(res: FreeResolution):
    ring = res.ring
    for k in range(1, len(res.steps)):
        matrix = res.steps[k].matrix
        if matrix is None:
            continue
        for row in matrix:
            for entry in row.coords:
                if not entry.is_zero() and entry.constant_coefficient():
                    raise AssertionError("minimal resolution has a constant entry")
    if res.length > ring.num_vars:
        raise AssertionError("projective dimension exceeds the number of variables")


def projective_dimension(M, as_quotient: bool = False, twists=None,
                         order: MonomialOrder = GREVLEX, ring: Ring = None,
                         ambient_rank: int = None) -> int:
    """Length of the minimal graded free resolution."""
    res = free_resolution(M, as_quotient=as_quotient, twists=twists, order=order,
                          ring=ring, ambient_rank=ambient_rank)
    return res.length


# ---------------------------------------------------------------------------
# Hilbert series
# ---------------------------------------------------------------------------

def _upoly_trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _upoly_add(a, b):
    n = max(len(a), len(b))
    return _upoly_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _upoly_neg(a):
    return tuple(-x for x in a)


def _upoly_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _upoly_trim(out)


def _upoly_shift(a, k):
    if not a:
        return ()
    return _upoly_trim([0] * k + list(a))


def _one_minus_t_power(k):
    out = (1,)
    for _ in range(k):
        out = _upoly_mul(out, (1, -1))
    return out


@dataclass(frozen=True)
class RationalSeries:
    """A Hilbert series numerator/(1-t)^denominator_exponent, exact integers."""

    numerator: tuple          # little-endian integer coefficients
    denominator_exponent: int

    @classmethod
    def from_coeffs(cls, coeffs, denominator_exponent):
        return cls(_upoly_trim(coeffs), denominator_exponent)

    @classmethod
    def zero(cls, denominator_exponent):
        return cls((), denominator_exponent)

    @classmethod
    def monomial(cls, degree, denominator_exponent, coefficient=1):
        return cls(_upoly_trim([0] * degree + [coefficient]), denominator_exponent)

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        d = max(self.denominator_exponent, other.denominator_exponent)
        a = _upoly_mul(self.numerator, _one_minus_t_power(d - self.denominator_exponent))
        b = _upoly_mul(other.numerator, _one_minus_t_power(d - other.denominator_exponent))
        return RationalSeries(_upoly_add(a, b), d)

    def __sub__(self, other: "RationalSeries") -> "RationalSeries":
        return self + RationalSeries(_upoly_neg(other.numerator), other.denominator_exponent)

    def shift(self, k: int) -> "RationalSeries":
        return RationalSeries(_upoly_shift(self.numerator, k), self.denominator_exponent)

    def scale(self, n: int) -> "RationalSeries":
        return RationalSeries(_upoly_trim([n * c for c in self.numerator]), self.denominator_exponent)

    def __eq__(self, other):
        if not isinstance(other, RationalSeries):
            return NotImplemented
        d = max(self.denominator_exponent, other.denominator_exponent)
        a = _upoly_mul(self.numerator, _one_minus_t_power(d - self.denominator_exponent))
        b = _upoly_mul(other.numerator, _one_minus_t_power(d - other.denominator_exponent))
        return a == b

    def __hash__(self):
        return hash(self.normalized_pair())

    def normalized_pair(self):
        """(numerator, exponent) with all common (1-t) factors cancelled."""
        num = list(self.numerator)
        exp = self.denominator_exponent
        while num and exp > 0 and sum(num) == 0:
            # num(1) == 0, so num = (1 - t) * q with q the prefix sums
            acc = 0
            q = []
            for c in num[:-1]:
                acc += c
                q.append(acc)
            num = list(_upoly_trim(q))
            exp -= 1
        return _upoly_trim(num), exp

    def normalized(self) -> "RationalSeries":
        num, exp = self.normalized_pair()
        return RationalSeries(num, exp)

    def __str__(self):
        num, exp = self.normalized_pair()
        if not num:
            return "0"
        pieces = []
        for i, c in enumerate(num):
            if c == 0:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                tpow = "t" if i == 1 else f"t^{i}"
                body = tpow if abs(c) == 1 else f"{abs(c)}*{tpow}"
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append(("- " if c < 0 else "+ ") + body)
        numerator = " ".join(pieces)
        if exp == 0:
            return numerator
        denom = "(1 - t)" if exp == 1 else f"(1 - t)^{exp}"
        return f"({numerator})/{denom}"


def _monomial_ideal_quotient_numerator(monomials, ring: Ring):
    """Numerator of HS(R/J) for a monomial ideal J, by inclusion-exclusion."""
    # keep only the minimal generators
    mons = []
    for m in sorted(set(monomials), key=lambda m: (monomial_degree(m), m)):
        if not any(monomial_divides(p, m) for p in mons):
            mons.append(m)
    result = {0: 1}

    def accumulate(idx, lcm, sign):
        for j in range(idx, len(mons)):
            combined = monomial_lcm(lcm, mons[j]) if lcm is not None else mons[j]
            d = monomial_degree(combined)
            result[d] = result.get(d, 0) + sign
            accumulate(j + 1, combined, -sign)

    accumulate(0, None, -1)
    size = max(result) + 1 if result else 0
    coeffs = [0] * size
    for d, c in result.items():
        coeffs[d] = c
    return _upoly_trim(coeffs)


def hilbert_series(M, twists=None, as_quotient: bool = False,
                   order: MonomialOrder = GREVLEX, ring: Ring = None,
                   ambient_rank: int = None) -> RationalSeries:
    """Hilbert series of a graded submodule of R^m (or of the quotient).

    Uses HS(M) = HS(LT M): the leading-term module splits by position into
    monomial ideals whose series come from inclusion-exclusion.  The twists
    give the degrees of the ambient basis vectors (default 0).
    """
    gens, ring, rank = _gens_ring_rank(M, ring, ambient_rank)
    gens = [g for g in gens if not g.is_zero()]
    if twists is None:
        twists = (0,) * rank
    else:
        twists = tuple(twists)
    _check_graded(gens, twists)
    d = ring.num_vars
    per_position = [[] for _ in range(rank)]
    if gens:
        gb = buchberger(gens, order, ring=ring, ambient_rank=rank)
        for e in gb.elements:
            pos, mono, _ = e.leading(order)
            per_position[pos].append(mono)
    total = RationalSeries.zero(d)
    for i in range(rank):
        n_quot = _monomial_ideal_quotient_numerator(per_position[i], ring)
        if as_quotient:
            piece = n_quot
        else:
            piece = _upoly_add((1,), _upoly_neg(n_quot))
        total = total + RationalSeries(piece, d).shift(twists[i])
    return total


def euler_characteristic_series(res: FreeResolution) -> RationalSeries:
    """Alternating sum of t^twist/(1-t)^d over the resolution steps."""
    d = res.ring.num_vars
    total = RationalSeries.zero(d)
    sign = 1
    for step in res.steps:
        for a in step.twists:
            total = total + RationalSeries.monomial(a, d, sign)
        sign = -sign
    return total


# ---------------------------------------------------------------------------
# regular sequences
# ---------------------------------------------------------------------------

def colon_ideal(gens: Sequence[Polynomial], f: Polynomial,
                order: MonomialOrder = GREVLEX) -> list:
    """Generators of (I : f) = { r : r*f in I }, by the syzygy method."""
    ring = f.ring
    elems = list(gens) + [f]
    syz = syzygies(elems, order, ring=ring, ambient_rank=1)
    out = []
    for v in syz.generators:
        last = v.coords[-1]
        if not last.is_zero():
            out.append(last)
    return out


def equal_ideals(a: Sequence[Polynomial], b: Sequence[Polynomial],
                 order: MonomialOrder = GREVLEX, ring: Ring = None) -> bool:
    """Ideal equality via reduced Groebner bases."""
    a = [f for f in a if not f.is_zero()]
    b = [f for f in b if not f.is_zero()]
    if not a and not b:
        return True
    if ring is None:
        ring = (a or b)[0].ring
    if not a or not b:
        return False
    gba = buchberger(a, order, ring=ring, ambient_rank=1)
    gbb = buchberger(b, order, ring=ring, ambient_rank=1)
    norm_a = sorted((e.coords[0].monic(order) for e in gba.elements), key=str)
    norm_b = sorted((e.coords[0].monic(order) for e in gbb.elements), key=str)
    return norm_a == norm_b


def is_regular_sequence(fs: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> bool:
    """True iff each element is a nonzerodivisor modulo its predecessors
    and the generated ideal is proper."""
    fs = list(fs)
    if not fs:
        raise ValueError("empty sequence")
    ring = fs[0].ring
    one = ring.one()
    gb = buchberger(fs, order, ring=ring, ambient_rank=1)
    member, _ = ideal_membership(one, gb)
    if member:
        return False
    for i, f in enumerate(fs):
        prefix = fs[:i]
        colon = colon_ideal(prefix, f, order)
        if not equal_ideals(colon, prefix, order, ring=ring):
            return False
    return True
