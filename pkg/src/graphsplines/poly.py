"""Exact multivariate polynomial arithmetic over QQ (or a small prime field).

Monomials are plain exponent tuples, polynomials are immutable term maps,
and every operation is exact.  This module is the currency used by the
Groebner engine and the graph layer: nothing here ever rounds.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from typing import Iterable, Optional, Sequence, Union

__all__ = [
    "Ring",
    "Polynomial",
    "MonomialOrder",
    "GREVLEX",
    "LEX",
    "GRLEX",
    "ZERO_DEGREE",
    "PolyParseError",
    "parse_poly",
    "multivariate_divide",
    "homogeneous_degree",
    "linear_span_dim",
]

_NAME_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*\Z")

# Distinguished homogeneity tag for the zero polynomial; never an int so it
# cannot be confused with an actual degree.
ZERO_DEGREE = "zero"


class PolyParseError(ValueError):
    """Raised on malformed polynomial text or unknown variables."""


class Ring:
    """A polynomial ring k[x_1, ..., x_d], k = QQ or GF(p) for a small prime p."""

    __slots__ = ("variables", "prime", "_index")

    def __init__(self, variables: Sequence[str], prime: Optional[int] = None):
        variables = tuple(variables)
        if not variables:
            raise ValueError("ring needs at least one variable")
        for name in variables:
            if not _NAME_RE.match(name):
                raise ValueError(f"bad variable name {name!r}")
        if len(set(variables)) != len(variables):
            raise ValueError("variable names must be unique")
        if prime is not None:
            if prime < 2 or prime >= 2**31 or not _is_prime(prime):
                raise ValueError(f"field characteristic must be a prime < 2^31, got {prime}")
        self.variables = variables
        self.prime = prime
        self._index = {name: i for i, name in enumerate(variables)}

    @property
    def num_vars(self) -> int:
        return len(self.variables)

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and self.variables == other.variables
            and self.prime == other.prime
        )

    def __hash__(self):
        return hash((self.variables, self.prime))

    def __repr__(self):
        field = "QQ" if self.prime is None else f"GF({self.prime})"
        return f"Ring({field}[{', '.join(self.variables)}])"

    # -- coefficient arithmetic (Fraction over QQ, ints mod p over GF(p)) --

    def coeff(self, value) -> Union[Fraction, int]:
        """Coerce an int/Fraction/string into a field element."""
        if self.prime is None:
            return Fraction(value)
        f = Fraction(value)
        den_inv = pow(f.denominator % self.prime, self.prime - 2, self.prime)
        return (f.numerator * den_inv) % self.prime

    def coeff_add(self, a, b):
        return a + b if self.prime is None else (a + b) % self.prime

    def coeff_mul(self, a, b):
        return a * b if self.prime is None else (a * b) % self.prime

    def coeff_neg(self, a):
        return -a if self.prime is None else (-a) % self.prime

    def coeff_div(self, a, b):
        if self.prime is None:
            return a / b
        return (a * pow(b, self.prime - 2, self.prime)) % self.prime

    def one(self) -> "Polynomial":
        return Polynomial(self, {(0,) * self.num_vars: self.coeff(1)})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def constant(self, value) -> "Polynomial":
        c = self.coeff(value)
        if not c:
            return self.zero()
        return Polynomial(self, {(0,) * self.num_vars: c})

    def gen(self, name: str) -> "Polynomial":
        i = self._index[name]
        exps = tuple(1 if j == i else 0 for j in range(self.num_vars))
        return Polynomial(self, {exps: self.coeff(1)})

    def gens(self) -> tuple:
        return tuple(self.gen(v) for v in self.variables)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class MonomialOrder:
    """A monomial order given as a sort key on exponent tuples.

    The key is ascending: bigger key means bigger monomial.  All three
    orders are total, multiplicative and have 1 as their minimum, which is
    what the division algorithm and Buchberger need.  For free-module
    elements the position-over-term rule is used: positions are compared by
    index first (ascending), monomials break ties.
    """

    __slots__ = ("kind",)

    def __init__(self, kind: str):
        if kind not in ("grevlex", "lex", "grlex"):
            raise ValueError(f"unknown monomial order {kind!r}")
        self.kind = kind

    def key(self, exps: tuple):
        if self.kind == "grevlex":
            return (sum(exps), tuple(-e for e in reversed(exps)))
        if self.kind == "lex":
            return exps
        return (sum(exps), exps)  # grlex

    def module_key(self, position: int, exps: tuple):
        return (position, self.key(exps))

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.kind == other.kind

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return f"MonomialOrder({self.kind!r})"


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")
GRLEX = MonomialOrder("grlex")


def monomial_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))

def monomial_divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))

def monomial_div(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))

def monomial_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))

def monomial_degree(a: tuple) -> int:
    return sum(a)


class Polynomial:
    """An exact polynomial: a map monomial -> nonzero coefficient.

    Instances are immutable; arithmetic always produces new objects in
    canonical form (no zero coefficients stored).
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c}
        self._hash = None

    # -- basic queries --

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> Optional[int]:
        """Largest total degree of a term, None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(m) for m in self.terms)

    def leading_term(self, order: MonomialOrder) -> tuple:
        """(monomial, coefficient) of the largest term."""
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def constant_coefficient(self):
        return self.terms.get((0,) * self.ring.num_vars, self.ring.coeff(0))

    def sorted_terms(self, order: MonomialOrder = GREVLEX):
        return sorted(self.terms.items(), key=lambda mc: order.key(mc[0]), reverse=True)

    # -- arithmetic --

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise ValueError("ring mismatch")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        add = self.ring.coeff_add
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = add(terms.get(m, 0), c)
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial(self.ring, terms)

    def __neg__(self) -> "Polynomial":
        neg = self.ring.coeff_neg
        return Polynomial(self.ring, {m: neg(c) for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        mul = self.ring.coeff_mul
        add = self.ring.coeff_add
        terms: dict = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = monomial_mul(ma, mb)
                s = add(terms.get(m, 0), mul(ca, cb))
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return Polynomial(self.ring, terms)

    def scale(self, scalar) -> "Polynomial":
        c = self.ring.coeff(scalar)
        if not c:
            return self.ring.zero()
        mul = self.ring.coeff_mul
        return Polynomial(self.ring, {m: mul(c, v) for m, v in self.terms.items()})

    def term_mul(self, monomial: tuple, coefficient) -> "Polynomial":
        """Multiply by coefficient * x^monomial."""
        if not coefficient:
            return self.ring.zero()
        mul = self.ring.coeff_mul
        return Polynomial(
            self.ring,
            {monomial_mul(m, monomial): mul(c, coefficient) for m, c in self.terms.items()},
        )

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        for _ in range(n):
            result = result * self
        return result

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        if self.is_zero():
            return self
        _, c = self.leading_term(order)
        div = self.ring.coeff_div
        return Polynomial(self.ring, {m: div(v, c) for m, v in self.terms.items()})

    # -- comparisons --

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return format_poly(self)


# ---------------------------------------------------------------------------
# parsing and printing
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[a-zA-Z][a-zA-Z0-9_]*)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise PolyParseError(f"bad character at position {pos}: {text[pos:pos+10]!r}")
        if m.group("num"):
            tokens.append(("num", int(m.group("num"))))
        elif m.group("name"):
            tokens.append(("name", m.group("name")))
        else:
            tokens.append(("op", m.group("op")))
        pos = m.end()
    return tokens


class _Parser:
    """Recursive descent over the grammar: +, -, *, /, ^, parentheses.

    Implicit multiplication is rejected: `2xy` tokenizes as 2 then `xy`,
    which fails below with a missing-operator error.  `/` is only allowed
    by a nonzero constant so rational coefficients like 3/4 work.
    """

    def __init__(self, tokens, ring: Ring):
        self.tokens = tokens
        self.ring = ring
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise PolyParseError("unexpected end of input")
        self.pos += 1
        return tok

    def parse(self) -> Polynomial:
        poly = self.expr()
        if self.pos != len(self.tokens):
            raise PolyParseError(f"unexpected token {self.tokens[self.pos]!r}")
        return poly

    def expr(self) -> Polynomial:
        result = self.term()
        while True:
            tok = self.peek()
            if tok == ("op", "+"):
                self.next()
                result = result + self.term()
            elif tok == ("op", "-"):
                self.next()
                result = result - self.term()
            else:
                return result

    def term(self) -> Polynomial:
        result = self.factor()
        while True:
            tok = self.peek()
            if tok == ("op", "*"):
                self.next()
                result = result * self.factor()
            elif tok == ("op", "/"):
                self.next()
                denom = self.factor()
                if denom.is_zero():
                    raise PolyParseError("division by zero in a coefficient")
                if denom.total_degree() != 0:
                    raise PolyParseError("division only allowed by a nonzero constant")
                result = result.scale(self.ring.coeff_div(
                    self.ring.coeff(1), denom.constant_coefficient()))
            elif tok is not None and tok[0] in ("num", "name") or tok == ("op", "("):
                raise PolyParseError(
                    "missing operator (implicit multiplication is not allowed)")
            else:
                return result

    def factor(self) -> Polynomial:
        sign = 1
        while self.peek() in (("op", "-"), ("op", "+")):
            if self.next() == ("op", "-"):
                sign = -sign
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.next()
            tok = self.next()
            if tok[0] != "num":
                raise PolyParseError("exponent must be a nonnegative integer")
            base = base ** tok[1]
        return base if sign == 1 else -base

    def atom(self) -> Polynomial:
        tok = self.next()
        if tok[0] == "num":
            return self.ring.constant(tok[1])
        if tok[0] == "name":
            if tok[1] not in self.ring._index:
                raise PolyParseError(f"unknown variable {tok[1]!r}")
            return self.ring.gen(tok[1])
        if tok == ("op", "("):
            inner = self.expr()
            if self.next() != ("op", ")"):
                raise PolyParseError("missing closing parenthesis")
            return inner
        raise PolyParseError(f"unexpected token {tok!r}")


def parse_poly(text: str, ring: Ring) -> Polynomial:
    """Parse polynomial text into canonical form; raises PolyParseError."""
    tokens = _tokenize(text)
    if not tokens:
        raise PolyParseError("empty polynomial text")
    return _Parser(tokens, ring).parse()


def _format_coeff(c) -> str:
    return str(c)


def format_poly(f: Polynomial, order: MonomialOrder = GREVLEX) -> str:
    """Canonical text form; parse(format(f)) == f."""
    if f.is_zero():
        return "0"
    ring = f.ring
    pieces = []
    for m, c in f.sorted_terms(order):
        factors = []
        for name, e in zip(ring.variables, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        neg = (c < 0) if ring.prime is None else False
        mag = -c if neg else c
        if not factors:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_format_coeff(mag)] + factors)
        if not pieces:
            pieces.append("-" + body if neg else body)
        else:
            pieces.append(("- " if neg else "+ ") + body)
    return " ".join(pieces)


# ---------------------------------------------------------------------------
# division, homogeneity, linear span
# ---------------------------------------------------------------------------

def multivariate_divide(
    f: Polynomial,
    divisors: Sequence[Polynomial],
    order: MonomialOrder = GREVLEX,
):
    """Divide f by an ordered list of divisors.

    Returns (quotients, remainder) with f == sum(q_i * g_i) + r, no term of
    r divisible by any divisor's leading monomial, and lm(q_i * g_i) <= lm(f).
    """
    ring = f.ring
    for g in divisors:
        if g.is_zero():
            raise ValueError("zero divisor in division")
        if g.ring != ring:
            raise ValueError("ring mismatch")
    quotients = [ring.zero() for _ in divisors]
    remainder: dict = {}
    work = dict(f.terms)
    leads = [g.leading_term(order) for g in divisors]
    div = ring.coeff_div
    add = ring.coeff_add
    while work:
        m = max(work, key=order.key)
        c = work.pop(m)
        for i, (lm, lc) in enumerate(leads):
            if monomial_divides(lm, m):
                q = monomial_div(m, lm)
                coeff = div(c, lc)
                quotients[i] = quotients[i] + Polynomial(ring, {q: coeff})
                sub = divisors[i].term_mul(q, coeff)
                for mm, cc in sub.terms.items():
                    if mm == m:
                        continue
                    s = add(work.get(mm, 0), ring.coeff_neg(cc))
                    if s:
                        work[mm] = s
                    else:
                        work.pop(mm, None)
                break
        else:
            remainder[m] = c
    return quotients, Polynomial(ring, remainder)


def homogeneous_degree(f: Polynomial):
    """Common total degree of all terms, None if mixed, ZERO_DEGREE for 0."""
    if f.is_zero():
        return ZERO_DEGREE
    degrees = {sum(m) for m in f.terms}
    if len(degrees) == 1:
        return degrees.pop()
    return None


def is_homogeneous(f: Polynomial) -> bool:
    return homogeneous_degree(f) is not None


def linear_span_dim(polys: Iterable[Polynomial]) -> int:
    """Dimension over k of the linear span of the given polynomials.

    The coefficient matrix is formed over the union of all occurring
    monomials (the constant monomial counts as a coordinate whenever it
    occurs) and reduced by exact Gaussian elimination.
    """
    polys = [f for f in polys if not f.is_zero()]
    if not polys:
        return 0
    ring = polys[0].ring
    for f in polys:
        if f.ring != ring:
            raise ValueError("ring mismatch")
    monomials = sorted({m for f in polys for m in f.terms}, key=GREVLEX.key, reverse=True)
    index = {m: j for j, m in enumerate(monomials)}
    rows = []
    for f in polys:
        row = [ring.coeff(0)] * len(monomials)
        for m, c in f.terms.items():
            row[index[m]] = c
        rows.append(row)
    return _row_rank(rows, ring)


def _row_rank(rows, ring: Ring) -> int:
    """Rank by exact row reduction; mutates its input copy."""
    if not rows:
        return 0
    rows = [list(r) for r in rows]
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        for i in range(rank + 1, len(rows)):
            if rows[i][col]:
                factor = ring.coeff_div(rows[i][col], pv)
                rows[i] = [
                    ring.coeff_add(a, ring.coeff_neg(ring.coeff_mul(factor, b)))
                    for a, b in zip(rows[i], rows[rank])
                ]
        rank += 1
        if rank == len(rows):
            break
    return rank


def poly_sum(polys: Iterable[Polynomial], ring: Ring) -> Polynomial:
    return reduce(lambda a, b: a + b, polys, ring.zero())
