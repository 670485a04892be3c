"""Edge-labeled graphs, cycle bases, boundary matrices and spline checks.

Graphs are undirected and may carry parallel edges (a 2-cycle is a pair of
parallel edges); loops are rejected.  Each edge stores one nonzero
polynomial label, so every edge ideal is principal and the spline condition
on an edge is a plain divisibility test.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .poly import Polynomial, Ring, multivariate_divide, parse_poly
from .groebner import Submodule, kernel_of_matrix

__all__ = [
    "Edge",
    "EdgeLabeledGraph",
    "Cycle",
    "CycleBasis",
    "BoundaryMatrix",
    "Spline",
    "GraphFormatError",
    "cycle_basis",
    "classify_edges",
    "boundary_matrix",
    "verify_spline",
    "trivial_spline",
    "parse_graph",
    "parse_spline_file",
]


class GraphFormatError(ValueError):
    """Raised on malformed graph or spline files."""


@dataclass(frozen=True)
class Edge:
    u: str
    v: str
    label: Polynomial
    index: int

    def other(self, vertex: str) -> str:
        return self.v if vertex == self.u else self.u


class EdgeLabeledGraph:
    """An undirected graph with one polynomial label per edge.

    Vertex order is declaration order and fixes the reference orientation:
    each edge is stored with u before v in that order, and a cycle
    traversing u -> v picks up the label with a plus sign.
    """

    def __init__(self, vertices: Sequence[str], edges: Sequence[tuple], ring: Ring):
        self.ring = ring
        self.vertices = tuple(str(v) for v in vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex names")
        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}
        out = []
        for idx, (u, v, label) in enumerate(edges):
            u, v = str(u), str(v)
            if u == v:
                raise ValueError(f"loop at vertex {u!r} not allowed")
            if u not in self.vertex_index or v not in self.vertex_index:
                raise ValueError(f"edge endpoint not declared: {u!r}-{v!r}")
            if label.ring != ring:
                raise ValueError("edge label from a different ring")
            if label.is_zero():
                raise ValueError(f"zero label on edge {u!r}-{v!r}")
            if self.vertex_index[u] > self.vertex_index[v]:
                u, v = v, u
            out.append(Edge(u, v, label, idx))
        self.edges = tuple(out)
        self._adjacency: Dict[str, List[Tuple[str, int]]] = {v: [] for v in self.vertices}
        for e in self.edges:
            self._adjacency[e.u].append((e.v, e.index))
            self._adjacency[e.v].append((e.u, e.index))
        for v in self.vertices:
            self._adjacency[v].sort(key=lambda ne: (self.vertex_index[ne[0]], ne[1]))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def adjacency(self, vertex: str):
        return tuple(self._adjacency[vertex])

    def labels(self) -> tuple:
        return tuple(e.label for e in self.edges)

    def components(self) -> List[Tuple[str, ...]]:
        """Connected components, each a tuple of vertices in vertex order."""
        seen = set()
        comps = []
        for root in self.vertices:
            if root in seen:
                continue
            comp = []
            stack = [root]
            seen.add(root)
            while stack:
                v = stack.pop()
                comp.append(v)
                for w, _ in self._adjacency[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(tuple(sorted(comp, key=self.vertex_index.get)))
        return comps

    def spanning_forest(self) -> Dict[str, Tuple[str, int]]:
        """BFS parent map: vertex -> (parent vertex, edge index); roots absent.

        Roots are the lowest-index vertex of each component, so the forest
        is deterministic.
        """
        parent: Dict[str, Tuple[str, int]] = {}
        visited = set()
        for root in self.vertices:
            if root in visited:
                continue
            visited.add(root)
            queue = [root]
            while queue:
                v = queue.pop(0)
                for w, eid in self._adjacency[v]:
                    if w not in visited:
                        visited.add(w)
                        parent[w] = (v, eid)
                        queue.append(w)
        return parent

    def __repr__(self):
        return f"EdgeLabeledGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"


@dataclass(frozen=True)
class Cycle:
    """A simple closed walk: edges in traversal order with orientation signs.

    signs[k] is +1 when edge_ids[k] is traversed from its stored u to v.
    vertices[k] is the vertex the k-th edge is left from; the walk closes
    back to vertices[0].
    """

    edge_ids: tuple
    signs: tuple
    vertices: tuple

    def __len__(self):
        return len(self.edge_ids)

    @property
    def edge_set(self) -> frozenset:
        return frozenset(self.edge_ids)

    def sign_of(self, edge_id: int) -> int:
        return self.signs[self.edge_ids.index(edge_id)]


@dataclass(frozen=True)
class CycleBasis:
    cycles: tuple
    provenance: str  # "minimum" or "fundamental"

    def __len__(self):
        return len(self.cycles)


def _cycle_from_edge_set(G: EdgeLabeledGraph, edge_ids) -> Cycle:
    """Canonical traversal of a simple cycle given as an edge-id set.

    Starts at the lowest-index vertex and moves toward the higher-index
    neighbor first (parallel edges tie-break by lower edge id), which pins
    rotation and direction.
    """
    edge_ids = sorted(edge_ids)
    edges = {eid: G.edges[eid] for eid in edge_ids}
    incident: Dict[str, List[int]] = {}
    for eid, e in edges.items():
        incident.setdefault(e.u, []).append(eid)
        incident.setdefault(e.v, []).append(eid)
    for v, ids in incident.items():
        if len(ids) != 2:
            raise ValueError("edge set is not a simple cycle")
    start = min(incident, key=G.vertex_index.get)
    first = max(
        incident[start],
        key=lambda eid: (G.vertex_index[edges[eid].other(start)], -eid),
    )
    order: List[int] = []
    signs: List[int] = []
    verts: List[str] = []
    current = start
    eid = first
    while True:
        e = edges[eid]
        order.append(eid)
        signs.append(1 if current == e.u else -1)
        verts.append(current)
        current = e.other(current)
        if current == start:
            break
        nxt = [k for k in incident[current] if k != eid]
        eid = nxt[0]
    return Cycle(tuple(order), tuple(signs), tuple(verts))


def _edge_mask(edge_ids) -> int:
    mask = 0
    for eid in edge_ids:
        mask |= 1 << eid
    return mask


def _independent(mask: int, pivots: Dict[int, int]) -> Optional[int]:
    """Reduce mask against the pivot rows; nonzero residue means independent."""
    while mask:
        high = mask.bit_length() - 1
        if high not in pivots:
            return mask
        mask ^= pivots[high]
    return None


def _shortest_path_edges(G: EdgeLabeledGraph, source: str):
    """BFS tree from source: vertex -> list of edge ids along the path."""
    paths = {source: []}
    queue = [source]
    while queue:
        v = queue.pop(0)
        for w, eid in G.adjacency(v):
            if w not in paths:
                paths[w] = paths[v] + [eid]
                queue.append(w)
    return paths


def _fundamental_cycles(G: EdgeLabeledGraph) -> List[frozenset]:
    parent = G.spanning_forest()
    tree_edges = {eid for (_, eid) in parent.values()}

    def root_path(v):
        path = {}
        while v in parent:
            p, eid = parent[v]
            path[eid] = True
            v = p
        return v, set(path)

    out = []
    for e in G.edges:
        if e.index in tree_edges:
            continue
        ru, pu = root_path(e.u)
        rv, pv = root_path(e.v)
        if ru != rv:
            raise AssertionError("non-tree edge spans two components")
        cycle = (pu ^ pv) | {e.index}
        out.append(frozenset(cycle))
    return out


def cycle_basis(G: EdgeLabeledGraph, mode: str = "minimum") -> CycleBasis:
    """A GF(2)-independent basis of the cycle space.

    mode "fundamental" takes the chords of a BFS forest; mode "minimum"
    (default) greedily picks shortest independent cycles from a Horton-style
    candidate set (shortest-path trees through every vertex/edge pair, all
    parallel 2-cycles, fundamental cycles as completion insurance).
    """
    if mode not in ("minimum", "fundamental"):
        raise ValueError(f"unknown cycle basis mode {mode!r}")
    dim = G.num_edges - len(G.vertices) + len(G.components())
    fundamental = _fundamental_cycles(G)
    if len(fundamental) != dim:
        raise AssertionError("cycle space dimension mismatch")
    if mode == "fundamental":
        chosen = fundamental
    else:
        candidates = set()
        by_pair: Dict[Tuple[str, str], List[int]] = {}
        for e in G.edges:
            by_pair.setdefault((e.u, e.v), []).append(e.index)
        for ids in by_pair.values():
            for a in range(len(ids)):
                for b in range(a + 1, len(ids)):
                    candidates.add(frozenset((ids[a], ids[b])))
        for v in G.vertices:
            paths = _shortest_path_edges(G, v)
            for e in G.edges:
                if e.u not in paths or e.v not in paths:
                    continue
                pu, pv = paths[e.u], paths[e.v]
                ids = set(pu) | set(pv) | {e.index}
                if e.index in pu or e.index in pv:
                    continue
                if len(ids) != len(pu) + len(pv) + 1:
                    continue
                try:
                    _cycle_from_edge_set(G, ids)
                except ValueError:
                    continue
                candidates.add(frozenset(ids))
        candidates.update(fundamental)
        ordered = sorted(candidates, key=lambda s: (len(s), tuple(sorted(s))))
        chosen = []
        pivots: Dict[int, int] = {}
        for cand in ordered:
            residue = _independent(_edge_mask(cand), pivots)
            if residue is not None:
                pivots[residue.bit_length() - 1] = residue
                chosen.append(cand)
                if len(chosen) == dim:
                    break
        if len(chosen) != dim:
            raise AssertionError("could not complete a minimum cycle basis")
    cycles = [_cycle_from_edge_set(G, ids) for ids in chosen]
    cycles.sort(key=lambda c: tuple(sorted(c.edge_ids)))
    return CycleBasis(tuple(cycles), mode)


def classify_edges(G: EdgeLabeledGraph, basis: CycleBasis) -> Dict[int, str]:
    """interior: on >= 2 basis cycles; exterior: exactly 1; free: none."""
    counts = {e.index: 0 for e in G.edges}
    for cycle in basis.cycles:
        for eid in cycle.edge_ids:
            counts[eid] += 1
    out = {}
    for eid, n in counts.items():
        out[eid] = "interior" if n >= 2 else ("exterior" if n == 1 else "free")
    return out


class BoundaryMatrix:
    """Rows indexed by basis cycles, columns by edges; entries 0 or +-label.

    Removal steps are per-(row, column) overrides that zero single entries,
    so the underlying graph is never mutated and steps stay replayable.  An
    acyclic graph gets the single zero row by convention.
    """

    def __init__(self, G: EdgeLabeledGraph, basis: CycleBasis, zeroed=frozenset()):
        self.graph = G
        self.basis = basis
        self.zeroed = frozenset(zeroed)
        self.nrows = max(1, len(basis.cycles))
        self.ncols = G.num_edges

    def entry(self, i: int, j: int) -> Polynomial:
        if (i, j) in self.zeroed or not self.basis.cycles:
            return self.graph.ring.zero()
        cycle = self.basis.cycles[i]
        if j not in cycle.edge_set:
            return self.graph.ring.zero()
        label = self.graph.edges[j].label
        return label if cycle.sign_of(j) == 1 else -label

    def rows(self) -> List[List[Polynomial]]:
        return [[self.entry(i, j) for j in range(self.ncols)] for i in range(self.nrows)]

    def row_support(self, i: int) -> List[int]:
        return [j for j in range(self.ncols) if not self.entry(i, j).is_zero()]

    def column_support(self, j: int) -> List[int]:
        return [i for i in range(self.nrows) if not self.entry(i, j).is_zero()]

    def with_zeroed(self, i: int, j: int) -> "BoundaryMatrix":
        return BoundaryMatrix(self.graph, self.basis, self.zeroed | {(i, j)})

    def apply(self, coords) -> List[Polynomial]:
        """Matrix-vector product A v for an edge-indexed coordinate vector."""
        if len(coords) != self.ncols:
            raise ValueError("vector length does not match the edge count")
        out = []
        for i in range(self.nrows):
            total = self.graph.ring.zero()
            for j in self.row_support(i):
                total = total + self.entry(i, j) * coords[j]
            out.append(total)
        return out

    def kernel(self) -> Submodule:
        return kernel_of_matrix(self.rows(), ring=self.graph.ring, ncols=self.ncols)

    def __eq__(self, other):
        return isinstance(other, BoundaryMatrix) and self.rows() == other.rows()

    def __repr__(self):
        body = "; ".join(" ".join(str(p) for p in row) for row in self.rows())
        return f"BoundaryMatrix({body})"


def boundary_matrix(G: EdgeLabeledGraph, basis: Optional[CycleBasis] = None) -> BoundaryMatrix:
    if basis is None:
        basis = cycle_basis(G)
    return BoundaryMatrix(G, basis)


# ---------------------------------------------------------------------------
# splines
# ---------------------------------------------------------------------------

class Spline:
    """A vertex labeling; a spline when adjacent labels differ into the edge ideal."""

    def __init__(self, values: Dict[str, Polynomial]):
        self.values = dict(values)

    def __getitem__(self, vertex: str) -> Polynomial:
        return self.values[vertex]

    def __add__(self, other: "Spline") -> "Spline":
        if set(self.values) != set(other.values):
            raise ValueError("splines over different vertex sets")
        return Spline({v: self.values[v] + other.values[v] for v in self.values})

    def scale(self, r: Polynomial) -> "Spline":
        return Spline({v: p * r for v, p in self.values.items()})

    def __eq__(self, other):
        return isinstance(other, Spline) and self.values == other.values

    def __repr__(self):
        body = ", ".join(f"{v}: {p}" for v, p in sorted(self.values.items()))
        return f"Spline({body})"


def trivial_spline(G: EdgeLabeledGraph) -> Spline:
    one = G.ring.one()
    return Spline({v: one for v in G.vertices})


def verify_spline(G: EdgeLabeledGraph, F: Spline):
    """Check the edge conditions; returns (ok, failures).

    failures lists (edge, difference) for every edge whose label does not
    divide the difference of its endpoint labels.
    """
    for v in G.vertices:
        if v not in F.values:
            raise ValueError(f"spline is missing a label for vertex {v!r}")
    failures = []
    for e in G.edges:
        diff = F.values[e.u] - F.values[e.v]
        _, rem = multivariate_divide(diff, [e.label])
        if not rem.is_zero():
            failures.append((e, diff))
    return (not failures), failures


# ---------------------------------------------------------------------------
# file formats
# ---------------------------------------------------------------------------

def parse_graph(text: str, prime: Optional[int] = None) -> EdgeLabeledGraph:
    """Parse the graph file format.

    Sections: `ring x, y`, `vertices a b c`, then one `edge u v : <poly>`
    line per edge; declaration order fixes the edge ids.  Blank lines and
    `#` comments are ignored.
    """
    ring = None
    vertices = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("ring"):
            names = line[len("ring"):].replace(",", " ").split()
            if not names:
                raise GraphFormatError(f"line {lineno}: ring needs variable names")
            try:
                ring = Ring(names, prime=prime)
            except ValueError as exc:
                raise GraphFormatError(f"line {lineno}: {exc}") from exc
        elif line.startswith("vertices"):
            vertices = line[len("vertices"):].split()
            if not vertices:
                raise GraphFormatError(f"line {lineno}: empty vertex list")
        elif line.startswith("edge"):
            if ring is None or vertices is None:
                raise GraphFormatError(f"line {lineno}: edge before ring/vertices")
            head, sep, poly_text = line[len("edge"):].partition(":")
            if not sep:
                raise GraphFormatError(f"line {lineno}: edge line needs ':'")
            endpoints = head.split()
            if len(endpoints) != 2:
                raise GraphFormatError(f"line {lineno}: edge needs two endpoints")
            try:
                label = parse_poly(poly_text, ring)
            except ValueError as exc:
                raise GraphFormatError(f"line {lineno}: {exc}") from exc
            edges.append((endpoints[0], endpoints[1], label))
        else:
            raise GraphFormatError(f"line {lineno}: unrecognized directive {line.split()[0]!r}")
    if ring is None or vertices is None:
        raise GraphFormatError("graph file needs ring and vertices sections")
    try:
        return EdgeLabeledGraph(vertices, edges, ring)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def parse_spline_file(text: str, G: EdgeLabeledGraph) -> Spline:
    """Parse `vertex : <poly>` lines into a Spline over G's ring."""
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, poly_text = line.partition(":")
        if not sep:
            raise GraphFormatError(f"line {lineno}: expected 'vertex : polynomial'")
        vertex = head.strip()
        if vertex not in G.vertex_index:
            raise GraphFormatError(f"line {lineno}: unknown vertex {vertex!r}")
        try:
            values[vertex] = parse_poly(poly_text, G.ring)
        except ValueError as exc:
            raise GraphFormatError(f"line {lineno}: {exc}") from exc
    return Spline(values)
