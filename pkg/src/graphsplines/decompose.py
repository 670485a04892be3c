"""Removing interior edges from cycles and splitting graphs into disjoint cycles.

A removal zeroes one (cycle row, edge column) entry of the boundary matrix;
it is legal when the entry lies in the ideal generated by the signed labels
of the row's exterior edges.  Each legal removal comes with an explicit
witness, and the witness drives a coordinate-level isomorphism between the
kernels before and after the removal, so nothing about the syzygy module is
lost along the way.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .poly import Polynomial, format_poly
from .groebner import ModuleElement, ideal_membership
from .graphs import (
    BoundaryMatrix,
    CycleBasis,
    EdgeLabeledGraph,
    boundary_matrix,
    cycle_basis,
)

__all__ = [
    "RemovalStep",
    "DecompositionResult",
    "StaleStepError",
    "is_removable",
    "remove_edge",
    "split_off",
    "decompose",
    "syzygy_isomorphism",
    "syzygy_isomorphism_inverse",
]

EXHAUSTIVE_EDGE_LIMIT = 12


class StaleStepError(ValueError):
    """A removal step applied to a matrix state it no longer matches."""


@dataclass(frozen=True)
class RemovalStep:
    """One legal removal: the entry at (cycle_index, edge_id) may be zeroed.

    witness maps exterior edge ids of the row to coefficients c_e with

        entry(cycle, removed) == sum of c_e * entry(cycle, e)

    taken against the signed entries exactly as they sit in the row, so the
    kernel correction below needs no sign fixups.
    """

    cycle_index: int
    edge_id: int
    witness: Tuple[Tuple[int, Polynomial], ...]

    def witness_dict(self) -> Dict[int, Polynomial]:
        return dict(self.witness)


def _classify_counts(matrix: BoundaryMatrix) -> Dict[int, int]:
    return {j: len(matrix.column_support(j)) for j in range(matrix.ncols)}


def is_removable(matrix: BoundaryMatrix, cycle_index: int, edge_id: int) -> Optional[RemovalStep]:
    """Check removability of an interior edge from one cycle row.

    Returns the witnessed step, or None when the membership test fails.
    Raises if the edge is not on the cycle or not interior in the current
    state.
    """
    basis = matrix.basis
    if not basis.cycles:
        raise ValueError("acyclic graph has no removable edges")
    if cycle_index < 0 or cycle_index >= len(basis.cycles):
        raise ValueError(f"no cycle row {cycle_index}")
    cycle = basis.cycles[cycle_index]
    if edge_id not in cycle.edge_set:
        raise ValueError(f"edge {edge_id} is not on cycle {cycle_index}")
    counts = _classify_counts(matrix)
    if counts[edge_id] < 2:
        raise ValueError(f"edge {edge_id} is not interior")
    target = matrix.entry(cycle_index, edge_id)
    if target.is_zero():
        return RemovalStep(cycle_index, edge_id, ())
    exterior = [
        j for j in matrix.row_support(cycle_index)
        if j != edge_id and counts[j] == 1
    ]
    if not exterior:
        return None
    gens = [matrix.entry(cycle_index, j) for j in exterior]
    member, coeffs = ideal_membership(target, gens)
    if not member:
        return None
    witness = tuple(
        (j, c) for j, c in zip(exterior, coeffs) if not c.is_zero()
    )
    return RemovalStep(cycle_index, edge_id, witness)


def remove_edge(matrix: BoundaryMatrix, step: RemovalStep) -> BoundaryMatrix:
    """Zero the step's entry; reject the step if the entry is already zero."""
    if matrix.entry(step.cycle_index, step.edge_id).is_zero():
        raise StaleStepError(
            f"entry ({step.cycle_index}, {step.edge_id}) is already zero")
    return matrix.with_zeroed(step.cycle_index, step.edge_id)


# ---------------------------------------------------------------------------
# the explicit kernel isomorphism attached to one removal
# ---------------------------------------------------------------------------

def _check_in_kernel(matrix: BoundaryMatrix, v: ModuleElement):
    for i, value in enumerate(matrix.apply(v.coords)):
        if not value.is_zero():
            raise ValueError(f"vector is not in the kernel (row {i} fails)")


def syzygy_isomorphism(matrix_before: BoundaryMatrix, step: RemovalStep,
                       v: ModuleElement, check: bool = True) -> ModuleElement:
    """Map ker(A) to ker(A') along a removal: each witnessed exterior
    coordinate gains c_e * v_removed, the removed coordinate is unchanged."""
    if check:
        _check_in_kernel(matrix_before, v)
    coords = list(v.coords)
    vr = coords[step.edge_id]
    for j, c in step.witness:
        coords[j] = coords[j] + c * vr
    return ModuleElement(v.ring, coords)


def syzygy_isomorphism_inverse(matrix_after: BoundaryMatrix, step: RemovalStep,
                               v: ModuleElement, check: bool = True) -> ModuleElement:
    """Inverse map: subtract the same corrections."""
    if check:
        _check_in_kernel(matrix_after, v)
    coords = list(v.coords)
    vr = coords[step.edge_id]
    for j, c in step.witness:
        coords[j] = coords[j] - c * vr
    return ModuleElement(v.ring, coords)


# ---------------------------------------------------------------------------
# full decompositions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Component:
    """A split-off cycle: the surviving edges of one row of the final matrix."""

    row_index: int
    edge_ids: tuple
    labels: tuple         # the plain edge labels
    signed_labels: tuple  # the row entries, signs included


@dataclass(frozen=True)
class DecompositionResult:
    graph: EdgeLabeledGraph
    basis: CycleBasis
    steps: tuple
    complete: bool
    matrix: BoundaryMatrix           # final state
    components: tuple                # Component per nonempty row
    free_edges: tuple                # edge ids in no cycle row

    @property
    def num_cycles(self) -> int:
        return len(self.components)

    @property
    def num_free_edges(self) -> int:
        return len(self.free_edges)

    def matrix_before_step(self, k: int) -> BoundaryMatrix:
        """The boundary matrix state the k-th step was applied to."""
        m = boundary_matrix(self.graph, self.basis)
        for step in self.steps[:k]:
            m = m.with_zeroed(step.cycle_index, step.edge_id)
        return m

    def to_json_dict(self) -> dict:
        return {
            "complete": self.complete,
            "steps": [
                {
                    "cycle": step.cycle_index,
                    "edge": f"e{step.edge_id + 1}",
                    "witness": {f"e{j + 1}": format_poly(c) for j, c in step.witness},
                }
                for step in self.steps
            ],
            "cycles": [
                {
                    "row": comp.row_index,
                    "edges": [f"e{j + 1}" for j in comp.edge_ids],
                    "labels": [format_poly(l) for l in comp.labels],
                }
                for comp in self.components
            ],
            "free_edges": [f"e{j + 1}" for j in self.free_edges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)


def _interior_pairs(matrix: BoundaryMatrix) -> List[Tuple[int, int]]:
    counts = _classify_counts(matrix)
    pairs = []
    for i in range(matrix.nrows):
        for j in matrix.row_support(i):
            if counts[j] >= 2:
                pairs.append((i, j))
    return pairs


def _finish(graph, basis, matrix, steps, complete) -> DecompositionResult:
    components = []
    in_cycle = set()
    for i in range(matrix.nrows):
        support = matrix.row_support(i)
        if not support:
            continue
        in_cycle.update(support)
        components.append(Component(
            row_index=i,
            edge_ids=tuple(support),
            labels=tuple(graph.edges[j].label for j in support),
            signed_labels=tuple(matrix.entry(i, j) for j in support),
        ))
    free = tuple(j for j in range(matrix.ncols) if j not in in_cycle)
    return DecompositionResult(graph, basis, tuple(steps), complete, matrix,
                               tuple(components), free)


def decompose(G: EdgeLabeledGraph, basis: Optional[CycleBasis] = None,
              order: str = "greedy") -> DecompositionResult:
    """Drive removals until no interior edge remains.

    "greedy" scans (cycle index, edge id) pairs in lexicographic order and
    applies the first removable one, rescanning after every removal; it
    stops incomplete when no pair is removable.  "exhaustive" backtracks
    over removal sequences (graphs up to 12 edges), so it decides whether
    any removal order decomposes the graph.
    """
    if order not in ("greedy", "exhaustive"):
        raise ValueError(f"unknown removal order {order!r}")
    if basis is None:
        basis = cycle_basis(G)
    matrix = boundary_matrix(G, basis)
    if order == "greedy":
        steps: List[RemovalStep] = []
        while True:
            pairs = _interior_pairs(matrix)
            if not pairs:
                return _finish(G, basis, matrix, steps, True)
            for i, j in pairs:
                step = is_removable(matrix, i, j)
                if step is not None:
                    matrix = remove_edge(matrix, step)
                    steps.append(step)
                    break
            else:
                return _finish(G, basis, matrix, steps, False)

    if G.num_edges > EXHAUSTIVE_EDGE_LIMIT:
        raise ValueError(
            f"exhaustive order is limited to {EXHAUSTIVE_EDGE_LIMIT} edges")
    dead: set = set()

    def search(matrix, steps):
        key = matrix.zeroed
        if key in dead:
            return None
        pairs = _interior_pairs(matrix)
        if not pairs:
            return matrix, steps
        for i, j in pairs:
            step = is_removable(matrix, i, j)
            if step is None:
                continue
            found = search(remove_edge(matrix, step), steps + [step])
            if found is not None:
                return found
        dead.add(key)
        return None

    found = search(matrix, [])
    if found is None:
        # report the greedy attempt as the partial result
        return decompose(G, basis, order="greedy")
    final_matrix, steps = found
    return _finish(G, basis, final_matrix, steps, True)


def split_off(result_or_matrix) -> EdgeLabeledGraph:
    """Realize the split graph: disjoint cycles plus free edges.

    Every edge keeps its id (declaration order); cycle components get fresh
    vertices.  The boundary matrix of the realized graph carries the same
    row supports as the final matrix of the decomposition.  Rows left with
    a single edge cannot be realized (they would need a loop).
    """
    if isinstance(result_or_matrix, DecompositionResult):
        result = result_or_matrix
    else:
        raise TypeError("split_off expects a DecompositionResult")
    if not result.complete:
        raise ValueError("no splittable state: decomposition is incomplete")
    G = result.graph
    placement: Dict[int, Tuple[int, int]] = {}
    for comp in result.components:
        if len(comp.edge_ids) == 1:
            raise ValueError(
                "a cycle row shrank to a single edge; the split graph would need a loop")
        for k, j in enumerate(comp.edge_ids):
            placement[j] = (comp.row_index, k)
    vertices: List[str] = []
    endpoints: Dict[int, Tuple[str, str]] = {}
    for comp in result.components:
        names = [f"c{comp.row_index}v{k}" for k in range(len(comp.edge_ids))]
        vertices.extend(names)
        for k, j in enumerate(comp.edge_ids):
            endpoints[j] = (names[k], names[(k + 1) % len(names)])
    for j in result.free_edges:
        a, b = f"f{j}a", f"f{j}b"
        vertices.extend([a, b])
        endpoints[j] = (a, b)
    edges = [
        (endpoints[j][0], endpoints[j][1], G.edges[j].label)
        for j in range(G.num_edges)
    ]
    return EdgeLabeledGraph(vertices, edges, G.ring)
