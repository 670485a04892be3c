"""Command-line front end.

Reads a graph file, runs one computation, prints a text or JSON report.
Exit codes: 0 success (an "undecided" freeness verdict is a success),
1 malformed input (file, polynomial or command line), 2 hypothesis
violation (e.g. a graded computation on inhomogeneous labels).
"""

from __future__ import annotations

import argparse
import json
import sys

from .poly import PolyParseError, format_poly, linear_span_dim
from .groebner import HomogeneityError, free_resolution
from .graphs import (
    GraphFormatError,
    boundary_matrix,
    cycle_basis,
    parse_graph,
    parse_spline_file,
    verify_spline,
)
from .decompose import decompose
from .splines import (
    decide_freeness,
    graded_series_report,
    spline_module_generators,
)
from .splines import _label_degrees

__all__ = ["run", "main"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="graphsplines",
                     description="spline modules on edge-labeled graphs")
    parser.add_argument("command", choices=[
        "rank", "matrix", "syzygy", "decompose", "hilbert",
        "resolve", "freeness", "spline-basis", "verify",
    ])
    parser.add_argument("graph", help="graph file")
    parser.add_argument("spline", nargs="?", help="spline file (verify only)")
    parser.add_argument("--json", action="store_true", help="JSON output")
    parser.add_argument("--cycle-basis", choices=["minimum", "fundamental"],
                        default="minimum")
    parser.add_argument("--order", choices=["greedy", "exhaustive"],
                        default="greedy", help="removal order for decompose")
    parser.add_argument("--base-vertex", default=None,
                        help="base vertex for spline-basis")
    parser.add_argument("--field", default="q",
                        help="coefficient field: q (rationals) or a prime")
    return parser


def _edge_name(j: int) -> str:
    return f"e{j + 1}"


def _emit(payload, as_json: bool, text: str):
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1

    if args.field == "q":
        prime = None
    else:
        try:
            prime = int(args.field)
        except ValueError:
            print(f"error: bad field {args.field!r}", file=sys.stderr)
            return 1

    try:
        with open(args.graph) as handle:
            G = parse_graph(handle.read(), prime=prime)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (GraphFormatError, PolyParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    try:
        basis = cycle_basis(G, args.cycle_basis)

        if args.command == "rank":
            rows = [
                {"cycle": i,
                 "edges": [_edge_name(j) for j in c.edge_ids],
                 "rank": linear_span_dim([G.edges[j].label for j in c.edge_ids])}
                for i, c in enumerate(basis.cycles)
            ]
            text = "\n".join(
                f"cycle {r['cycle']} ({' '.join(r['edges'])}): rank {r['rank']}"
                for r in rows
            ) or "no cycles"
            _emit({"cycles": rows}, args.json, text)

        elif args.command == "matrix":
            m = boundary_matrix(G, basis)
            rows = [[format_poly(p) for p in row] for row in m.rows()]
            text = "\n".join("[" + ", ".join(row) + "]" for row in rows)
            _emit({"columns": [_edge_name(j) for j in range(m.ncols)],
                   "rows": rows}, args.json, text)

        elif args.command == "syzygy":
            m = boundary_matrix(G, basis)
            gens = [[format_poly(p) for p in v.coords]
                    for v in m.kernel().generators]
            text = "\n".join("(" + ", ".join(g) + ")" for g in gens) or "0"
            _emit({"generators": gens}, args.json, text)

        elif args.command == "decompose":
            result = decompose(G, basis, order=args.order)
            payload = result.to_json_dict()
            lines = [f"complete: {result.complete}"]
            for step in result.steps:
                witness = ", ".join(
                    f"{_edge_name(j)}: {format_poly(c)}" for j, c in step.witness)
                lines.append(
                    f"remove {_edge_name(step.edge_id)} from cycle "
                    f"{step.cycle_index} (witness {witness or '0'})")
            for comp in result.components:
                labels = ", ".join(format_poly(l) for l in comp.labels)
                lines.append(
                    f"cycle component {comp.row_index}: "
                    f"{' '.join(_edge_name(j) for j in comp.edge_ids)} ({labels})")
            if result.free_edges:
                lines.append("free edges: " +
                             " ".join(_edge_name(j) for j in result.free_edges))
            _emit(payload, args.json, "\n".join(lines))

        elif args.command == "hilbert":
            report = graded_series_report(G, basis)
            payload = report.to_json_dict()
            lines = [f"HS(kernel) = {report.hs_kernel}"]
            for i, edges, hs in report.components:
                lines.append(
                    f"component {i} ({' '.join(_edge_name(j) for j in edges)}): {hs}")
            lines.append(f"free edges: {report.num_free_edges}")
            if report.sum_identity_holds is not None:
                lines.append(f"sum identity holds: {report.sum_identity_holds}")
            if report.common_degree is not None:
                lines.append(f"common label degree: {report.common_degree}")
                lines.append(f"HS(spline module) = {report.hs_spline_module}")
                lines.append(f"shift identity holds: {report.shift_identity_holds}")
            _emit(payload, args.json, "\n".join(lines))

        elif args.command == "resolve":
            degrees = _label_degrees(G)
            if degrees is None:
                raise HomogeneityError("resolve needs homogeneous edge labels")
            m = boundary_matrix(G, basis)
            res = free_resolution(list(m.kernel().generators), twists=degrees,
                                  ring=G.ring, ambient_rank=G.num_edges)
            steps = [{"rank": s.rank, "twists": list(s.twists)} for s in res.steps]
            lines = [f"projective dimension: {res.length}"]
            for k, s in enumerate(steps):
                lines.append(f"step {k}: rank {s['rank']}, twists {s['twists']}")
            _emit({"pd": res.length, "steps": steps}, args.json, "\n".join(lines))

        elif args.command == "freeness":
            certificate = decide_freeness(G, basis)
            _emit(certificate.to_json_dict(), args.json, certificate.to_text())

        elif args.command == "spline-basis":
            if args.base_vertex is not None and args.base_vertex not in G.vertex_index:
                print(f"error: unknown base vertex {args.base_vertex!r}", file=sys.stderr)
                return 1
            sbasis = spline_module_generators(G, basis)
            payload = sbasis.to_json_dict()
            lines = []
            for k, gen in enumerate(sbasis.generators):
                body = ", ".join(f"{v}: {format_poly(gen.values[v])}" for v in G.vertices)
                lines.append(f"generator {k}: {body}")
            _emit(payload, args.json, "\n".join(lines))

        elif args.command == "verify":
            if not args.spline:
                print("error: verify needs a spline file", file=sys.stderr)
                return 1
            try:
                with open(args.spline) as handle:
                    F = parse_spline_file(handle.read(), G)
            except OSError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return 1
            try:
                ok, failures = verify_spline(G, F)
            except ValueError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return 1
            payload = {
                "valid": ok,
                "failures": [
                    {"edge": _edge_name(e.index), "difference": format_poly(diff)}
                    for e, diff in failures
                ],
            }
            lines = [f"valid: {ok}"]
            for e, diff in failures:
                lines.append(
                    f"edge {_edge_name(e.index)} ({e.u}-{e.v}): difference "
                    f"{format_poly(diff)} not divisible by {format_poly(e.label)}")
            _emit(payload, args.json, "\n".join(lines))

    except HomogeneityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GraphFormatError, PolyParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
