import sys
sys.path.insert(0, "src")
from graphsplines import *
from graphsplines.poly import format_poly
from graphsplines.groebner import ModuleElement

D33 = """
ring x, y
vertices 1 2 3 4
edge 1 3 : x
edge 1 2 : y
edge 3 4 : y
edge 2 4 : x
edge 2 3 : x^2 + y^2
"""

G = parse_graph(D33)
basis = cycle_basis(G)
print("basis cycles:", [(c.edge_ids, c.signs, c.vertices) for c in basis.cycles])
M = boundary_matrix(G, basis)
for row in M.rows():
    print("[" + ", ".join(format_poly(p) for p in row) + "]")

cls = classify_edges(G, basis)
print("classification:", {f"e{k+1}": v for k, v in sorted(cls.items())})

# removability of e5 (index 4) from the right cycle (row 1)
step = is_removable(M, 1, 4)
print("step:", step)
M2 = remove_edge(M, step)
for row in M2.rows():
    print("A' row: [" + ", ".join(format_poly(p) for p in row) + "]")

ker = M.kernel()
print("ker A:", [str(v) for v in ker.generators])
for v in ker.generators:
    w = syzygy_isomorphism(M, step, v)
    back = syzygy_isomorphism_inverse(M2, step, w)
    print("phi:", v, "->", w, "roundtrip ok:", back == v)

dec = decompose(G)
print("decompose complete:", dec.complete, "steps:", len(dec.steps))
print(dec.to_json())
G2 = split_off(dec)
print("split graph:", G2, "components:", G2.components())

cert = decide_freeness(G)
print(cert.to_text())

# squares instance
D33sq = D33.replace(": x\n", ": x^2\n").replace(": y\n", ": y^2\n")
Gsq = parse_graph(D33sq)
rep = graded_series_report(Gsq)
print("HS(B):", rep.hs_kernel)
for i, edges, hs in rep.components:
    print("  component", i, edges, hs)
print("sum identity:", rep.sum_identity_holds, "| shift:", rep.common_degree, rep.hs_spline_module, rep.shift_identity_holds)

sb = spline_module_generators(Gsq)
print("spline basis size:", len(sb))
for g, (kind, src) in zip(sb.generators, sb.provenance):
    print("  ", kind, g)

# single edge graph
single = parse_graph("ring x, y\nvertices a b\nedge a b : x\n")
sbs = spline_module_generators(single)
print("single edge generators:", [g.values for g in sbs.generators])

# triangle freeness over 3 vars with rank-3 labels (structural rules fail, pd fallback)
G1 = parse_graph("""
ring x, y, z
vertices 1 2 3
edge 1 2 : x^3 + y*z^2
edge 2 3 : x^2 + y^2
edge 1 3 : x*z^2 + y^3
""")
cert1 = decide_freeness(G1)
print(cert1.to_text())
