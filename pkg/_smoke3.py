import sys, time
sys.path.insert(0, "src")
from graphsplines import *
from graphsplines.poly import format_poly
from graphsplines.groebner import euler_characteristic_series, hilbert_series, free_resolution
from graphsplines.splines import _label_degrees

# criterion 5c candidate: non-decomposable diamond over QQ[x,y,z,t]
NF = """
ring x, y, z, t
vertices 1 2 3 4
edge 1 3 : z^2
edge 1 2 : t^2
edge 3 4 : y^2
edge 2 4 : x^2
edge 2 3 : x*z + y*t
"""
G = parse_graph(NF)
t0 = time.time()
dec = decompose(G, order="exhaustive")
print("decomposes:", dec.complete)
cert = decide_freeness(G)
print(cert.to_text())
print(f"({time.time()-t0:.2f}s)")

# Euler characteristic cross-check of the not-free verdict
M = boundary_matrix(G)
ker = M.kernel()
degrees = _label_degrees(G)
res = free_resolution(list(ker.generators), twists=degrees, ring=G.ring, ambient_rank=G.num_edges)
hs = hilbert_series(list(ker.generators), twists=degrees, ring=G.ring, ambient_rank=G.num_edges)
print("pd:", res.length, "betti:", res.betti_numbers())
print("euler == HS:", euler_characteristic_series(res) == hs)

# theta graph: three parallel edges, tests 2-cycle handling + degenerate rows
TH = """
ring x, y
vertices a b
edge a b : x
edge a b : x
edge a b : y
"""
T = parse_graph(TH)
tb = cycle_basis(T)
print("theta basis:", [(c.edge_ids, c.signs) for c in tb.cycles])
print("theta classify:", classify_edges(T, tb))
td = decompose(T)
print("theta decompose:", td.complete, [ (c.edge_ids, [str(l) for l in c.signed_labels]) for c in td.components])
certT = decide_freeness(T)
print("theta verdict:", certT.verdict, certT.rule)

# fundamental vs minimum basis: same kernel membership behavior on the diamond
D33 = """
ring x, y
vertices 1 2 3 4
edge 1 3 : x
edge 1 2 : y
edge 3 4 : y
edge 2 4 : x
edge 2 3 : x^2 + y^2
"""
Gd = parse_graph(D33)
bmin = cycle_basis(Gd, "minimum")
bfun = cycle_basis(Gd, "fundamental")
print("fundamental cycles:", [c.edge_ids for c in bfun.cycles])
kmin = boundary_matrix(Gd, bmin).kernel()
kfun = boundary_matrix(Gd, bfun).kernel()
from graphsplines.groebner import buchberger, normal_form
gb_min = buchberger(list(kmin.generators), ring=Gd.ring, ambient_rank=5)
gb_fun = buchberger(list(kfun.generators), ring=Gd.ring, ambient_rank=5)
same = all(normal_form(v, gb_fun).is_zero() for v in kmin.generators) and \
       all(normal_form(v, gb_min).is_zero() for v in kfun.generators)
print("kernels agree across bases:", same)

# prime field
Gp = parse_graph(D33, prime=101)
print("prime field kernel:", [str(v) for v in boundary_matrix(Gp).kernel().generators])

# pd_relation_report on a 3-cycle with the pd-4 ideal
C3 = """
ring x, y, z, t
vertices 1 2 3
edge 1 2 : x^2
edge 2 3 : y^2
edge 1 3 : x*z + y*t
"""
Gc = parse_graph(C3)
rep = pd_relation_report(Gc, cycle_basis(Gc).cycles[0])
print("pd relation:", rep)
