import importlib.util
import sys
import time

def load(name, path):
    spec = importlib.util.spec_from_file_location(name, path)
    mod = importlib.util.module_from_spec(spec)
    sys.modules[name] = mod
    spec.loader.exec_module(mod)
    return mod

poly = load("graphsplines.poly", "src/graphsplines/poly.py")
sys.modules["graphsplines"] = type(sys)("graphsplines")
sys.modules["graphsplines"].poly = poly
gb = load("graphsplines.groebner", "src/graphsplines/groebner.py")

Ring, parse = poly.Ring, poly.parse_poly

R = Ring(["x", "y"])
f = parse("x^2 + 2*x + 1", R)
print("parse:", f)
print("roundtrip:", parse(poly.format_poly(f), R) == f)
g = parse("(x+y)*(x-y)", R)
print("(x+y)(x-y) ==", g)
q, r = poly.multivariate_divide(parse("x^2+y^2", R), [parse("y", R), parse("x", R)])
print("divide quotients:", [str(x) for x in q], "rem", r)

R3 = Ring(["x", "y", "z"])
I1 = [parse(s, R3) for s in ["x^3 + y*z^2", "x^2 + y^2", "x*z^2 + y^3"]]
print("span dim I1 gens:", poly.linear_span_dim(I1))

# Groebner basics
basis = gb.buchberger([parse("x", R), parse("y", R)])
print("GB <x,y>:", [str(e) for e in basis.elements])
member, wit = gb.ideal_membership(parse("x^2+y^2", R), [parse("y", R), parse("x", R)])
print("x^2+y^2 in <y,x>:", member, "witness:", [str(w) for w in wit])
member2, _ = gb.ideal_membership(parse("x", R), [parse("x^2", R), parse("y^2", R)])
print("x in <x^2,y^2>:", member2)

syz = gb.syzygies([parse("x^2", R), parse("y^2", R)])
print("Syz(x^2,y^2):", [str(v) for v in syz.generators])
syz2 = gb.syzygies([parse("x", R), parse("x", R)])
print("Syz(x,x):", [str(v) for v in syz2.generators])
syz3 = gb.syzygies([parse("x", R)])
print("Syz(x):", [str(v) for v in syz3.generators])

# kernel of zero matrix
z = gb.kernel_of_matrix([[R.zero(), R.zero(), R.zero()]], ring=R)
print("ker zero 1x3:", [str(v) for v in z.generators])
k2 = gb.kernel_of_matrix([[parse("x", R), parse("y", R)]], ring=R)
print("ker (x y):", [str(v) for v in k2.generators])

# resolutions
t0 = time.time()
res = gb.free_resolution([R3.gen("x"), R3.gen("y"), R3.gen("z")], as_quotient=True)
print("pd R/<x,y,z> =", res.length, "betti:", res.betti_numbers(), f"({time.time()-t0:.2f}s)")

t0 = time.time()
res1 = gb.free_resolution(I1, as_quotient=True)
print("pd R/I1 =", res1.length, "betti:", res1.betti_numbers(), "twists:", [s.twists for s in res1.steps], f"({time.time()-t0:.2f}s)")

R4 = Ring(["x", "y", "z", "t"])
I2 = [parse(s, R4) for s in ["x^2", "y^2", "x*z + y*t"]]
t0 = time.time()
res2 = gb.free_resolution(I2, as_quotient=True)
print("pd R/I2 =", res2.length, "betti:", res2.betti_numbers(), "twists:", [s.twists for s in res2.steps], f"({time.time()-t0:.2f}s)")

# Euler characteristic cross-check for I2
hs_q = gb.hilbert_series(I2, as_quotient=True, ring=R4, ambient_rank=1)
euler = gb.euler_characteristic_series(res2)
print("HS(R/I2):", hs_q, " == euler:", hs_q == euler)

# Example 4.10 Hilbert series check (B generators of the square-labeled diamond)
ME = gb.ModuleElement
def vec(*strs, ring=R):
    return ME(ring, [parse(s, ring) for s in strs])
Bgens = [vec("y^2", "x^2", "0", "0", "0"), vec("0", "0", "x^2", "y^2", "0"), vec("1", "-1", "-1", "1", "1")]
hsB = gb.hilbert_series(Bgens, ring=R, ambient_rank=5)
print("HS(B_G):", hsB)
hsC1 = gb.hilbert_series([vec("y^2", "x^2", "0"), vec("1", "-1", "1")], ring=R, ambient_rank=3)
hsC2 = gb.hilbert_series([vec("x^2", "y^2")], ring=R, ambient_rank=2)
print("HS(B_C1):", hsC1, " HS(B_C2):", hsC2)
print("sum identity:", hsB == hsC1 + hsC2)

# regular sequences
print("regseq [x,y]:", gb.is_regular_sequence([parse("x", R), parse("y", R)]))
print("regseq [x,xy]:", gb.is_regular_sequence([parse("x", R), parse("x*y", R)]))
R4v = [R4.gen(v) for v in ["x", "y", "z", "t"]]
print("regseq vars(4):", gb.is_regular_sequence(R4v))
t0 = time.time()
res4 = gb.free_resolution(R4v, as_quotient=True)
print("pd R/<4 vars> =", res4.length, "betti:", res4.betti_numbers(), f"({time.time()-t0:.2f}s)")

# pd of B for 2-cycle x^2,y^2: submodule resolution of ker(x^2, -y^2)
ker = gb.kernel_of_matrix([[parse("x^2", R), parse("-y^2", R)]], ring=R)
print("ker gens:", [str(v) for v in ker.generators])
resB = gb.free_resolution(ker)
print("pd B(2-cycle) =", resB.length)
EOF = None
