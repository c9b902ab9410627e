from fractions import Fraction

from hallqt.cartan import CartanData
from hallqt.derivedcat import DCat
from hallqt.hallfq import Quiver, label_of_roots
from hallqt.qcartan import Mono
from hallqt.scalars import ScalarRat
from hallqt.sdhall import (SDH, check_presentation, factor_product,
                           leading_coeff, leading_key, qpoly, rescale_unit,
                           simple_lift, standard_lift, verify_tsystem)

one = ScalarRat.from_int(1)
v = ScalarRat.v_power


def ctx_for(typ, n, eps=None):
    g = CartanData(typ, n)
    q = Quiver.from_height(g, eps)
    dc = DCat.from_height(q, eps) if eps else DCat.from_height(q, None)
    return dc


# --- A1, eps {1:1} ---
a1 = CartanData("A", 1)
q1 = Quiver.from_height(a1, {1: 1})
dc1 = DCat(q1, (1,))
H1 = SDH(dc1)

S = label_of_roots(((1,),))
S2 = label_of_roots(((1,), (1,)))

# unrescaled adjacent-level products, frozen from the brute checks:
# E_{S,m} E_{S,m+1} = q^{-1} E_{S,m+1} E_{S,m} + v^{-1}(q-1)^{-1} K_{S,m}
lhs = H1.e(S, 0) * H1.e(S, 1)
rhs = (H1.e(S, 1) * H1.e(S, 0)) * v(-2) + H1.k((1,), 0) * (v(-1) / (v(2) - one))
assert (lhs - rhs).is_zero, lhs.render()

# same level: E_{S,0}^2 = v(q+1) E_{S^2,0}
sq = H1.e(S, 0) * H1.e(S, 0)
want = H1.e(S2, 0) * (v(1) * (v(2) + one))
assert (sq - want).is_zero, sq.render()

# presentation audit, small window
fails = check_presentation(H1, -1, 1)
assert not fails, fails

# --- A2 default orientation (arrow 2 -> 1) ---
a2 = CartanData("A", 2)
q2 = Quiver.from_height(a2, None)
dc2 = DCat.from_height(q2, None)
H2 = SDH(dc2)
fails = check_presentation(H2, -1, 1)
assert not fails, fails

# --- A2 reversed orientation ---
q2r = Quiver(a2, ((1, 2),))
dc2r = DCat.from_height(q2r, q2r.height())
H2r = SDH(dc2r)
fails = check_presentation(H2r, -1, 1)
assert not fails, fails

print("presentation OK (A1, A2 both orientations)")

# --- homogeneity / degree bookkeeping ---
x = H2.e_simple(1, 0) * H2.e_simple(2, 1)
d = x.degree()
print("deg(E_{S1,0} E_{S2,1}) =", d)

# --- standard/simple lifts, A1 goldens ---
m = Mono.from_dict({(1, 1): 1, (1, 3): 1})
Mv = standard_lift(H1, m)
Lv = simple_lift(H1, m)
print("M_v(y11 y13) =", Mv.render())
print("L_v(y11 y13) =", Lv.render())
diff = Lv - Mv
# correction must be the bar coefficient t->v times a(1) on the unit word with a K
for key, c in diff.terms.items():
    ew, kw = key
    assert ew == (), (key, c.render())
    print("correction:", H1.render_key(key), c.render())

# --- A2 simple lift golden ---
m2 = Mono.from_dict({(1, 0): 1, (1, 2): 1})
Lv2 = simple_lift(H2, m2)
print("L_v(y10 y12) =", Lv2.render())

# --- T-system, A1 k=1 p=0 (even-height context so p = 0 has the right parity) ---
q1e = Quiver.from_height(a1, {1: 0})
H1e = SDH(DCat(q1e, (0,)))
out = verify_tsystem(H1e, 1, 1, 0)
print("A1 T-system (a, b) =", out["a"], out["b"], "K:", out["k_levels"])
assert out["a"] == Fraction(-1) and out["b"] == Fraction(0), out

print("sdhall OK")
