from fractions import Fraction

from hallqt.cartan import CartanData
from hallqt.qcartan import Mono, kr_monomial, qt_torus
from hallqt.qtchar import (eval_t1, fund_support, fund_tchar, kr_tchar,
                           simple_tchar, standard_tchar)
from hallqt.scalars import ScalarRat

a1 = CartanData("A", 1)
a2 = CartanData("A", 2)
a3 = CartanData("A", 3)

one = ScalarRat.from_int(1)
t = ScalarRat.w_power(2)          # t = w^2? no: t^{1/2} = w, so t = w^2
# wait: character side t^{1/2} <-> w, so t = w^2.

# --- A1 fundamental ---
sup = fund_support(a1, 1, 0)
assert set(sup) == {Mono.y(1, 0), Mono.y(1, 2, -1)}, sup
F0 = fund_tchar(a1, 1, 0)
assert len(F0.terms) == 2 and all(c == one for c in F0.terms.values())
assert F0.bar() == F0, "fundamental must be bar-invariant"

# --- A2 fundamental (frozen example) ---
F = fund_tchar(a2, 1, 0)
want = {Mono.y(1, 0),
        Mono.from_dict({(1, 2): -1, (2, 1): 1}),
        Mono.y(2, 3, -1)}
assert set(F.terms) == want, F.terms
assert all(c == one for c in F.terms.values())
assert F.bar() == F

# --- A3 middle-node fundamental: 6 monomials (minuscule), bar-invariant ---
F2 = fund_tchar(a3, 2, 0)
assert len(F2.terms) == 6, len(F2.terms)
assert F2.bar() == F2
assert Mono.y(2, 4, -1) in F2.terms  # lowest

# --- A1 standard element on Y0 Y2 ---
m = Mono.from_dict({(1, 0): 1, (1, 2): 1})
M = standard_tchar(a1, m)
assert M.coeff(m) == one
L = simple_tchar(a1, m)
# triangularity: M_t(Y0Y2) = L_t(Y0Y2) + t * M_t(1)
Mtriv = standard_tchar(a1, Mono.unit())
assert Mtriv == qt_torus(a1).one()
tpow = ScalarRat.w_power(2)
diff = M - L
want_diff = tpow * Mtriv
assert diff == want_diff, (diff.render(), want_diff.render())
assert L.bar() == L

# KR: F_t = L_t for Kirillov-Reshetikhin weights
kr = kr_monomial(1, 0, 2)
assert simple_tchar(a1, kr) == standard_tchar(a1, kr) - tpow * Mtriv, "A1 KR Y0Y2 is not KR... check"
# actually Y_{1,0}Y_{1,2} IS the KR weight W_{2,0}; its simple char has 3 monomials
LKR = kr_tchar(a1, 1, 0, 2)
assert len(LKR.terms) == 3, LKR.render()
# t=1 values all 1
assert all(v == Fraction(1) for v in eval_t1(LKR).values())

# A2: KR = fundamental at k=1
assert kr_tchar(a2, 1, 0, 1) == fund_tchar(a2, 1, 0)

# A2 simple on Y_{1,0}Y_{2,1}: smoke (bar-invariant, top coeff 1)
m2 = Mono.from_dict({(1, 0): 1, (2, 1): 1})
L2 = simple_tchar(a2, m2)
assert L2.bar() == L2
assert L2.coeff(m2) == one
ev = eval_t1(L2)
assert all(v >= 0 for v in ev.values())
dim = sum(ev.values())
print("dim L(Y10 Y21) =", dim, "(#monomials %d)" % len(L2.terms))

print("qtchar OK")
