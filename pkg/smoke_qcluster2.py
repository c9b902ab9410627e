import random
import time

from hallqt.cartan import CartanData, AdmissibleSeq
from hallqt.hallfq import Quiver
from hallqt.derivedcat import DCat
from hallqt.sdhall import SDH
import hallqt.qcluster as qc

t0 = time.time()

# ---- A2 window ----
g2 = CartanData("A", 2)
eps2 = {1: 0, 2: 1}
q2 = Quiver.from_height(g2, eps2)
dc2 = DCat.from_height(q2, eps2)
seq2 = AdmissibleSeq(g2, eps2)
print("A2 word", seq2.word, "map", {k: (seq2.i(k), seq2.p(k)) for k in range(1, 5)})
seed2 = qc.window_seed(dc2, seq2, 1, 4)
print("A2 vertices", seed2.vertices)
print("A2 frozen", sorted(seed2.frozen, key=repr))
print("A2 audits", qc.compatibility_audit(seed2), qc.homogeneity_audit(seed2),
      qc.green_red_audit(seed2))
ctx2 = SDH(dc2)
for k in seed2.mutable:
    rep = qc.theta_check(ctx2, seed2, k)
    assert all(rep[s] for s in ("sdh", "quotient", "torus", "degree")), (k, rep)
print("A2 initial theta: all pass  %.2fs" % (time.time() - t0))

rng = random.Random(7)
cur = seed2
for step in range(4):
    k = cur.mutable[rng.randrange(len(cur.mutable))]
    rep = qc.theta_check(ctx2, cur, k)
    assert all(rep[s] for s in ("sdh", "quotient", "torus", "degree")), (step, k, rep)
    assert qc.once_mutated_form(cur, k) or step > 0
    cur = cur.mutate(k)
    assert not qc.homogeneity_audit(cur) and not qc.green_red_audit(cur)
    assert not qc.laurent_audit(cur)
    print("  A2 walk step %d at %r: theta ok, mono %s" %
          (step, k, cur.mono[cur.idx(k)].render()))
print("A2 walk theta: all pass  %.2fs" % (time.time() - t0))

# ---- A3 window of the printed figure ----
g3 = CartanData("A", 3)
eps3 = {1: 1, 2: 0, 3: 1}
q3 = Quiver.from_height(g3, eps3)
dc3 = DCat.from_height(q3, eps3)
seq3 = AdmissibleSeq(g3, eps3)
print("A3 word", seq3.word)
seed3 = qc.window_seed(dc3, seq3, -17, 3)
print("A3 n=%d markers=%d" % (seed3.n, len(seed3.markers())))
want_markers = {("K", 1, -1), ("K", 3, -2), ("K", 1, -3),
                ("K", 2, -1), ("K", 2, -2), ("K", 2, -3),
                ("K", 3, -1), ("K", 1, -2), ("K", 3, -3)}
assert set(seed3.markers()) == want_markers, set(seed3.markers())
arrows = sum(max(0, seed3.b[u][s]) for u in range(seed3.n) for s in range(seed3.n))
print("A3 arrow count", arrows, "(expect 53)")

rows = {
    3: ["I_3", "P_1", "I_1[-1]", "P_3[-1]", "I_3[-2]", "P_1[-2]", "I_1[-3]"],
    2: ["I_2", "P_2", "I_2[-1]", "P_2[-1]", "I_2[-2]", "P_2[-2]", "I_2[-3]"],
    1: ["I_1", "P_3", "I_3[-1]", "P_1[-1]", "I_1[-2]", "P_3[-2]", "I_3[-3]"],
}
for i, names in rows.items():
    ps = sorted((x[1] for x in seed3.vertices if len(x) == 2 and x[0] == i),
                reverse=True)
    got = [dc3.name(dc3.happel(i, p)) for p in ps]
    assert got == names, (i, got, names)
print("A3 object names match the printed window")

assert not qc.compatibility_audit(seed3)
assert not qc.homogeneity_audit(seed3)
assert not qc.green_red_audit(seed3)
cur = seed3
rng = random.Random(11)
for step in range(10):
    k = cur.mutable[rng.randrange(len(cur.mutable))]
    cur = cur.mutate(k)
    assert not qc.homogeneity_audit(cur), step
    assert not qc.green_red_audit(cur), step
for u in range(cur.n):
    if cur.mono[u] is not None:
        assert cur.deg[u] == qc.degree_of_monomial(dc3, cur.mono[u]), u
print("A3 10 random mutations: homogeneity, framing, degree bookkeeping ok  %.2fs"
      % (time.time() - t0))
