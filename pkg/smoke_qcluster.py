import time

from hallqt.cartan import CartanData, AdmissibleSeq, default_height
from hallqt.hallfq import Quiver
from hallqt.derivedcat import DCat
from hallqt.sdhall import SDH
import hallqt.qcluster as qc

t0 = time.time()
g = CartanData("A", 1)
eps = default_height(g)
quiver = Quiver.from_height(g, eps)
dc = DCat.from_height(quiver)
seq = AdmissibleSeq(g, eps)
print("A1 eps", eps, "word", seq.word)
for k in range(-1, 5):
    print("  k=%d -> (%d,%d)" % (k, seq.i(k), seq.p(k)))

seed = qc.window_seed(dc, seq, 1, 3)
print("vertices", seed.vertices)
print("frozen", sorted(seed.frozen, key=repr))
print("b", seed.b)
print("lam", seed.lam)
print("mono", [m.render() if m else None for m in seed.mono])
print("deg", seed.deg)
print("compat", qc.compatibility_audit(seed))
print("homog", qc.homogeneity_audit(seed))
print("greenred", qc.green_red_audit(seed))

k = seed.mutable[0]
after = seed.mutate(k)
back = after.mutate(k)
print("mu2 == id:", back == seed)
print("once-mutated:", qc.once_mutated_form(seed, k))
print("partner mono:", after.mono[seed.idx(k)].render())

ctx = SDH(dc)
for kk in seed.mutable:
    rep = qc.theta_check(ctx, seed, kk)
    print("theta", kk, {s: rep[s] for s in ("sdh", "quotient", "torus", "degree")})
print("%.2fs" % (time.time() - t0))
