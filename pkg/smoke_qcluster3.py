import time

from hallqt.cartan import CartanData, AdmissibleSeq, Chain
from hallqt.hallfq import Quiver
from hallqt.derivedcat import DCat
import hallqt.qcluster as qc

t0 = time.time()
g4 = CartanData("A", 4)
eps4 = {1: 0, 2: -1, 3: 0, 4: -1}
q4 = Quiver.from_height(g4, eps4)
dc4 = DCat.from_height(q4, eps4)
seq4 = AdmissibleSeq(g4, eps4)
print("A4 arrows", q4.arrows, "word", seq4.word)

want_map = {-4: (1, -4), -3: (4, -3), -2: (2, -3), -1: (3, -2), 0: (1, -2),
            1: (2, -1), 2: (4, -1), 3: (1, 0), 4: (3, 0), 5: (2, 1)}
got = {k: (seq4.i(k), seq4.p(k)) for k in want_map}
assert got == want_map, got
extra = {k: (seq4.i(k), seq4.p(k)) for k in (-13, -12, 16, 17, 18, 19)}
print("extra positions", extra)

letters27 = "R" + "LLLL" + "RRRR" + "LLLL" + "RRRR" + "LLLL" + "RRRR" + "LL"
assert len(letters27) == 27
ch28 = Chain(seq4, 3, letters27)
order = qc.addition_order(ch28)
want_order = [3, 4, 2, 1, 0, -1, 5, 6, 7, 8, -2, -3, -4, -5, 9, 10, 11, 12,
              -6, -7, -8, -9, 13, 14, 15, 16, -10, -11]
assert order == want_order, order
print("first ten boxes:", [str(ch28.box(s)) for s in range(1, 11)])
print("envelope", ch28.envelope(28))

cs28 = qc.chain_seed(dc4, ch28)
print("28-chain: %d mutations, %d markers, %.2fs"
      % (len(cs28.mutations), len(cs28.seed.markers()), time.time() - t0))
fr = [s for s in range(1, 29)
      if cs28.slot_vertex[s - 1] in cs28.seed.frozen]
print("frozen slots", fr, "(expect [25, 26, 27, 28])")
assert not qc.homogeneity_audit(cs28.seed)
assert not qc.green_red_audit(cs28.seed)
print("28-chain audits clean")

# creation order by row, against the printed figure layout
bycolor = {r: [s for s in range(1, 29) if ch28.box(s).color == r]
           for r in (1, 2, 3, 4)}
want_rows = {1: [1, 5, 9, 13, 18, 21, 26], 2: [4, 7, 11, 15, 19, 24, 28],
             3: [2, 6, 10, 14, 17, 22, 25], 4: [3, 8, 12, 16, 20, 23, 27]}
assert bycolor == want_rows, bycolor
labels = {}
for s in range(1, 29):
    kstar = qc.box_closed_end(ch28, s)
    labels[s] = dc4.name(dc4.happel(seq4.i(kstar), seq4.p(kstar)))
for r in (1, 2, 3, 4):
    print("row %d labels:" % r, [labels[s] for s in want_rows[r]])

ch32 = Chain(seq4, 3, letters27 + "LLRR")
cs32 = qc.chain_seed(dc4, ch32)
mut28 = [s for s in range(1, 29)
         if cs32.slot_vertex[s - 1] not in cs32.seed.frozen]
print("32-chain: %d mutations total, first-28 all mutable: %s, %.2fs"
      % (len(cs32.mutations), len(mut28) == 28, time.time() - t0))
want12 = {("K", j, z) for j in (1, 2, 3, 4) for z in (-1, 0, 1)}
assert want12 <= set(cs32.seed.markers()), sorted(want12 - set(cs32.seed.markers()))
print("printed markers present; 32-chain markers:", len(cs32.seed.markers()))
assert not qc.homogeneity_audit(cs32.seed)
assert not qc.green_red_audit(cs32.seed)
print("32-chain audits clean  %.2fs" % (time.time() - t0))

ch29 = Chain(seq4, 3, letters27 + "L")
cs29 = qc.chain_seed(dc4, ch29)
print("mutable slots of 28-chain:", qc.mutable_slots(cs28))
probs = qc.stabilization_audit(cs28, cs29)
assert not probs, probs
print("stabilization 28 -> 29 clean")

ch33 = Chain(seq4, 3, letters27 + "LLRRR")
cs33 = qc.chain_seed(dc4, ch33)
probs = qc.stabilization_audit(cs32, cs33)
assert not probs, probs
rows = list(range(1, 29)) + sorted(want12)
assert qc.restricted_exchange(cs32, rows, rows) == \
    qc.restricted_exchange(cs33, rows, rows)
print("stabilization 32 -> 33 clean; figure square stable  %.2fs"
      % (time.time() - t0))
