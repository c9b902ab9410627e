import time

from hallqt.cartan import CartanData, AdmissibleSeq, Chain
from hallqt.hallfq import Quiver
from hallqt.derivedcat import DCat
import hallqt.qcluster as qc
import hallqt.dotio as dotio

t0 = time.time()

g3 = CartanData("A", 3)
eps3 = {1: 1, 2: 0, 3: 1}
dc3 = DCat.from_height(Quiver.from_height(g3, eps3), eps3)
seq3 = AdmissibleSeq(g3, eps3)
seed3 = qc.window_seed(dc3, seq3, -17, 3, track=False)
gen3 = dotio.seed_graph(seed3)
gold3 = dotio.parse_dot(open("tests/goldens/fig_a3_window.dot").read())
print("A3: generated %d nodes %d edges, golden %d nodes %d edges"
      % (gen3.number_of_nodes(), gen3.number_of_edges(),
         gold3.number_of_nodes(), gold3.number_of_edges()))
diff = dotio.graph_diff(gen3, gold3)
for line in diff[:20]:
    print("  ", line)
assert not diff
assert dotio.isomorphic(gen3, gold3)
print("A3 window figure isomorphic  %.2fs" % (time.time() - t0))

roundtrip = dotio.parse_dot(dotio.graph_dot(gen3))
assert dotio.isomorphic(roundtrip, gen3)
print("DOT round-trip ok")

g4 = CartanData("A", 4)
eps4 = {1: 0, 2: -1, 3: 0, 4: -1}
dc4 = DCat.from_height(Quiver.from_height(g4, eps4), eps4)
seq4 = AdmissibleSeq(g4, eps4)
letters27 = "R" + "LLLL" + "RRRR" + "LLLL" + "RRRR" + "LLLL" + "RRRR" + "LL"
cs32 = qc.chain_seed(dc4, Chain(seq4, 3, letters27 + "LLRR"))
gen4 = dotio.chain_figure_graph(cs32, slots=range(1, 29))
gold4 = dotio.parse_dot(open("tests/goldens/fig_a4_chain.dot").read())
print("A4: generated %d nodes %d edges, golden %d nodes %d edges"
      % (gen4.number_of_nodes(), gen4.number_of_edges(),
         gold4.number_of_nodes(), gold4.number_of_edges()))
diff = dotio.graph_diff(gen4, gold4)
for line in diff[:30]:
    print("  ", line)
assert not diff
assert dotio.isomorphic(gen4, gold4)
print("A4 chain figure isomorphic  %.2fs" % (time.time() - t0))
