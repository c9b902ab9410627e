"""Quantum cluster seeds on windows of an adapted sequence.

A window $[a, b]$ of sequence positions carries one vertex per position,
frozen at each row minimum, with arrows $(i,p) \\to (i,p-2)$ and
$(i,p) \\to (j,p+1)$ for $j \\sim i$.  The extended seed adds one frozen
vertex per invertible class that can absorb a degree drop across an
exchange, each with a single arrow into the position whose attached
object is a shifted projective.  Seeds mutate with full bookkeeping:
exchange matrix, skew form, framing matrix, grading degrees, dominant
monomials, and (optionally) the expansion of every cluster variable in
the initial quantum torus.

Chains of boxes are replayed on top of the canonical window seed by
elementary box moves; each move either relabels two slots or performs
one mutation, and the tracked monomials must land on the box monomials.
``theta_check`` compares a mutation against the semi-derived algebra,
its Hall quotient, and the deformed character torus.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .cartan import AdmissibleSeq, Chain
from .derivedcat import DCat, deg_add
from .qcartan import Mono, SkewTorus, TorusElement, kr_monomial, qt_torus
from .scalars import ScalarRat
from .sdhall import SDH, SDElt, simple_lift

Label = tuple
Deg = dict[int, tuple[int, ...]]

_ONE = ScalarRat.from_int(1)


# -- exponent vectors for the cluster torus ---------------------------------

@dataclass(frozen=True)
class XVec:
    """A Laurent exponent vector over the seed's vertices."""

    v: tuple[int, ...]

    @classmethod
    def unit(cls, n: int) -> "XVec":
        return cls((0,) * n)

    @classmethod
    def basis(cls, n: int, u: int) -> "XVec":
        return cls(tuple(1 if s == u else 0 for s in range(n)))

    def __mul__(self, other: "XVec") -> "XVec":
        return XVec(tuple(x + y for x, y in zip(self.v, other.v)))

    def inverse(self) -> "XVec":
        return XVec(tuple(-x for x in self.v))

    @property
    def ex(self):
        return self.v

    def render(self) -> str:
        parts = ["X%d^%d" % (u, e) if e != 1 else "X%d" % u
                 for u, e in enumerate(self.v) if e]
        return "*".join(parts) if parts else "1"


def cluster_torus(lam: Sequence[Sequence[int]]) -> SkewTorus:
    """The based torus on exponent vectors with pairing $\\gamma^T \\Lambda
    \\delta$; the based generators are the commutative monomials."""
    rows = tuple(tuple(r) for r in lam)

    def pairing(x: XVec, y: XVec) -> int:
        out = 0
        for u, cu in enumerate(x.v):
            if cu:
                row = rows[u]
                for s, cs in enumerate(y.v):
                    if cs:
                        out += cu * cs * row[s]
        return out

    return SkewTorus(pairing)


def left_quotient(den: TorusElement, num: TorusElement) -> TorusElement:
    """Solve ``den * z == num`` in a based torus with XVec keys.

    Works by repeatedly cancelling the lexicographically largest key;
    raises if the division is not exact.
    """
    assert den.terms, "division by zero"
    torus = den.torus
    lead = max(den.terms, key=lambda m: m.v)
    clead = den.terms[lead]
    rest = dict(num.terms)
    out: dict[XVec, ScalarRat] = {}
    for _ in range(10000):
        if not rest:
            return torus.from_terms(out)
        big = max(rest, key=lambda m: m.v)
        z = lead.inverse() * big
        c = rest[big] / (clead * ScalarRat.w_power(torus.pairing(lead, z)))
        out[z] = out.get(z, ScalarRat.from_int(0)) + c
        piece = den * torus.from_terms({z: c})
        for m, cm in piece.terms.items():
            s = rest.get(m, ScalarRat.from_int(0)) - cm
            if s:
                rest[m] = s
            elif m in rest:
                del rest[m]
    raise ValueError("left division did not terminate; inexact quotient")


# -- seeds ------------------------------------------------------------------

def _tuple2(rows: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(r) for r in rows)


@dataclass(frozen=True, eq=False)
class QuantumSeed:
    """A compatible quantum seed with framing and optional tracking.

    ``b`` is the full square exchange matrix over all vertices (entry
    $b_{us} > 0$ meaning $b_{us}$ arrows $u \\to s$), ``lam`` the skew
    form on the same index set, ``gvec`` one degree vector per vertex
    over the initial basis, and ``cmat`` one framing row per initially
    mutable vertex.  ``mono``, ``deg`` and ``xvar`` are per-vertex
    trackers (dominant monomial, grading degree, torus expansion); each
    may be None, and ``mono`` is None at the invertible-marker vertices.
    """

    vertices: tuple[Label, ...]
    frozen: frozenset
    b: tuple[tuple[int, ...], ...]
    lam: tuple[tuple[int, ...], ...]
    gvec: tuple[tuple[int, ...], ...]
    cvert: tuple[Label, ...]
    cmat: tuple[tuple[int, ...], ...]
    dc: DCat | None = None
    mono: tuple | None = None
    deg: tuple | None = None
    torus: SkewTorus | None = None
    xvar: tuple | None = None

    # -- access ------------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    def idx(self, k: Label) -> int:
        return self.vertices.index(k)

    @property
    def mutable(self) -> tuple[Label, ...]:
        return tuple(x for x in self.vertices if x not in self.frozen)

    def markers(self) -> tuple[Label, ...]:
        """The invertible-class marker vertices."""
        return tuple(x for x in self.vertices if x[0] == "K")

    def is_marker(self, k: Label) -> bool:
        return k[0] == "K"

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuantumSeed):
            return NotImplemented
        return (self.vertices == other.vertices
                and self.frozen == other.frozen
                and self.b == other.b
                and self.lam == other.lam
                and self.gvec == other.gvec
                and self.cmat == other.cmat
                and self.mono == other.mono
                and self.deg == other.deg
                and self.xvar == other.xvar)

    # -- framing verdicts --------------------------------------------------

    def verdict(self, k: Label) -> str:
        """'green' or 'red' from the framing column; asserts dichotomy."""
        kk = self.idx(k)
        assert k not in self.frozen, k
        col = [row[kk] for row in self.cmat]
        assert any(col), "framing column vanished at %r" % (k,)
        if all(c >= 0 for c in col):
            return "green"
        assert all(c <= 0 for c in col), "mixed framing column at %r" % (k,)
        return "red"

    def marker_verdict(self, k: Label) -> str | None:
        """'green'/'red' read from marker arrows at k, None if unreadable."""
        kk = self.idx(k)
        seen = 0
        for s, x in enumerate(self.vertices):
            if self.is_marker(x) and self.b[s][kk]:
                seen |= 1 if self.b[s][kk] > 0 else 2
        if seen == 1:
            return "green"
        if seen == 2:
            return "red"
        return None

    # -- exchange data -----------------------------------------------------

    def exchange_exponents(self, k: Label) -> tuple[list[int], list[int]]:
        """In- and out-exponent vectors of the exchange at k."""
        kk = self.idx(k)
        col = [self.b[u][kk] for u in range(self.n)]
        return [max(0, c) for c in col], [max(0, -c) for c in col]

    def monomial_scalar(self, k: Label, gamma: Sequence[int]) -> ScalarRat:
        """The power of $w$ on the ordered product form of one exchange
        term: $X_k X^\\gamma$ expanded with the current skew form."""
        kk = self.idx(k)
        x = sum(self.lam[kk][u] * g for u, g in enumerate(gamma))
        pre = 0
        for u in range(self.n):
            if gamma[u]:
                row = self.lam[u]
                for s in range(u + 1, self.n):
                    if gamma[s]:
                        pre += gamma[u] * gamma[s] * row[s]
        return ScalarRat.w_power(x - pre)

    # -- mutation ----------------------------------------------------------

    def mutate(self, k: Label, check: bool = True) -> "QuantumSeed":
        kk = self.idx(k)
        assert k not in self.frozen, "cannot mutate frozen vertex %r" % (k,)
        n = self.n
        b = self.b
        col = [b[u][kk] for u in range(n)]
        row = b[kk]

        nb = []
        for u in range(n):
            if u == kk:
                nb.append(tuple(-x for x in row))
                continue
            bu = b[u]
            cu = col[u]
            nb.append(tuple(
                -bu[s] if s == kk
                else bu[s] + (abs(cu) * row[s] + cu * abs(row[s])) // 2
                for s in range(n)))

        lamk = [(-self.lam[kk][y]
                 + sum(-col[u] * self.lam[u][y]
                       for u in range(n) if u != kk and col[u] < 0))
                for y in range(n)]
        lamk[kk] = 0
        nlam = [list(r) for r in self.lam]
        for y in range(n):
            nlam[kk][y] = lamk[y]
            nlam[y][kk] = -lamk[y]

        ncmat = []
        for r in self.cmat:
            ck = r[kk]
            ncmat.append(tuple(
                -ck if s == kk
                else r[s] + (abs(ck) * row[s] + ck * abs(row[s])) // 2
                for s in range(n)))

        side = self.verdict(k)
        gsum = [0] * n
        for u in range(n):
            m = max(0, row[u]) if side == "green" else max(0, col[u])
            if m:
                gu = self.gvec[u]
                for s in range(n):
                    gsum[s] += m * gu[s]
        ngk = tuple(gsum[s] - self.gvec[kk][s] for s in range(n))
        ngvec = tuple(ngk if u == kk else self.gvec[u] for u in range(n))

        nmono = self.mono
        if nmono is not None:
            prod = Mono.unit()
            for u in range(n):
                m = max(0, row[u]) if side == "green" else max(0, col[u])
                if m and self.mono[u] is not None:
                    prod = prod * (self.mono[u] ** m)
            new = prod * self.mono[kk].inverse()
            assert new.dominant, (k, new)
            nmono = tuple(new if u == kk else self.mono[u] for u in range(n))

        ndeg = self.deg
        if ndeg is not None:
            din: Deg = {}
            dout: Deg = {}
            for u in range(n):
                if col[u] > 0:
                    for _ in range(col[u]):
                        din = deg_add(din, self.deg[u])
                elif col[u] < 0:
                    for _ in range(-col[u]):
                        dout = deg_add(dout, self.deg[u])
            assert din == dout, "inhomogeneous exchange at %r" % (k,)
            new = deg_add(din, self.deg[kk], -1)
            ndeg = tuple(new if u == kk else self.deg[u] for u in range(n))

        nxvar = self.xvar
        if nxvar is not None:
            alpha, beta = self.exchange_exponents(k)
            rhs = (self._ordered_power(alpha) * self.monomial_scalar(k, alpha)
                   + self._ordered_power(beta) * self.monomial_scalar(k, beta))
            new = left_quotient(self.xvar[kk], rhs)
            nxvar = tuple(new if u == kk else self.xvar[u] for u in range(n))

        out = QuantumSeed(
            vertices=self.vertices, frozen=self.frozen,
            b=tuple(nb), lam=_tuple2(nlam), gvec=ngvec,
            cvert=self.cvert, cmat=tuple(ncmat),
            dc=self.dc, mono=nmono, deg=ndeg,
            torus=self.torus, xvar=nxvar)
        if check:
            bad = compatibility_audit(out)
            assert not bad, bad
        return out

    def _ordered_power(self, gamma: Sequence[int]) -> TorusElement:
        out = self.torus.comm(XVec.unit(self.n))
        for u, g in enumerate(gamma):
            for _ in range(g):
                out = out * self.xvar[u]
        return out


# -- window construction ----------------------------------------------------

def window_seed(dc: DCat, seq: AdmissibleSeq, a: int, b: int, *,
                tilde: bool = True, track: bool = True) -> QuantumSeed:
    """The seed of the window $[a, b]$: one vertex per position, one
    marker per shifted projective among the mutable positions."""
    g = seq.g
    assert a <= b, "empty window"
    assert all(dc.height(i) == seq.eps[i] for i in g.vertices), \
        "window heights disagree with the category's"
    ks = list(range(b, a - 1, -1))
    mains: list[Label] = []
    for k in ks:
        mains.append((seq.i(k), seq.p(k)))
    assert len(set(mains)) == len(mains), "window positions collide"
    pos = set(mains)
    rowmax = {}
    rowmin = {}
    for (i, p) in mains:
        rowmax[i] = max(rowmax.get(i, p), p)
        rowmin[i] = min(rowmin.get(i, p), p)
    frozen_mains = frozenset((i, p) for (i, p) in mains if p == rowmin[i])

    markers: list[Label] = []
    attach: dict[Label, Label] = {}
    if tilde:
        for (i, p) in mains:
            if (i, p) in frozen_mains:
                continue
            root, z = dc.happel(i, p)
            j = dc._proj_index(root)
            if j is None:
                continue
            lab = ("K", j, z - 1)
            assert lab not in attach, "marker %r attached twice" % (lab,)
            attach[lab] = (i, p)
            markers.append(lab)
    markers.sort(key=lambda lab: (lab[1], lab[2]))
    frozen = frozen_mains | frozenset(markers)

    vertices = tuple(mains + markers)
    vidx = {x: u for u, x in enumerate(vertices)}
    n = len(vertices)

    bm = [[0] * n for _ in range(n)]

    def arrow(src: Label, dst: Label, mult: int = 1):
        bm[vidx[src]][vidx[dst]] += mult
        bm[vidx[dst]][vidx[src]] -= mult

    for (i, p) in mains:
        if (i, p - 2) in pos:
            arrow((i, p), (i, p - 2))
        for j in g.neighbors[i]:
            if (j, p + 1) in pos:
                arrow((i, p), (j, p + 1))
    for lab in markers:
        arrow(lab, attach[lab])

    qt = qt_torus(g)
    monos: list[Mono | None] = []
    for (i, p) in mains:
        monos.append(kr_monomial(i, p, (rowmax[i] - p) // 2 + 1))
    monos.extend([None] * len(markers))

    lam = [[0] * n for _ in range(n)]
    nm = len(mains)
    for u in range(nm):
        for s in range(u + 1, nm):
            x = qt.pairing(monos[u], monos[s])
            lam[u][s] = x
            lam[s][u] = -x

    degs: list[Deg] = []
    for (i, p) in mains:
        d: Deg = {}
        for pp in range(p, rowmax[i] + 1, 2):
            d = deg_add(d, dc.deg_gen(dc.happel(i, pp)))
        degs.append(d)
    for lab in markers:
        _, j, z = lab
        unit = tuple(1 if s == j else 0 for s in g.vertices)
        degs.append(dc.deg_k(dc.proj_class(unit), z))

    cvert = tuple(x for x in vertices if x not in frozen and x[0] != "K")
    cmat = tuple(tuple(1 if s == vidx[x] else 0 for s in range(n))
                 for x in cvert)
    gvec = tuple(tuple(1 if s == u else 0 for s in range(n))
                 for u in range(n))

    torus = None
    xvar = None
    if track:
        torus = cluster_torus(lam)
        xvar = tuple(torus.comm(XVec.basis(n, u)) for u in range(n))

    return QuantumSeed(
        vertices=vertices, frozen=frozen,
        b=_tuple2(bm), lam=_tuple2(lam), gvec=gvec,
        cvert=cvert, cmat=cmat, dc=dc,
        mono=tuple(monos), deg=tuple(degs), torus=torus, xvar=xvar)


def extend_tilde(dc: DCat, seed: QuantumSeed) -> QuantumSeed:
    """Rebuild a plain window seed with the marker vertices added.

    Only valid on a pristine seed (no mutation applied yet); the window
    is recovered from the vertex labels.
    """
    assert not seed.markers(), "seed already extended"
    ident = tuple(tuple(1 if s == seed.idx(x) else 0 for s in range(seed.n))
                  for x in seed.cvert)
    assert seed.cmat == ident, "cannot extend a mutated seed"
    seq = AdmissibleSeq(dc.quiver.g, {i: dc.height(i)
                                      for i in dc.quiver.g.vertices})
    a, b = _window_range(seq, seed.vertices)
    return window_seed(dc, seq, a, b, tilde=True,
                       track=seed.xvar is not None)


def _window_range(seq: AdmissibleSeq, labels) -> tuple[int, int]:
    """Recover the position window of a set of (i, p) vertex labels."""
    want = {x for x in labels if x[0] != "K"}
    span = seq.l * (seq.h + max(abs(p) for (_, p) in want) + 4)
    ks = [k for k in range(-span, span + 1)
          if (seq.i(k), seq.p(k)) in want]
    assert len(ks) == len(want) and ks == list(
        range(min(ks), max(ks) + 1)), "labels are not a window"
    return min(ks), max(ks)


def degree_of_monomial(dc: DCat, mono: Mono) -> Deg:
    """Degree of the generator word of a dominant monomial's object."""
    out: Deg = {}
    for (i, p), u in mono.ex:
        assert u > 0, mono
        for _ in range(u):
            out = deg_add(out, dc.deg_gen(dc.happel(i, p)))
    return out


# -- audits -----------------------------------------------------------------

def compatibility_audit(seed: QuantumSeed) -> list[str]:
    """Check $B^T \\Lambda$ has positive diagonal rows at mutable columns."""
    bad = []
    n = seed.n
    for j, x in enumerate(seed.vertices):
        if x in seed.frozen:
            continue
        for i in range(n):
            val = sum(seed.b[u][j] * seed.lam[u][i] for u in range(n))
            if i == j:
                if val <= 0:
                    bad.append("nonpositive pairing %d at %r" % (val, x))
            elif val != 0:
                bad.append("pair (%r, %r) not orthogonal: %d"
                           % (x, seed.vertices[i], val))
    return bad


def homogeneity_audit(seed: QuantumSeed) -> list[str]:
    """Check every exchange is degree-homogeneous."""
    assert seed.deg is not None, "seed does not track degrees"
    bad = []
    for x in seed.mutable:
        kk = seed.idx(x)
        din: Deg = {}
        dout: Deg = {}
        for u in range(seed.n):
            c = seed.b[u][kk]
            for _ in range(abs(c)):
                if c > 0:
                    din = deg_add(din, seed.deg[u])
                else:
                    dout = deg_add(dout, seed.deg[u])
        if din != dout:
            bad.append("inhomogeneous exchange at %r" % (x,))
    return bad


def green_red_audit(seed: QuantumSeed) -> list[str]:
    """Framing dichotomy, marker cross-checks, and marker block vanishing.

    The marker rows of the exchange matrix must reproduce the framing
    rows of their attachment vertices, so the verdict read off marker
    arrows (when some marker is adjacent) must agree with the framing
    column; the marker-marker block stays zero.
    """
    bad = []
    for x in seed.mutable:
        try:
            side = seed.verdict(x)
        except AssertionError as e:
            bad.append(str(e))
            continue
        marked = seed.marker_verdict(x)
        if marked is not None and marked != side:
            bad.append("marker arrows at %r read %s, framing says %s"
                       % (x, marked, side))
    marks = [seed.idx(x) for x in seed.markers()]
    for u in marks:
        for s in marks:
            if seed.b[u][s]:
                bad.append("marker pair (%r, %r) acquired an arrow"
                           % (seed.vertices[u], seed.vertices[s]))
    return bad


def once_mutated_form(seed: QuantumSeed, k: Label) -> bool:
    """Check the two-term torus expansion of a once-mutated variable."""
    assert seed.xvar is not None
    after = seed.mutate(k)
    kk = seed.idx(k)
    alpha, beta = seed.exchange_exponents(k)
    n = seed.n
    ka = XVec(tuple(a - (1 if u == kk else 0) for u, a in enumerate(alpha)))
    kb = XVec(tuple(a - (1 if u == kk else 0) for u, a in enumerate(beta)))
    want = seed.torus.from_terms({ka: _ONE, kb: _ONE})
    return after.xvar[kk] == want


def laurent_audit(seed: QuantumSeed) -> list[str]:
    """Check all tracked expansions have denominator-free coefficients."""
    assert seed.xvar is not None
    bad = []
    for u, x in enumerate(seed.vertices):
        for m, c in seed.xvar[u].terms.items():
            if not c.is_laurent:
                bad.append("coefficient of %s in %r is not Laurent: %s"
                           % (m.render(), x, c.render()))
    return bad


def random_walk(seed: QuantumSeed, steps: int, rng) -> tuple[QuantumSeed, list[Label]]:
    """Mutate along a uniformly random non-backtracking vertex path."""
    path: list[Label] = []
    cur = seed
    for _ in range(steps):
        options = [x for x in cur.mutable if not path or x != path[-1]]
        k = options[rng.randrange(len(options))]
        path.append(k)
        cur = cur.mutate(k)
    return cur, path


# -- chains of boxes --------------------------------------------------------

def addition_order(chain: Chain) -> list[int]:
    """The sequence position added by each box of the chain."""
    out = [chain.root]
    a = b = chain.root
    for c in chain.letters:
        if c == "L":
            a -= 1
            out.append(a)
        else:
            b += 1
            out.append(b)
    return out


def box_closed_end(chain: Chain, s: int) -> int:
    """The closed end of the s-th box (1-based): its added position."""
    return addition_order(chain)[s - 1]


@dataclass(frozen=True)
class ChainSeed:
    """A window seed aligned with a chain of boxes.

    ``slot_vertex[s-1]`` is the vertex whose cluster variable carries the
    s-th box; ``mutations`` lists the vertices mutated (in order) while
    sorting the canonical window chain into the given one.
    """

    chain: Chain
    seed: QuantumSeed
    slot_vertex: tuple[Label, ...]
    mutations: tuple[Label, ...]

    def box_monomial(self, s: int) -> Mono:
        seq = self.chain.seq
        box = self.chain.box(s)
        return Mono.from_dict({(box.color, seq.p(k)): 1
                               for k in seq.occurrences(box)})


def chain_seed(dc: DCat, chain: Chain, *, tilde: bool = True,
               track: bool = False, check_boxes: bool = True) -> ChainSeed:
    """Replay a chain of boxes on its envelope's window seed.

    Starts from the canonical chain (which is the window seed itself)
    and bubble-sorts the addition order into the chain's by adjacent
    box moves.  A move that swaps two additions of the same color is a
    mutation at the slot carrying the smaller box; a move across colors
    only relabels which vertex carries which slot.
    """
    seq = chain.seq
    a, b = chain.envelope(len(chain))
    seed = window_seed(dc, seq, a, b, tilde=tilde, track=track)
    order = list(range(b, a - 1, -1))
    slot_vertex = [(seq.i(k), seq.p(k)) for k in order]
    target = addition_order(chain)
    muts: list[Label] = []

    def swap(j: int) -> None:
        x, y = order[j - 1], order[j]
        span = order[:j + 1]
        assert ({x, y} == {min(span), max(span)}
                and max(span) - min(span) + 1 == len(span)), \
            "additions %d, %d are not opposite ends" % (x, y)
        nonlocal seed
        if seq.i(x) == seq.i(y):
            muts.append(slot_vertex[j - 1])
            seed = seed.mutate(slot_vertex[j - 1])
        else:
            slot_vertex[j - 1], slot_vertex[j] = \
                slot_vertex[j], slot_vertex[j - 1]
        order[j - 1], order[j] = order[j], order[j - 1]

    # Settle positions from the back.  Ahead of position s the first s
    # entries of ``order`` hold the target's prefix envelope in canonical
    # (descending) order, so the addition due at s is either already in
    # place (the envelope minimum) or at the front (the maximum), from
    # where it rotates rightward through legal moves only.
    for s in range(len(target), 1, -1):
        z = target[s - 1]
        if z == order[s - 1]:
            continue
        assert z == order[0], "position %d breaks the chain prefix" % s
        for j in range(1, s):
            swap(j)
    out = ChainSeed(chain, seed, tuple(slot_vertex), tuple(muts))
    if check_boxes and seed.mono is not None:
        for s in range(1, len(chain) + 1):
            have = seed.mono[seed.idx(out.slot_vertex[s - 1])]
            want = out.box_monomial(s)
            assert have == want, (s, have, want)
    return out


def mutable_slots(cs: ChainSeed) -> list[int]:
    """Slots whose boxes are not maximal in the envelope window."""
    return [s for s in range(1, len(cs.chain) + 1)
            if cs.slot_vertex[s - 1] not in cs.seed.frozen]


def restricted_exchange(cs: ChainSeed, rows: Sequence, cols: Sequence) \
        -> tuple[tuple[int, ...], ...]:
    """Exchange-matrix entries indexed by slot numbers or marker labels."""
    def resolve(x) -> int:
        return cs.seed.idx(cs.slot_vertex[x - 1] if isinstance(x, int)
                           else x)
    jv = [resolve(c) for c in cols]
    return tuple(tuple(cs.seed.b[resolve(r)][c] for c in jv) for r in rows)


def stabilization_audit(small: ChainSeed, big: ChainSeed) -> list[str]:
    """Check that extending a chain leaves the settled exchange rows alone.

    Rows indexed by the shorter chain's slot numbers and marker labels
    must agree with the same rows of the extended chain's seed on the
    shorter chain's mutable columns, and every row new to the extension
    must vanish on those columns.
    """
    problems: list[str] = []
    S = len(small.chain)
    assert len(big.chain) >= S
    mut = mutable_slots(small)
    old_marks = list(small.seed.markers())
    if not set(old_marks) <= set(big.seed.markers()):
        problems.append("extension dropped a frozen marker")
        return problems
    rows = list(range(1, S + 1)) + old_marks
    if restricted_exchange(small, rows, mut) != \
            restricted_exchange(big, rows, mut):
        problems.append("settled exchange rows changed under extension")
    fresh = list(range(S + 1, len(big.chain) + 1)) + \
        [m for m in big.seed.markers() if m not in set(old_marks)]
    for r, row in zip(fresh, restricted_exchange(big, fresh, mut)):
        if any(row):
            problems.append("new row %r meets settled mutable columns"
                            % (r,))
    return problems


# -- comparison against the lift and the character torus --------------------

def theta_check(ctx: SDH, seed: QuantumSeed, k: Label) -> dict:
    """Verify one exchange relation on the algebra sides.

    Returns per-side booleans: the identity between lifts in the
    semi-derived algebra ('sdh'), its image in the Hall quotient
    ('quotient'), the same relation between deformed characters in the
    character torus with markers dropped ('torus'), and the degree
    match for the new variable ('degree').
    """
    from .qtchar import simple_tchar

    g = ctx.quiver.g
    after = seed.mutate(k)
    kk = seed.idx(k)
    alpha, beta = seed.exchange_exponents(k)
    a_scal = seed.monomial_scalar(k, alpha)
    b_scal = seed.monomial_scalar(k, beta)

    lifts: dict[int, SDElt] = {}
    for u in range(seed.n):
        if (alpha[u] or beta[u]) and seed.mono[u] is not None:
            lifts[u] = simple_lift(ctx, seed.mono[u])
    lift_k = simple_lift(ctx, seed.mono[kk])
    lift_new = simple_lift(ctx, after.mono[kk])

    def sdh_side(gamma):
        out = ctx.one()
        for u, e in enumerate(gamma):
            if not e:
                continue
            if seed.mono[u] is None:
                _, j, z = seed.vertices[u]
                fac = ctx.k_simple(j, z)
            else:
                fac = lifts[u]
            for _ in range(e):
                out = out * fac
        return out

    lhs = lift_k * lift_new
    rhs = sdh_side(alpha) * a_scal + sdh_side(beta) * b_scal
    ok_sdh = (lhs == rhs)

    lhs_q = lhs.pi_h()
    rhs_q = rhs.pi_h()
    ok_quot = (lhs_q == rhs_q)

    qt = qt_torus(g)
    chars: dict[int, TorusElement] = {}
    for u in lifts:
        chars[u] = simple_tchar(g, seed.mono[u])

    def torus_side(gamma):
        out = qt.one()
        for u, e in enumerate(gamma):
            if not e or seed.mono[u] is None:
                continue
            for _ in range(e):
                out = out * chars[u]
        return out

    t_lhs = simple_tchar(g, seed.mono[kk]) * simple_tchar(g, after.mono[kk])
    t_rhs = torus_side(alpha) * a_scal + torus_side(beta) * b_scal
    ok_torus = (t_lhs == t_rhs)

    ok_deg = (after.deg[kk] == lift_new.degree())

    return {"sdh": ok_sdh, "quotient": ok_quot, "torus": ok_torus,
            "degree": ok_deg, "vertex": k,
            "monomial": seed.mono[kk], "partner": after.mono[kk]}
