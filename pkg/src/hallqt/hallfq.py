"""Representations of ADE quivers over prime fields, and their Hall numbers.

Everything is counted honestly: a Hall number $g^L_{M,N}$ is the literal
number of arrow-stable subspace tuples $X \\subset L$ with $X \\cong M$ and
$L/X \\cong N$ (the first lower index is the subobject), and an automorphism
group size is the group-theoretic one.  Representations are left modules:
an arrow $a\\colon i \\to j$ carries a matrix mapping the space at $i$ into
the space at $j$.

Indecomposables are produced by reflection functors walking an adapted
sink sequence, one per positive root, and iso classes are named by the
multiset of roots of the indecomposable summands.  The summands of an
arbitrary representation are recovered from its Hom numbers against the
indecomposables, which determine the multiplicities uniquely.

Counts that must become symbols (Hall polynomials, kernel-cokernel counts)
are interpolated from enough primes and validated on a held-out prime; the
integrality of the result is asserted, not assumed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linfp
from .cartan import CartanData, adapted_word, default_height, orientation, reflect_height


@dataclass(frozen=True)
class Quiver:
    """A Dynkin diagram with an orientation; arrows are (source, target)."""

    g: CartanData
    arrows: tuple[tuple[int, int], ...]

    @classmethod
    def from_height(cls, g: CartanData, eps: dict[int, int] | None = None) -> "Quiver":
        eps = eps or default_height(g)
        return cls(g, tuple(sorted(orientation(g, eps))))

    def __post_init__(self):
        assert {frozenset(a) for a in self.arrows} == \
            {frozenset(e) for e in self.g.edges}, "orientation must cover every edge once"

    @property
    def vertices(self):
        return self.g.vertices

    def sinks(self) -> list[int]:
        src = {i for i, _ in self.arrows}
        return [v for v in self.vertices if v not in src]

    def sources(self) -> list[int]:
        tgt = {j for _, j in self.arrows}
        return [v for v in self.vertices if v not in tgt]

    def reverse_at(self, k: int) -> "Quiver":
        out = tuple(sorted((j, i) if k in (i, j) else (i, j) for i, j in self.arrows))
        return Quiver(self.g, out)

    def height(self) -> dict[int, int]:
        """A height function adapted to the orientation (arrows run downhill)."""
        eps = {1: 0}
        frontier = [1]
        while frontier:
            nxt = []
            for i in frontier:
                for j in self.g.neighbors[i]:
                    if j not in eps:
                        eps[j] = eps[i] - 1 if (i, j) in self.arrows else eps[i] + 1
                        nxt.append(j)
            frontier = nxt
        assert tuple(sorted(orientation(self.g, eps))) == self.arrows
        return eps

    def euler(self, d: tuple[int, ...], e: tuple[int, ...]) -> int:
        """$\\langle d, e\\rangle = \\sum_i d_i e_i - \\sum_{a: i \\to j} d_i e_j$."""
        out = sum(x * y for x, y in zip(d, e))
        for i, j in self.arrows:
            out -= d[i - 1] * e[j - 1]
        return out

    def sym(self, d: tuple[int, ...], e: tuple[int, ...]) -> int:
        return self.euler(d, e) + self.euler(e, d)

    def topo_sinks_first(self) -> list[int]:
        """Vertex order in which every arrow points to an earlier vertex."""
        remaining = set(self.vertices)
        out: list[int] = []
        while remaining:
            layer = [v for v in remaining
                     if all(j not in remaining for i, j in self.arrows if i == v)]
            out.extend(sorted(layer))
            remaining -= set(layer)
        return out

    def __repr__(self):
        return "Quiver(%r, %s)" % (self.g, list(self.arrows))


@dataclass
class Rep:
    """A finite-dimensional representation over $\\mathbb{F}_p$."""

    quiver: Quiver
    p: int
    dims: tuple[int, ...]
    mats: dict[tuple[int, int], list[list[int]]]

    def dim(self, i: int) -> int:
        return self.dims[i - 1]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def __repr__(self):
        return "Rep(dims=%s, p=%d)" % (self.dims, self.p)


def _zero_mat(rows: int, cols: int) -> list[list[int]]:
    return [[0] * cols for _ in range(rows)]


def zero_rep(quiver: Quiver, p: int) -> Rep:
    n = quiver.g.rank
    return Rep(quiver, p, (0,) * n, {a: [] for a in quiver.arrows})


def simple(quiver: Quiver, p: int, i: int) -> Rep:
    n = quiver.g.rank
    dims = tuple(1 if v == i else 0 for v in range(1, n + 1))
    mats = {(s, t): _zero_mat(dims[t - 1], dims[s - 1]) for s, t in quiver.arrows}
    return Rep(quiver, p, dims, mats)


def direct_sum(reps: list[Rep]) -> Rep:
    assert reps, "empty direct sum needs an explicit quiver; use zero_rep"
    quiver, p = reps[0].quiver, reps[0].p
    n = quiver.g.rank
    dims = tuple(sum(r.dims[i] for r in reps) for i in range(n))
    mats = {}
    for a in quiver.arrows:
        s, t = a
        m = _zero_mat(dims[t - 1], dims[s - 1])
        ro = co = 0
        for r in reps:
            blk = r.mats[a]
            for u in range(r.dims[t - 1]):
                for c in range(r.dims[s - 1]):
                    m[ro + u][co + c] = blk[u][c]
            ro += r.dims[t - 1]
            co += r.dims[s - 1]
        mats[a] = m
    return Rep(quiver, p, dims, mats)


# ---------------------------------------------------------------------------
# reflection functors and indecomposables


def _reflect_in(rep: Rep, k: int) -> Rep:
    """$C_k^-$ at a source $k$: turns $k$ into a sink of the new quiver.

    The space at $k$ is replaced by the cokernel of the combined map into
    the neighbours; on an indecomposable other than the simple at $k$ that
    map is injective, which is asserted.
    """
    q, p = rep.quiver, rep.p
    out_arrows = sorted(a for a in q.arrows if a[0] == k)
    dk = rep.dim(k)
    tot = sum(rep.dim(a[1]) for a in out_arrows)
    stacked: list[list[int]] = []
    for a in out_arrows:
        stacked.extend(row[:] for row in rep.mats[a])
    if dk:
        assert linfp.rank(stacked, p) == dk, "source map not injective"
        proj = linfp.nullspace(linfp.transpose(stacked), p)
    else:
        proj = linfp.identity(tot)
    assert len(proj) == tot - dk
    newq = q.reverse_at(k)
    dims = tuple(tot - dk if v == k else rep.dim(v) for v in range(1, q.g.rank + 1))
    offs = {}
    o = 0
    for a in out_arrows:
        offs[a[1]] = o
        o += rep.dim(a[1])
    mats = {}
    for a in newq.arrows:
        s, t = a
        if t == k:
            off = offs[s]
            mats[a] = [[prow[off + c] for c in range(rep.dim(s))] for prow in proj]
        else:
            mats[a] = [row[:] for row in rep.mats[a]]
    return Rep(newq, p, dims, mats)


def _root_dict(root: tuple[int, ...]) -> dict[int, int]:
    return {i + 1: c for i, c in enumerate(root) if c}


@lru_cache(maxsize=None)
def _indec_cached(quiver: Quiver, p: int, root: tuple[int, ...]) -> Rep:
    g = quiver.g
    if sum(root) == 1:
        return simple(quiver, p, root.index(1) + 1)
    # walk an adapted sink sequence until the root becomes simple; along the
    # inverse Coxeter orbit this happens just before the root would turn
    # negative, so within a bounded number of passes
    eps = quiver.height()
    d = _root_dict(root)
    stack: list[int] = []
    q = quiver
    base = None
    for _ in range(g.coxeter_number + 2):
        for k in adapted_word(g, eps):
            if d == {k: 1}:
                base = simple(q, p, k)
                break
            d = g.reflect_root(k, d)
            assert all(v > 0 for v in d.values()), "left the positive roots"
            stack.append(k)
            q = q.reverse_at(k)
            eps = reflect_height(g, k, eps)
        if base is not None:
            break
    assert base is not None, "no simple reached along the Coxeter orbit"
    rep = base
    for k in reversed(stack):
        rep = _reflect_in(rep, k)
    assert rep.quiver == quiver and rep.dims == root, (rep.dims, root)
    assert hom_dim(rep, rep) == 1, "reflection functors lost indecomposability"
    return rep


def indecomposable(quiver: Quiver, p: int, root: tuple[int, ...]) -> Rep:
    """The indecomposable with the given positive root as dimension vector."""
    assert root in quiver.g.positive_roots(), root
    return _indec_cached(quiver, p, root)


# iso classes are multisets of positive roots
IsoLabel = tuple[tuple[tuple[int, ...], int], ...]


def label_of_roots(roots) -> IsoLabel:
    out: dict[tuple[int, ...], int] = {}
    for r in roots:
        out[r] = out.get(r, 0) + 1
    return tuple(sorted(out.items()))


def label_dim(label: IsoLabel) -> tuple[int, ...] | None:
    terms = [tuple(m * c for c in root) for root, m in label]
    if not terms:
        return None
    return tuple(sum(t) for t in zip(*terms))


def rep_from_label(quiver: Quiver, p: int, label: IsoLabel) -> Rep:
    parts = [indecomposable(quiver, p, root) for root, m in label for _ in range(m)]
    return direct_sum(parts) if parts else zero_rep(quiver, p)


# ---------------------------------------------------------------------------
# Hom, Ext, decomposition


def hom_basis(M: Rep, N: Rep) -> list[dict[int, list[list[int]]]]:
    """A basis of the space of homomorphisms $M \\to N$.

    A morphism is a tuple $f_i \\in \\operatorname{Hom}(M_i, N_i)$ with
    $N_a f_i = f_j M_a$ for every arrow $a\\colon i \\to j$; the equations
    are linear, so the basis is a kernel computation.
    """
    q, p = M.quiver, M.p
    n = q.g.rank
    offs = []
    o = 0
    for i in range(1, n + 1):
        offs.append(o)
        o += N.dim(i) * M.dim(i)
    nvars = o
    rows = []
    for (i, j) in q.arrows:
        Ma, Na = M.mats[(i, j)], N.mats[(i, j)]
        for u in range(N.dim(j)):
            for t in range(M.dim(i)):
                row = [0] * nvars
                for c in range(N.dim(i)):         # (N_a f_i)[u][t]
                    row[offs[i - 1] + c * M.dim(i) + t] = Na[u][c]
                for c in range(M.dim(j)):         # -(f_j M_a)[u][t]
                    idx = offs[j - 1] + u * M.dim(j) + c
                    row[idx] = (row[idx] - Ma[c][t]) % p
                rows.append(row)
    if rows:
        basis_vecs = linfp.nullspace(rows, p)
    else:
        basis_vecs = [[1 if t == s else 0 for t in range(nvars)] for s in range(nvars)]
    out = []
    for v in basis_vecs:
        f = {}
        for i in range(1, n + 1):
            block = v[offs[i - 1]: offs[i - 1] + N.dim(i) * M.dim(i)]
            f[i] = [[block[r * M.dim(i) + c] for c in range(M.dim(i))]
                    for r in range(N.dim(i))]
        out.append(f)
    return out


def hom_dim(M: Rep, N: Rep) -> int:
    return len(hom_basis(M, N))


def ext_dim(M: Rep, N: Rep) -> int:
    """$\\dim \\operatorname{Ext}^1(M,N)$, via hom minus the Euler form."""
    e = hom_dim(M, N) - M.quiver.euler(M.dims, N.dims)
    assert e >= 0
    return e


@lru_cache(maxsize=None)
def _hom_table(quiver: Quiver, p: int):
    roots = quiver.g.positive_roots()
    reps = [indecomposable(quiver, p, r) for r in roots]
    table = [[hom_dim(a, b) for b in reps] for a in reps]
    return roots, table


def _solve_rational(H: list[list[int]], h: list[int]) -> list[Fraction]:
    n = len(H)
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(H, h)]
    for c in range(n):
        piv = next(r for r in range(c, n) if aug[r][c])
        aug[c], aug[piv] = aug[piv], aug[c]
        f = aug[c][c]
        aug[c] = [x / f for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                g = aug[r][c]
                aug[r] = [x - g * y for x, y in zip(aug[r], aug[c])]
    return [aug[r][n] for r in range(n)]


def decompose(rep: Rep) -> IsoLabel:
    """Multiplicities of the indecomposable summands, from Hom numbers."""
    roots, table = _hom_table(rep.quiver, rep.p)
    h = [hom_dim(indecomposable(rep.quiver, rep.p, r), rep) for r in roots]
    mults = _solve_rational(table, h)
    out = []
    for r, m in zip(roots, mults):
        assert m.denominator == 1 and m >= 0, (r, m)
        if m:
            out.append((r, int(m)))
    label = tuple(sorted(out))
    got = label_dim(label) or (0,) * rep.quiver.g.rank
    assert got == rep.dims, (got, rep.dims)
    return label


def _gl_size(m: int, p: int) -> int:
    out = 1
    for j in range(m):
        out *= p ** m - p ** j
    return out


def aut_size(quiver: Quiver, p: int, label: IsoLabel) -> int:
    """$|\\operatorname{Aut}|$ of the representation with the given summands.

    The indecomposables here are bricks, so the endomorphism ring modulo
    its radical is a product of matrix algebras of sizes given by the
    summand multiplicities; the radical contributes a power of $p$.
    """
    roots, table = _hom_table(quiver, p)
    idx = {r: k for k, r in enumerate(roots)}
    e = 0
    for r1, m1 in label:
        for r2, m2 in label:
            e += m1 * m2 * table[idx[r1]][idx[r2]]
    out = p ** (e - sum(m * m for _, m in label))
    for _, m in label:
        out *= _gl_size(m, p)
    return out


def aut_polynomial(quiver: Quiver, label: IsoLabel) -> list[int]:
    """Coefficients (ascending in $q$) of $q \\mapsto |\\operatorname{Aut}|$."""
    roots, table = _hom_table(quiver, 2)   # hom dims do not depend on the prime
    idx = {r: k for k, r in enumerate(roots)}
    e = 0
    for r1, m1 in label:
        for r2, m2 in label:
            e += m1 * m2 * table[idx[r1]][idx[r2]]
    shift = e - sum(m * m for _, m in label)
    poly = [0] * shift + [1]
    for _, m in label:
        for j in range(m):
            # multiply by (q^m - q^j)
            hi = [0] * m + poly
            lo = [0] * j + poly
            ln = max(len(hi), len(lo))
            poly = [(hi[k] if k < len(hi) else 0) - (lo[k] if k < len(lo) else 0)
                    for k in range(ln)]
    return poly


# ---------------------------------------------------------------------------
# subrepresentations and Hall numbers


def _subspace_bases(d: int, m: int, p: int):
    """Column bases (d x m, echelon) of the m-dim subspaces of F_p^d."""
    for pivots in itertools.combinations(range(d), m):
        free_pos = [(t, r) for t in range(m) for r in range(d)
                    if r > pivots[t] and r not in pivots]
        for vals in itertools.product(range(p), repeat=len(free_pos)):
            cols = [[0] * m for _ in range(d)]
            for t in range(m):
                cols[pivots[t]][t] = 1
            for (t, r), v in zip(free_pos, vals):
                cols[r][t] = v
            yield cols, pivots


def _solve_many(B: list[list[int]], W: list[list[int]], p: int) -> list[list[int]] | None:
    """Solve B X = W column by column; None if any column is outside."""
    cols_w = len(W[0]) if W else 0
    m = len(B[0]) if B and B[0] else 0
    xs = []
    for c in range(cols_w):
        w = [row[c] for row in W]
        if B and B[0]:
            x = linfp.solve(B, w, p)
        else:
            x = [] if not any(w) else None
        if x is None:
            return None
        xs.append(x)
    return [[xs[c][r] for c in range(cols_w)] for r in range(m)]


def _matmul_cols(A: list[list[int]], B: list[list[int]], p: int) -> list[list[int]]:
    if not A:
        return []
    if not B or not B[0]:
        return [[] for _ in A]
    return linfp.matmul(A, B, p)


def stable_subspace_tuples(L: Rep, target: tuple[int, ...]):
    """All arrow-stable subspace choices of the given dimension vector.

    Yields dicts vertex -> (column basis, pivot rows); vertices are filled
    sinks-first, so each arrow constraint prunes as early as possible.
    """
    q, p = L.quiver, L.p
    order = q.topo_sinks_first()

    def rec(idx, chosen):
        if idx == len(order):
            yield dict(chosen)
            return
        i = order[idx]
        for cols, pivots in _subspace_bases(L.dim(i), target[i - 1], p):
            ok = True
            for (s, t) in q.arrows:
                if s == i and t in chosen:
                    img = _matmul_cols(L.mats[(s, t)], cols, p)
                    if _solve_many(chosen[t][0], img, p) is None:
                        ok = False
                        break
            if ok:
                chosen[i] = (cols, pivots)
                yield from rec(idx + 1, chosen)
                del chosen[i]

    yield from rec(0, {})


def sub_quotient_reps(L: Rep, chosen: dict) -> tuple[Rep, Rep]:
    """The subrepresentation and quotient carried by a stable subspace tuple."""
    q, p = L.quiver, L.p
    n = q.g.rank
    sub_dims = tuple(len(chosen[i][0][0]) if chosen[i][0] else 0
                     for i in range(1, n + 1))
    quot_dims = tuple(L.dim(i) - sub_dims[i - 1] for i in range(1, n + 1))
    comp = {i: [r for r in range(L.dim(i)) if r not in chosen[i][1]]
            for i in range(1, n + 1)}
    sub_mats, quot_mats = {}, {}
    for (s, t) in q.arrows:
        A = L.mats[(s, t)]
        Bs, Bt = chosen[s][0], chosen[t][0]
        X = _solve_many(Bt, _matmul_cols(A, Bs, p), p)
        assert X is not None
        sub_mats[(s, t)] = X if X else _zero_mat(sub_dims[t - 1], sub_dims[s - 1])
        # full bases: subspace columns, then unit vectors on the free rows
        Fs = [row[:] + [1 if r == c else 0 for c in comp[s]]
              for r, row in enumerate(Bs)] if L.dim(s) else []
        Ft = [row[:] + [1 if r == c else 0 for c in comp[t]]
              for r, row in enumerate(Bt)] if L.dim(t) else []
        Z = _solve_many(Ft, _matmul_cols(A, Fs, p), p)
        assert Z is not None
        st, ss = sub_dims[t - 1], sub_dims[s - 1]
        quot_mats[(s, t)] = [[Z[st + r][ss + c] for c in range(quot_dims[s - 1])]
                             for r in range(quot_dims[t - 1])]
    return Rep(q, p, sub_dims, sub_mats), Rep(q, p, quot_dims, quot_mats)


def _gauss_binom(n: int, m: int, p: int) -> int:
    num = den = 1
    for j in range(m):
        num *= p ** (n - j) - 1
        den *= p ** (j + 1) - 1
    assert num % den == 0
    return num // den


def hall_number(quiver: Quiver, p: int, L: IsoLabel, M: IsoLabel, N: IsoLabel) -> int:
    """$g^L_{M,N}$: subobjects of $L$ isomorphic to $M$ with quotient $N$."""
    n = quiver.g.rank
    dL = label_dim(L) or (0,) * n
    dM = label_dim(M) or (0,) * n
    dN = label_dim(N) or (0,) * n
    if tuple(a + b for a, b in zip(dM, dN)) != dL:
        return 0
    support = [i for i in range(1, n + 1) if dL[i - 1]]
    if len(support) == 1:
        # semisimple at one vertex: the count is a Gaussian binomial
        i = support[0]
        root = tuple(1 if v == i else 0 for v in range(1, n + 1))
        if all(r == root for r, _ in L + M + N):
            return _gauss_binom(dL[i - 1], dM[i - 1], p)
    Lrep = rep_from_label(quiver, p, L)
    count = 0
    for chosen in stable_subspace_tuples(Lrep, dM):
        sub, quot = sub_quotient_reps(Lrep, chosen)
        if decompose(sub) == M and decompose(quot) == N:
            count += 1
    return count


@lru_cache(maxsize=None)
def iso_classes_of_dim(quiver: Quiver, d: tuple[int, ...]) -> tuple[IsoLabel, ...]:
    """All iso class labels with the given dimension vector."""
    roots = quiver.g.positive_roots()

    def rec(remaining, start):
        if not any(remaining):
            yield []
            return
        for k in range(start, len(roots)):
            r = roots[k]
            if all(x >= y for x, y in zip(remaining, r)):
                rest = tuple(x - y for x, y in zip(remaining, r))
                for tail in rec(rest, k):
                    yield [r] + tail

    return tuple(sorted({label_of_roots(rs) for rs in rec(d, 0)}))


# ---------------------------------------------------------------------------
# extensions with known middle term


def ext_middle_terms(M: Rep, N: Rep) -> dict[IsoLabel, int]:
    """Count Ext$^1(M,N)$ classes by the iso class of the middle term.

    An extension $0 \\to N \\to E \\to M \\to 0$ of quiver representations
    is a choice of matrices $z_a\\colon M_i \\to N_j$ per arrow, taken
    modulo the coboundaries $N_a h_i - h_j M_a$; hereditary, so there is no
    cocycle condition to impose.
    """
    q, p = M.quiver, M.p
    arrow_dims = [(a, N.dim(a[1]) * M.dim(a[0])) for a in q.arrows]
    nvars = sum(d for _, d in arrow_dims)
    hvars = sum(N.dim(i) * M.dim(i) for i in q.vertices)
    rows = []
    for s in range(hvars):
        h = _unpack_vertexwise([1 if t == s else 0 for t in range(hvars)], M, N)
        z = {}
        for (i, j) in q.arrows:
            t1 = _matmul_cols(N.mats[(i, j)], h[i], p)
            t2 = _matmul_cols(h[j], M.mats[(i, j)], p)
            if t1 and t1[0]:
                z[(i, j)] = [[(x - y) % p for x, y in zip(r1, r2)]
                             for r1, r2 in zip(t1, t2)]
            elif t2 and t2[0]:
                z[(i, j)] = [[(-y) % p for y in r2] for r2 in t2]
            else:
                z[(i, j)] = _zero_mat(N.dim(j), M.dim(i))
        rows.append(_pack_arrowwise(z, arrow_dims))
    e = ext_dim(M, N)
    classes: dict[IsoLabel, int] = {}
    for zvec in _coset_reps(rows, nvars, e, p):
        z = _unpack_arrowwise(zvec, arrow_dims, M, N)
        lab = decompose(_extension_rep(M, N, z))
        classes[lab] = classes.get(lab, 0) + 1
    assert sum(classes.values()) == p ** e
    return classes


def _unpack_vertexwise(v, M: Rep, N: Rep):
    out = {}
    o = 0
    for i in M.quiver.vertices:
        r, c = N.dim(i), M.dim(i)
        out[i] = [[v[o + u * c + t] for t in range(c)] for u in range(r)]
        o += r * c
    return out


def _pack_arrowwise(z, arrow_dims):
    out = []
    for a, _ in arrow_dims:
        for row in z[a]:
            out.extend(row)
    return out


def _unpack_arrowwise(v, arrow_dims, M: Rep, N: Rep):
    out = {}
    o = 0
    for (i, j), dlen in arrow_dims:
        r, c = N.dim(j), M.dim(i)
        out[(i, j)] = [[v[o + u * c + t] for t in range(c)] for u in range(r)]
        o += dlen
    return out


def _coset_reps(image_rows, nvars, quot_dim, p):
    """One representative per coset of the row span: zero on pivot columns."""
    if nvars == 0:
        return [[]]
    rows = [r for r in image_rows if any(r)]
    _, pivots = linfp.rref(rows, p) if rows else ([], [])
    free = [c for c in range(nvars) if c not in pivots]
    assert len(free) == quot_dim
    out = []
    for vals in itertools.product(range(p), repeat=quot_dim):
        v = [0] * nvars
        for c, x in zip(free, vals):
            v[c] = x
        out.append(v)
    return out


def _extension_rep(M: Rep, N: Rep, z) -> Rep:
    q, p = M.quiver, M.p
    n = q.g.rank
    dims = tuple(N.dims[i] + M.dims[i] for i in range(n))
    mats = {}
    for a in q.arrows:
        i, j = a
        rows = []
        for u in range(N.dim(j)):
            rows.append(N.mats[a][u][:] + z[a][u][:])
        for u in range(M.dim(j)):
            rows.append([0] * N.dim(i) + M.mats[a][u][:])
        mats[a] = rows
    return Rep(q, p, dims, mats)


# ---------------------------------------------------------------------------
# kernel-cokernel counts


def count_kercoker(quiver: Quiver, p: int, N: IsoLabel, M: IsoLabel,
                   V: IsoLabel, W: IsoLabel) -> int:
    """$\\#\\{g \\in \\operatorname{Hom}(N, M): \\ker g \\cong V,
    \\operatorname{coker} g \\cong W\\}$."""
    Nrep = rep_from_label(quiver, p, N)
    Mrep = rep_from_label(quiver, p, M)
    basis = hom_basis(Nrep, Mrep)
    if p ** len(basis) > 200000:
        raise ValueError("Hom space too large to enumerate: %d^%d" % (p, len(basis)))
    hits = 0
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        gmap = {i: _zero_mat(Mrep.dim(i), Nrep.dim(i)) for i in quiver.vertices}
        for c, f in zip(coeffs, basis):
            if c:
                for i in quiver.vertices:
                    for u in range(Mrep.dim(i)):
                        for t in range(Nrep.dim(i)):
                            gmap[i][u][t] = (gmap[i][u][t] + c * f[i][u][t]) % p
        ker, coker = _ker_coker_reps(Nrep, Mrep, gmap)
        if decompose(ker) == V and decompose(coker) == W:
            hits += 1
    return hits


def gamma_factor(quiver: Quiver, p: int, N: IsoLabel, M: IsoLabel,
                 V: IsoLabel, W: IsoLabel) -> Fraction:
    """$\\gamma_{N,M}^{V,W}$: exact sequences $0 \\to V \\to N \\to M \\to W
    \\to 0$ counted up to $|\\operatorname{Aut} M||\\operatorname{Aut} N|$.

    Such a sequence is a map $g\\colon N \\to M$ with the right kernel and
    cokernel classes plus an identification at each end, hence the
    $|\\operatorname{Aut} V||\\operatorname{Aut} W|$ factor.
    """
    hits = count_kercoker(quiver, p, N, M, V, W)
    out = Fraction(hits * aut_size(quiver, p, V) * aut_size(quiver, p, W))
    return out / (aut_size(quiver, p, M) * aut_size(quiver, p, N))


def _ker_coker_reps(Nrep: Rep, Mrep: Rep, gmap) -> tuple[Rep, Rep]:
    q, p = Nrep.quiver, Nrep.p
    kbases = {}
    for i in q.vertices:
        if Nrep.dim(i) == 0:
            kbases[i] = []
        elif not gmap[i]:           # target is zero: everything is kernel
            kbases[i] = linfp.identity(Nrep.dim(i))
        else:
            ns = linfp.nullspace(gmap[i], p)
            kbases[i] = linfp.transpose(ns) if ns else [[] for _ in range(Nrep.dim(i))]
    kdims = tuple(len(kbases[i][0]) if kbases[i] else 0 for i in q.vertices)
    kmats = {}
    for (s, t) in q.arrows:
        X = _solve_many(kbases[t], _matmul_cols(Nrep.mats[(s, t)], kbases[s], p), p)
        assert X is not None, "kernel of a module map must be arrow-stable"
        kmats[(s, t)] = X if X else _zero_mat(kdims[t - 1], kdims[s - 1])
    ker = Rep(q, p, kdims, kmats)
    projs = {}
    for i in q.vertices:
        if Mrep.dim(i) == 0:
            projs[i] = []
        elif not gmap[i] or not gmap[i][0]:
            projs[i] = linfp.identity(Mrep.dim(i))
        else:
            projs[i] = linfp.nullspace(linfp.transpose(gmap[i]), p)
    cdims = tuple(len(projs[i]) for i in q.vertices)
    cmats = {}
    for (s, t) in q.arrows:
        if not projs[t]:
            cmats[(s, t)] = []
            continue
        if not projs[s]:
            cmats[(s, t)] = [[] for _ in projs[t]]
            continue
        # lift along a section of the projection at s, map, project at t
        Ps = projs[s]
        S = _solve_many(Ps, linfp.identity(len(Ps)), p)
        assert S is not None
        cmats[(s, t)] = _matmul_cols(projs[t], _matmul_cols(Mrep.mats[(s, t)], S, p), p)
    coker = Rep(q, p, cdims, cmats)
    return ker, coker


# ---------------------------------------------------------------------------
# polynomial counts


_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _interp_integer(pts, vals) -> list[int]:
    """Newton interpolation; coefficients must come out integral."""
    n = len(pts)
    dd = [Fraction(v) for v in vals]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (pts[i] - pts[i - level])
    poly = [Fraction(0)] * n
    poly[0] = dd[n - 1]
    for k in range(n - 2, -1, -1):
        new = [Fraction(0)] * n
        for d in range(n - 1):
            new[d + 1] += poly[d]
            new[d] -= poly[d] * pts[k]
        new[0] += dd[k]
        poly = new
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    out = []
    for c in poly:
        assert c.denominator == 1, "non-integer interpolated coefficient"
        out.append(int(c))
    return out


def _validated_poly(counter, degree_bound: int) -> list[int]:
    pts = list(_PRIMES[:degree_bound + 1])
    vals = [counter(p) for p in pts]
    coeffs = _interp_integer(pts, vals)
    check_p = _PRIMES[degree_bound + 1]
    predicted = sum(c * check_p ** k for k, c in enumerate(coeffs))
    assert predicted == counter(check_p), "count is not the interpolated polynomial"
    return coeffs


def hall_polynomial(quiver: Quiver, L: IsoLabel, M: IsoLabel, N: IsoLabel) -> list[int]:
    """Coefficients (ascending in $q$) of $q \\mapsto g^L_{M,N}$.

    Interpolated from prime values and validated on a held-out prime; a
    generous degree bound (the total dimension) keeps this honest without a
    sharp estimate.
    """
    bound = sum(m * sum(r) for r, m in L) + 1
    return _validated_poly(lambda p: hall_number(quiver, p, L, M, N), bound)


def kercoker_polynomial(quiver: Quiver, N: IsoLabel, M: IsoLabel,
                        V: IsoLabel, W: IsoLabel) -> list[int]:
    """Coefficients of $q \\mapsto \\#\\{g: N \\to M\\}$ with fixed kernel
    and cokernel classes.  The count is at most $q^{\\dim\\operatorname{Hom}}$,
    which bounds the degree."""
    hd = hom_dim(rep_from_label(quiver, 2, N), rep_from_label(quiver, 2, M))
    bound = min(hd + 1, len(_PRIMES) - 2)
    return _validated_poly(lambda p: count_kercoker(quiver, p, N, M, V, W), bound)
