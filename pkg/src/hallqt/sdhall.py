"""Twisted semi-derived Hall algebra of bounded complexes over a Dynkin
quiver, with exact coefficients in $\\mathbb{Q}(v^{1/2})$.

Elements are written on the normal-form basis: words
$E_{M_r,\\ell_r} \\cdots E_{M_1,\\ell_1}$ with levels strictly descending
left to right and at most one factor per level, times a central product of
invertible classes $K_{\\alpha,\\ell}$.  Multiplication rewrites an
arbitrary concatenation into this basis with four rules:

* same level: a twisted Hall product, summing over extensions;
* adjacent levels in the wrong order: a commutation that sums over
  kernel/cokernel pairs of maps between the two modules and emits an
  invertible class;
* levels at distance at least two: a plain $v$-power swap;
* the $K_{\\alpha,\\ell}$ are central and multiply additively in
  $\\alpha$.

All structure constants are computed as exact polynomials in $q = v^2$
from finite-field counts, so the rewriting is exact.  Every rewrite is
checked against the level-wise grading by projective classes; a grading
violation is a hard error, never a warning.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct

from .derivedcat import DCat, DInd, DObj, deg_add, solve_k_levels
from .hallfq import (IsoLabel, Quiver, aut_polynomial, hall_polynomial,
                     iso_classes_of_dim, kercoker_polynomial, label_dim,
                     label_of_roots)
from .qcartan import Mono, kr_monomial, npairing
from .scalars import ScalarRat

EWord = tuple[tuple[int, IsoLabel], ...]
KWord = tuple[tuple[int, tuple[int, ...]], ...]
Key = tuple[EWord, KWord]

_ZERO = ScalarRat.from_int(0)
_ONE = ScalarRat.from_int(1)


def qpoly(coeffs) -> ScalarRat:
    """A polynomial in $q = v^2$ given by ascending integer coefficients."""
    out = _ZERO
    for k, c in enumerate(coeffs):
        if c:
            out = out + ScalarRat.from_fraction(Fraction(c)) * ScalarRat.v_power(2 * k)
    return out


def rescale_unit() -> ScalarRat:
    """$v^{1/2}(v - v^{-1})$, the normalization on simple generators."""
    return ScalarRat.w_power(3) - ScalarRat.w_power(-1)


@lru_cache(maxsize=None)
def _sub_labels(quiver: Quiver, d: tuple[int, ...]) -> tuple[IsoLabel, ...]:
    """All iso classes of dimension at most d (coordinatewise)."""
    out: list[IsoLabel] = []
    for dims in iproduct(*(range(x + 1) for x in d)):
        out.extend(iso_classes_of_dim(quiver, dims))
    return tuple(out)


@lru_cache(maxsize=None)
def _same_level_terms(quiver: Quiver, M: IsoLabel, N: IsoLabel):
    """$E_M E_N = v^{\\langle N,M\\rangle} \\sum_L g^L_{M,N} E_L$ at a
    common level, where the sum runs over extensions with sub $M$ and
    quotient $N$; returns the pairs $(L, c_L)$."""
    dM = label_dim(M) or (0,) * quiver.g.rank
    dN = label_dim(N) or (0,) * quiver.g.rank
    dL = tuple(a + b for a, b in zip(dM, dN))
    tw = ScalarRat.v_power(quiver.euler(dN, dM))
    out = []
    for L in iso_classes_of_dim(quiver, dL):
        poly = hall_polynomial(quiver, L, M, N)
        if any(poly):
            out.append((L, tw * qpoly(poly)))
    assert out, "empty Hall product"
    return tuple(out)


@lru_cache(maxsize=None)
def _adjacent_terms(quiver: Quiver, M: IsoLabel, N: IsoLabel):
    """Commutation data for $E_{M,\\ell} E_{N,\\ell+1}$.

    The result is a list of $(V, W, \\alpha, c)$ with
    $E_{M,\\ell}E_{N,\\ell+1} = \\sum c\\, E_{V,\\ell+1} E_{W,\\ell}
    K_{\\alpha,\\ell}$, where $V$ and $W$ run over kernel and cokernel
    classes of maps $N \\to M$ and $\\alpha$ is the projective-class
    difference of $N$ and $V$.
    """
    rank = quiver.g.rank
    dM = label_dim(M) or (0,) * rank
    dN = label_dim(N) or (0,) * rank
    pre = ScalarRat.v_power(-quiver.euler(dN, dM))
    aM = qpoly(aut_polynomial(quiver, M))
    aN = qpoly(aut_polynomial(quiver, N))
    out = []
    for V in _sub_labels(quiver, dN):
        dV = label_dim(V) or (0,) * rank
        dW = tuple(m - n + v for m, n, v in zip(dM, dN, dV))
        if any(x < 0 for x in dW):
            continue
        for W in iso_classes_of_dim(quiver, dW):
            cnt = kercoker_polynomial(quiver, N, M, V, W)
            if not any(cnt):
                continue
            gamma = (qpoly(cnt) * qpoly(aut_polynomial(quiver, V))
                     * qpoly(aut_polynomial(quiver, W))) / (aM * aN)
            c = pre * ScalarRat.v_power(-quiver.euler(dW, dV)) * gamma
            alpha = _pclass_diff(quiver, dN, dV)
            out.append((V, W, alpha, c))
    assert out, "empty commutation"
    return tuple(out)


def _pclass_diff(quiver: Quiver, d1: tuple[int, ...], d2: tuple[int, ...]) -> tuple[int, ...]:
    g = quiver.g
    out = [0] * g.rank
    for i in g.vertices:
        c = d1[i - 1] - d2[i - 1]
        if c:
            out[i - 1] += c
            for (a, b) in quiver.arrows:
                if a == i:
                    out[b - 1] -= c
    return tuple(out)


def _k_merge(kword: KWord, level: int, alpha: tuple[int, ...]) -> KWord:
    acc = {l: list(a) for l, a in kword}
    cur = acc.setdefault(level, [0] * len(alpha))
    for j, x in enumerate(alpha):
        cur[j] += x
    return tuple(sorted(((l, tuple(a)) for l, a in acc.items() if any(a)),
                        key=lambda t: -t[0]))


class SDElt:
    """An element: a finite sum of basis keys with exact coefficients."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: "SDH", terms: dict):
        self.ctx = ctx
        self.terms = {k: c for k, c in terms.items() if c}

    def __add__(self, other: "SDElt") -> "SDElt":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, _ZERO) + c
        return SDElt(self.ctx, out)

    def __neg__(self) -> "SDElt":
        return SDElt(self.ctx, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "SDElt") -> "SDElt":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ScalarRat):
            return SDElt(self.ctx, {k: c * other for k, c in self.terms.items()})
        out: dict[Key, ScalarRat] = {}
        for (e1, k1), c1 in self.terms.items():
            for (e2, k2), c2 in other.terms.items():
                kw = k1
                for l, a in k2:
                    kw = _k_merge(kw, l, a)
                for key, c in self.ctx._normal_terms(e1 + e2, kw).items():
                    out[key] = out.get(key, _ZERO) + c1 * c2 * c
        return SDElt(self.ctx, out)

    def __rmul__(self, other) -> "SDElt":
        if isinstance(other, ScalarRat):
            return self * other
        return NotImplemented

    def __eq__(self, other) -> bool:
        return isinstance(other, SDElt) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, key: Key) -> ScalarRat:
        return self.terms.get(key, _ZERO)

    def pi_h(self) -> "SDElt":
        """Quotient map killing the invertible classes."""
        out: dict[Key, ScalarRat] = {}
        for (ew, _), c in self.terms.items():
            key = (ew, ())
            out[key] = out.get(key, _ZERO) + c
        return SDElt(self.ctx, out)

    def degree(self) -> dict[int, tuple[int, ...]]:
        """The common grading degree of all terms; raises on a mix."""
        assert self.terms, "the zero element has no degree"
        degs = [self.ctx.key_degree(k) for k in self.terms]
        for d in degs[1:]:
            if d != degs[0]:
                raise ValueError("inhomogeneous element: %r vs %r" % (degs[0], d))
        return degs[0]

    def map_coeffs(self, f) -> dict:
        return {k: f(c) for k, c in self.terms.items()}

    def render(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for key in sorted(self.terms, key=_key_sort):
            c = self.terms[key].render()
            w = self.ctx.render_key(key)
            if w == "1":
                bits.append("(%s)" % c)
            else:
                bits.append("(%s)*%s" % (c, w))
        return " + ".join(bits)


def _key_sort(key: Key):
    ew, kw = key
    return (len(ew), ew, kw)


class SDH:
    """Algebra context over a fixed derived category of a Dynkin quiver."""

    def __init__(self, dc: DCat):
        self.dc = dc
        self.quiver = dc.quiver
        self.rank = dc.quiver.g.rank

    # -- constructors ------------------------------------------------------

    def zero(self) -> SDElt:
        return SDElt(self, {})

    def one(self) -> SDElt:
        return SDElt(self, {((), ()): _ONE})

    def scalar(self, c: ScalarRat) -> SDElt:
        return SDElt(self, {((), ()): c})

    def e(self, label: IsoLabel, level: int) -> SDElt:
        if not label:
            return self.one()
        return SDElt(self, {(((level, label),), ()): _ONE})

    def e_root(self, root: tuple[int, ...], level: int) -> SDElt:
        return self.e(label_of_roots((root,)), level)

    def e_simple(self, i: int, level: int) -> SDElt:
        root = tuple(1 if j == i else 0 for j in self.quiver.g.vertices)
        return self.e_root(root, level)

    def e_dobj(self, obj: DObj) -> SDElt:
        """The basis word of a derived object: one factor per level."""
        return SDElt(self, {(self.word_of(obj), ()): _ONE})

    def word_of(self, obj: DObj) -> EWord:
        by_level: dict[int, list[tuple[int, ...]]] = {}
        for (root, z), m in obj:
            by_level.setdefault(z, []).extend([root] * m)
        return tuple((z, label_of_roots(by_level[z]))
                     for z in sorted(by_level, reverse=True))

    def k(self, alpha: tuple[int, ...], level: int) -> SDElt:
        if not any(alpha):
            return self.one()
        return SDElt(self, {((), ((level, alpha),)): _ONE})

    def k_simple(self, i: int, level: int) -> SDElt:
        root = tuple(1 if j == i else 0 for j in self.quiver.g.vertices)
        return self.k(self.dc.proj_class(root), level)

    def e_tilde(self, i: int, level: int) -> SDElt:
        return self.e_simple(i, level) * rescale_unit()

    # -- grading -----------------------------------------------------------

    def key_degree(self, key: Key) -> dict[int, tuple[int, ...]]:
        ew, kw = key
        deg: dict[int, tuple[int, ...]] = {}
        for l, label in ew:
            d = label_dim(label)
            if d is not None:
                deg = deg_add(deg, {l: self.dc.proj_class(d)})
        for l, a in kw:
            deg = deg_add(deg, self.dc.deg_k(a, l))
        return deg

    # -- normal form -------------------------------------------------------

    def _normal_terms(self, eword: EWord, kword: KWord) -> dict[Key, ScalarRat]:
        eword = tuple((l, lab) for l, lab in eword if lab)
        want = self.key_degree((eword, kword))
        out: dict[Key, ScalarRat] = {}
        work = [(eword, kword, _ONE)]
        while work:
            ew, kw, c = work.pop()
            idx = None
            for t in range(len(ew) - 1):
                if ew[t][0] <= ew[t + 1][0]:
                    idx = t
                    break
            if idx is None:
                out[(ew, kw)] = out.get((ew, kw), _ZERO) + c
                continue
            (l1, M), (l2, N) = ew[idx], ew[idx + 1]
            pre, post = ew[:idx], ew[idx + 2:]
            if l1 == l2:
                for L, cl in _same_level_terms(self.quiver, M, N):
                    work.append((pre + ((l1, L),) + post, kw, c * cl))
            elif l2 == l1 + 1:
                for V, W, alpha, cv in _adjacent_terms(self.quiver, M, N):
                    letters = tuple(x for x in ((l2, V), (l1, W)) if x[1])
                    kw2 = _k_merge(kw, l1, alpha) if any(alpha) else kw
                    work.append((pre + letters + post, kw2, c * cv))
            else:
                dM = label_dim(M) or (0,) * self.rank
                dN = label_dim(N) or (0,) * self.rank
                sign = -1 if (l2 - l1) % 2 else 1
                cv = ScalarRat.v_power(sign * self.quiver.sym(dM, dN))
                work.append((pre + ((l2, N), (l1, M)) + post, kw, c * cv))
        for key in out:
            assert self.key_degree(key) == want, "rewriting broke the grading"
        return out

    # -- rendering ---------------------------------------------------------

    def render_key(self, key: Key) -> str:
        ew, kw = key
        bits = []
        for l, label in ew:
            parts = []
            for root, m in sorted(label, key=lambda t: t[0]):
                nm = self.dc.name((root, 0))
                parts.append(nm if m == 1 else nm + "^%d" % m)
            bits.append("E[%s; %d]" % (" + ".join(parts), l))
        for l, a in kw:
            bits.append("K[(%s); %d]" % (",".join(str(x) for x in a), l))
        return "*".join(bits) if bits else "1"


# ---------------------------------------------------------------------------
# lifts of standard and simple characters


def leading_key(ctx: SDH, mono: Mono) -> Key:
    """The basis word attached to a dominant monomial's derived object."""
    return (ctx.word_of(ctx.dc.monomial_object(mono)), ())


def factor_product(ctx: SDH, mono: Mono) -> SDElt:
    """The product of rescaled generators of the monomial's factors, taken
    with spectral parameter ascending."""
    assert mono.dominant, mono
    out = ctx.one()
    lam = rescale_unit()
    for (i, p), u in sorted(mono.ex, key=lambda t: (t[0][1], t[0][0])):
        root, z = ctx.dc.happel(i, p)
        f = ctx.e_root(root, z) * lam
        for _ in range(u):
            out = out * f
    return out


def monomial_normalizer(ctx: SDH, mono: Mono) -> ScalarRat:
    """Inverse top coefficient of the ordered product of the monomial's
    commuting variables, moved to the deformation base of the Hall side."""
    g = ctx.quiver.g
    fs: list[tuple[int, int]] = []
    for (i, p), u in sorted(mono.ex, key=lambda t: (t[0][1], t[0][0])):
        fs.extend([(i, p)] * u)
    tot = 0
    for a in range(len(fs)):
        for b in range(a + 1, len(fs)):
            tot += npairing(g, fs[a][0], fs[a][1], fs[b][0], fs[b][1])
    return ScalarRat.w_power(-tot)


def leading_coeff(ctx: SDH, mono: Mono) -> ScalarRat:
    """Coefficient of the leading word in the standard lift."""
    c = standard_lift(ctx, mono).coeff(leading_key(ctx, mono))
    assert c, "standard lift lost its leading word"
    return c


def k_between(ctx: SDH, mono: Mono, lower: Mono) -> KWord:
    """The invertible-class word matching the degree drop from one
    dominant monomial's word to a lower one's."""
    d1 = ctx.key_degree(leading_key(ctx, mono))
    d2 = ctx.key_degree(leading_key(ctx, lower))
    alphas = solve_k_levels(deg_add(d1, d2, -1), ctx.rank)
    kw: KWord = ()
    for l, a in alphas.items():
        kw = _k_merge(kw, l, a)
    return kw


def standard_lift(ctx: SDH, mono: Mono) -> SDElt:
    """The standard-character lift: the normalized ordered product of
    rescaled generators, one per factor of the dominant monomial."""
    return factor_product(ctx, mono) * monomial_normalizer(ctx, mono)


def simple_lift(ctx: SDH, mono: Mono) -> SDElt:
    """The simple-character lift: standard lifts over the transition
    support, weighted by the transition coefficients and padded with the
    invertible class that restores homogeneity."""
    from .qtchar import simple_in_standard
    g = ctx.quiver.g
    out = ctx.zero()
    for mp, b in simple_in_standard(g, mono):
        kw = k_between(ctx, mono, mp)
        pad = SDElt(ctx, {((), kw): b})
        out = out + standard_lift(ctx, mp) * pad
    out.degree()
    return out


# ---------------------------------------------------------------------------
# presentation audit


def _cartan_pairing(g, i: int, j: int) -> int:
    if i == j:
        return 2
    return -1 if j in g.neighbors[i] else 0


def check_presentation(ctx: SDH, lo: int, hi: int) -> list[str]:
    """Audit the five defining relation families on rescaled simple
    generators over the level window [lo, hi]; returns failure strings."""
    g = ctx.quiver.g
    verts = list(g.vertices)
    levels = list(range(lo, hi + 1))
    fails: list[str] = []

    def eg(i, m):
        return ctx.e_tilde(i, m)

    v2 = ScalarRat.v_power(2)

    # (1) invertible classes are central
    for i in verts:
        for m in levels:
            kk = ctx.k_simple(i, m)
            for j in verts:
                for l in levels:
                    if not (kk * eg(j, l) - eg(j, l) * kk).is_zero:
                        fails.append("K(%d,%d) not central against E(%d,%d)" % (i, m, j, l))
                    if not (kk * ctx.k_simple(j, l) - ctx.k_simple(j, l) * kk).is_zero:
                        fails.append("K(%d,%d) not central against K(%d,%d)" % (i, m, j, l))

    for m in levels:
        for i in verts:
            for j in verts:
                if i == j:
                    continue
                a = _cartan_pairing(g, i, j)
                if a == 0:
                    # (2) distant nodes commute at a common level
                    if not (eg(i, m) * eg(j, m) - eg(j, m) * eg(i, m)).is_zero:
                        fails.append("E(%d,%d), E(%d,%d) do not commute" % (i, m, j, m))
                elif a == -1:
                    # (3) quantum Serre at a common level
                    x, y = eg(i, m), eg(j, m)
                    lhs = (x * x * y - (x * y * x) * (ScalarRat.v_power(1) + ScalarRat.v_power(-1))
                           + y * x * x)
                    if not lhs.is_zero:
                        fails.append("Serre fails for (%d,%d) at level %d" % (i, j, m))

    # (4) adjacent levels
    for m in levels[:-1]:
        for i in verts:
            for j in verts:
                a = _cartan_pairing(g, i, j)
                lhs = eg(i, m + 1) * eg(j, m)
                rhs = (eg(j, m) * eg(i, m + 1)) * ScalarRat.v_power(a)
                if i == j:
                    rhs = rhs + ctx.k_simple(i, m) * (_ONE - v2)
                if not (lhs - rhs).is_zero:
                    fails.append("adjacent-level relation fails for (%d,%d) at %d" % (i, j, m))

    # (5) distant levels
    for l in levels:
        for r in levels:
            if r <= l + 1:
                continue
            for i in verts:
                for j in verts:
                    a = _cartan_pairing(g, i, j)
                    sign = -1 if (r - l) % 2 else 1
                    lhs = eg(j, r) * eg(i, l)
                    rhs = (eg(i, l) * eg(j, r)) * ScalarRat.v_power(-sign * a)
                    if not (lhs - rhs).is_zero:
                        fails.append("distant-level relation fails for (%d,%d) levels (%d,%d)"
                                     % (i, j, l, r))
    return fails


# ---------------------------------------------------------------------------
# quantum T-system lift


def verify_tsystem(ctx: SDH, i: int, k: int, p: int) -> dict:
    """Check the lifted recurrence on Kirillov-Reshetikhin lifts.

    Solves ``L(i,k,p) L(i,k,p+2) = t^a L(i,k-1,p+2) L(i,k+1,p) +
    t^b K \\prod_j L(j,k,p+1)`` for half-integer exponents a, b and the
    degree-matching invertible word K; raises if no exact solution exists.
    """
    g = ctx.quiver.g
    lhs = simple_lift(ctx, kr_monomial(i, p, k)) * simple_lift(ctx, kr_monomial(i, p + 2, k))
    r1 = simple_lift(ctx, kr_monomial(i, p + 2, k - 1)) * simple_lift(ctx, kr_monomial(i, p, k + 1))
    r2 = ctx.one()
    for j in sorted(g.neighbors[i]):
        r2 = r2 * simple_lift(ctx, kr_monomial(j, p + 1, k))

    # degree-matching invertible correction on the second term
    dl = lhs.degree()
    d2 = r2.degree()
    alphas = solve_k_levels(deg_add(dl, d2, -1), ctx.rank)
    kcorr = ctx.one()
    for l, a in alphas.items():
        kcorr = kcorr * ctx.k(a, l)
    r2k = r2 * kcorr

    keys = set(lhs.terms) | set(r1.terms) | set(r2k.terms)
    rows = [(r1.coeff(key), r2k.coeff(key), lhs.coeff(key)) for key in sorted(keys, key=_key_sort)]
    piv1 = next(r for r in rows if r[0])
    # eliminate x from every other row, then solve for y
    red = []
    for r in rows:
        if r is piv1:
            continue
        f = r[0] / piv1[0]
        red.append((r[1] - f * piv1[1], r[2] - f * piv1[2]))
    piv2 = next(r for r in red if r[0])
    y = piv2[1] / piv2[0]
    x = (piv1[2] - piv1[1] * y) / piv1[0]
    for a_, b_, c_ in rows:
        if a_ * x + b_ * y != c_:
            raise ValueError("lifted recurrence has no exact solution")
    return {"a": x.half_power(), "b": y.half_power(),
            "k_levels": alphas}
