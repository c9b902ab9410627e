"""The inverse quantum Cartan matrix, the induced pairing, and monomials.

The quantum Cartan matrix of a simply laced diagram is
$C(q) = (q + q^{-1})\\mathrm{Id} - J$ with $J$ the adjacency matrix.  Its
inverse expands as $\\tilde C_{ij} = \\sum_{m \\ge 1} a_{ij}(m) q^{-m}$
where the coefficient matrices satisfy $a(0) = 0$, $a(1) = \\mathrm{Id}$,
$a(m+1) = J\\,a(m) - a(m-1)$.  Out of these comes the skew-symmetric
pairing on the variable lattice,
$\\mathcal{N}(i,p;j,s) = a_{ij}(s-p+1) - a_{ij}(s-p-1)$ for $p < s$
(zero at $p = s$, antisymmetric beyond), which controls the $t$-commutation
of the quantum torus the $(q,t)$-characters live in.

Monomials in the variables $Y_{i,p}$ are kept as sorted exponent tuples;
the Nakajima partial order is decided by the unique integer certificate
expressing a dominant ratio as a product of the root monomials $A_{i,p}$.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import CartanData
from .scalars import ScalarRat


@lru_cache(maxsize=None)
def _inv_qcartan_row(g: CartanData, m: int) -> tuple[tuple[int, ...], ...]:
    """The coefficient matrix $a(m)$ of the inverse quantum Cartan matrix."""
    n = g.rank
    if m <= 0:
        return tuple((0,) * n for _ in range(n))
    if m == 1:
        return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    prev, prev2 = _inv_qcartan_row(g, m - 1), _inv_qcartan_row(g, m - 2)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = -prev2[i][j]
            for k in g.neighbors[i + 1]:
                acc += prev[k - 1][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def inv_qcartan(g: CartanData, i: int, j: int, m: int) -> int:
    """$a_{ij}(m)$, with $a_{ij}(m) = 0$ for $m \\le 0$."""
    return _inv_qcartan_row(g, m)[i - 1][j - 1]


def npairing(g: CartanData, i: int, p: int, j: int, s: int) -> int:
    """$\\mathcal{N}(i,p;j,s)$, skew-symmetric, zero on the diagonal."""
    if p == s:
        return 0
    if p > s:
        return -npairing(g, j, s, i, p)
    return inv_qcartan(g, i, j, s - p + 1) - inv_qcartan(g, i, j, s - p - 1)


# ---------------------------------------------------------------------------
# monomials in the Y variables


@dataclass(frozen=True)
class Mono:
    """A Laurent monomial in the $Y_{i,p}$: sorted ((i,p), exponent) pairs."""

    ex: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def from_dict(cls, d: dict[tuple[int, int], int]) -> "Mono":
        return cls(tuple(sorted((k, v) for k, v in d.items() if v != 0)))

    @classmethod
    def unit(cls) -> "Mono":
        return cls(())

    @classmethod
    def y(cls, i: int, p: int, e: int = 1) -> "Mono":
        return cls.from_dict({(i, p): e})

    def to_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.ex)

    def __mul__(self, other: "Mono") -> "Mono":
        d = self.to_dict()
        for k, v in other.ex:
            d[k] = d.get(k, 0) + v
        return Mono.from_dict(d)

    def inverse(self) -> "Mono":
        return Mono(tuple((k, -v) for k, v in self.ex))

    def __pow__(self, n: int) -> "Mono":
        return Mono(tuple((k, n * v) for k, v in self.ex)) if n else Mono.unit()

    @property
    def is_unit(self) -> bool:
        return not self.ex

    @property
    def dominant(self) -> bool:
        return all(v >= 0 for _, v in self.ex)

    def exponent(self, i: int, p: int) -> int:
        return self.to_dict().get((i, p), 0)

    def variables(self) -> list[tuple[int, int]]:
        return [k for k, _ in self.ex]

    def render(self) -> str:
        if not self.ex:
            return "1"
        parts = []
        for (i, p), e in self.ex:
            base = "Y(%d,%d)" % (i, p)
            parts.append(base if e == 1 else base + "^%d" % e)
        return "*".join(parts)

    def __repr__(self):
        return "Mono(%s)" % self.render()


def a_monomial(g: CartanData, i: int, p: int) -> Mono:
    """$A_{i,p} = Y_{i,p-1} Y_{i,p+1} \\prod_{j \\sim i} Y_{j,p}^{-1}$."""
    d = {(i, p - 1): 1, (i, p + 1): 1}
    for j in g.neighbors[i]:
        d[(j, p)] = -1
    return Mono.from_dict(d)


def kr_monomial(i: int, p: int, k: int) -> Mono:
    """$Y_{i,p} Y_{i,p+2} \\cdots Y_{i,p+2(k-1)}$ (the unit for k = 0)."""
    return Mono.from_dict({(i, p + 2 * j): 1 for j in range(k)})


def a_certificate(g: CartanData, ratio: Mono) -> dict[tuple[int, int], int] | None:
    """Write ratio as $\\prod A_{i,p}^{c_{i,p}}$ with integer $c$, or None.

    The exponent of $Y_{i,s}$ in such a product is
    $c_{i,s+1} + c_{i,s-1} - \\sum_{j \\sim i} c_{j,s}$, so scanning the
    spectral parameter upward determines every $c$ uniquely; the scan either
    closes up (all equations hold, support finite) or there is no solution.
    """
    u = ratio.to_dict()
    if not u:
        return {}
    lo = min(p for _, p in u) + 1
    hi = max(p for _, p in u) + 1
    c: dict[tuple[int, int], int] = {}
    for s in range(lo - 1, hi + 1):
        for i in g.vertices:
            # exponent balance at (i, s) fixes c[(i, s+1)]
            val = u.get((i, s), 0) - c.get((i, s - 1), 0) \
                + sum(c.get((j, s), 0) for j in g.neighbors[i])
            if val:
                c[(i, s + 1)] = val
    # verify (the scan ignores equations above hi, so recheck everything)
    prod = Mono.unit()
    for (i, p), e in c.items():
        prod = prod * a_monomial(g, i, p) ** e
    if prod != ratio:
        return None
    return c


def nakajima_leq(g: CartanData, m1: Mono, m2: Mono) -> bool:
    """$m_1 \\le m_2$: the ratio $m_2 m_1^{-1}$ is a product of $A_{i,p}$."""
    cert = a_certificate(g, m2 * m1.inverse())
    return cert is not None and all(v > 0 for v in cert.values())


# ---------------------------------------------------------------------------
# skew-commutative tori


class SkewTorus:
    """A based quantum torus over $\\mathbb{Q}(v^{1/2})$.

    The basis elements are indexed by monomials (any hashable with ``*`` and
    ``inverse``) and multiply by
    $e(m_1) e(m_2) = w^{P(m_1, m_2)} e(m_1 m_2)$, where $P$ is an integer
    skew form and $w$ the half power of the deformation variable; for the
    $(q,t)$-torus $P = \\mathcal{N}$ and the rule reads
    $\\tilde Y_{m_1} \\tilde Y_{m_2} = t^{\\mathcal{N}(m_1,m_2)/2}
    \\tilde Y_{m_1 m_2}$.
    """

    def __init__(self, pairing):
        self.pairing = pairing

    def zero(self) -> "TorusElement":
        return TorusElement(self, {})

    def one(self) -> "TorusElement":
        return self.comm(Mono.unit())

    def comm(self, m, coeff: ScalarRat | None = None) -> "TorusElement":
        return TorusElement(self, {m: coeff or ScalarRat.from_int(1)})

    def from_terms(self, terms: dict) -> "TorusElement":
        return TorusElement(self, {m: c for m, c in terms.items() if c})


class TorusElement:
    """A finite linear combination of based torus generators."""

    __slots__ = ("torus", "terms")

    def __init__(self, torus: SkewTorus, terms: dict):
        self.torus = torus
        self.terms = {m: c for m, c in terms.items() if c}

    def __add__(self, other: "TorusElement") -> "TorusElement":
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            out[m] = c if s is None else s + c
        return TorusElement(self.torus, out)

    def __neg__(self) -> "TorusElement":
        return TorusElement(self.torus, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other) -> "TorusElement":
        if isinstance(other, ScalarRat):
            return TorusElement(self.torus, {m: c * other for m, c in self.terms.items()})
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                w = self.torus.pairing(m1, m2)
                c = c1 * c2 * ScalarRat.w_power(w)
                m = m1 * m2
                s = out.get(m)
                out[m] = c if s is None else s + c
        return TorusElement(self.torus, out)

    def __rmul__(self, scalar: ScalarRat) -> "TorusElement":
        return self * scalar

    def bar(self) -> "TorusElement":
        """Coefficient-wise bar; the based generators are bar-invariant."""
        return TorusElement(self.torus, {m: c.bar() for m, c in self.terms.items()})

    def coeff(self, m) -> ScalarRat:
        return self.terms.get(m, ScalarRat.from_int(0))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, TorusElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def map_coeffs(self, f) -> "TorusElement":
        return TorusElement(self.torus, {m: f(c) for m, c in self.terms.items()})

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: m.ex):
            c = self.terms[m].render()
            if "+" in c or " - " in c:
                c = "(" + c + ")"
            parts.append(c + "*" + m.render() if c != "1" else m.render())
        return " + ".join(parts)

    def __repr__(self):
        return "TorusElement(%s)" % self.render()


def qt_torus(g: CartanData) -> SkewTorus:
    """The torus of $(q,t)$-characters: pairing $\\mathcal{N}$ extended
    biadditively to monomial exponents."""

    def pairing(m1: Mono, m2: Mono) -> int:
        out = 0
        for (i, p), u1 in m1.ex:
            for (j, s), u2 in m2.ex:
                n = npairing(g, i, p, j, s)
                if n:
                    out += u1 * u2 * n
        return out

    return SkewTorus(pairing)
