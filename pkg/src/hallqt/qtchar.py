"""$(q,t)$-characters: deformed fundamental characters, standard and
simple bases of the quantum torus.

The fundamental character is produced by the monomial-expansion closure:
starting from the highest weight, every monomial whose restriction to a
direction $i$ is dominant is expanded by the corresponding rank-one
character, and the result must close up.  Only the multiplicity-free case
is implemented, where every coefficient in the normalized basis
$c(m)$ equals one; anything that would need a genuine multiplicity is a
hard error rather than a silent wrong answer.

Standard elements multiply the deformed fundamentals with spectral
parameters ascending and renormalize the top coefficient to one; the
simple elements come out of the usual bar-invariance peeling, with
corrections in $t\\,\\mathbb{Z}[t]$ subtracted until the element is
bar-symmetric.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .cartan import CartanData
from .qcartan import (Mono, TorusElement, a_monomial, kr_monomial,
                      nakajima_leq, qt_torus)
from .scalars import ScalarRat

EXPANSION_BUDGET = 500


def _i_part(m: Mono, i: int) -> dict[int, int]:
    return {p: e for (j, p), e in m.ex if j == i}


def _string_char(p: int, length: int) -> list[list[int]]:
    """Rank-one segment character: the $j$-th term drops the top $j$
    variables by one step; returned as lists of step positions."""
    return [[p + 2 * (length - 1 - t) + 1 for t in range(j)]
            for j in range(length + 1)]


def _sl2_expansions(part: dict[int, int]) -> list[list[int]]:
    """All step-position multisets of the rank-one simple character with
    the given dominant restriction.

    The restriction must split into segments separated by gaps of at least
    four, where the character is the product of segment characters; closer
    segments would interact and need multiplicities.
    """
    ps = sorted(part)
    assert all(part[p] == 1 for p in ps), "multiplicity in a restriction"
    segments: list[tuple[int, int]] = []
    for p in ps:
        if segments and p == segments[-1][0] + 2 * segments[-1][1]:
            segments[-1] = (segments[-1][0], segments[-1][1] + 1)
        elif segments and p < segments[-1][0] + 2 * segments[-1][1] + 4:
            raise NotImplementedError(
                "segments in special position: %s (multiplicity-free closure only)" % ps)
        else:
            segments.append((p, 1))
    outs: list[list[int]] = [[]]
    for p, length in segments:
        outs = [acc + steps for acc in outs for steps in _string_char(p, length)]
    return outs


@lru_cache(maxsize=None)
def fund_support(g: CartanData, i: int, p: int) -> tuple[Mono, ...]:
    """Monomials of the fundamental character with highest weight
    $Y_{i,p}$, all carrying coefficient one."""
    top = Mono.y(i, p)
    support = {top}
    frontier = [top]
    while frontier:
        m = frontier.pop()
        for j in g.vertices:
            part = _i_part(m, j)
            if not part or any(e < 0 for e in part.values()):
                continue
            for steps in _sl2_expansions(part):
                new = m
                for s in steps:
                    new = new * a_monomial(g, j, s).inverse()
                if new not in support:
                    support.add(new)
                    frontier.append(new)
        if len(support) > EXPANSION_BUDGET:
            raise RuntimeError("character expansion exceeded %d monomials"
                               % EXPANSION_BUDGET)
    return tuple(sorted(support, key=lambda m: m.ex))


@lru_cache(maxsize=None)
def fund_tchar(g: CartanData, i: int, p: int) -> TorusElement:
    """The deformed fundamental character: unit coefficients on the
    normalized basis over the whole support."""
    T = qt_torus(g)
    out = T.zero()
    for m in fund_support(g, i, p):
        out = out + T.comm(m)
    return out


def _top_coeff(elem: TorusElement, top: Mono) -> ScalarRat:
    c = elem.coeff(top)
    assert c, "expected the highest monomial to survive"
    return c


@lru_cache(maxsize=None)
def standard_tchar(g: CartanData, mono: Mono) -> TorusElement:
    """The standard element: deformed fundamentals multiplied with spectral
    parameter ascending, top coefficient renormalized to one."""
    assert mono.dominant, mono
    T = qt_torus(g)
    out = T.one()
    for (i, p), u in sorted(mono.ex, key=lambda t: (t[0][1], t[0][0])):
        f = fund_tchar(g, i, p)
        for _ in range(u):
            out = out * f
    c = _top_coeff(out, mono)
    return out * c.inv()


def _bar_split(c: ScalarRat) -> ScalarRat:
    """Write a bar-antisymmetric Laurent polynomial as $a - \\bar a$ with
    $a \\in t\\,\\mathbb{Z}[t]$ and return $a$."""
    d = c.as_laurent_dict()
    pos = {k: v for k, v in d.items() if k > 0}
    a = ScalarRat.from_int(0)
    for k, v in pos.items():
        a = a + ScalarRat.from_fraction(v) * ScalarRat.w_power(k)
    assert a - a.bar() == c, "coefficient is not bar-antisymmetric"
    return a


@lru_cache(maxsize=None)
def simple_in_standard(g: CartanData, mono: Mono) -> tuple[tuple[Mono, ScalarRat], ...]:
    """Expansion coefficients of the simple element on the standard basis:
    pairs $(m', \\beta_{m'})$ with $\\beta_{mono} = 1$ and all other
    $\\beta \\in t\\,\\mathbb{Z}[t]$ up to sign."""
    L = standard_tchar(g, mono)
    beta: dict[Mono, ScalarRat] = {mono: ScalarRat.from_int(1)}
    guard = 0
    while True:
        D = L - L.bar()
        if D.is_zero:
            items = sorted(beta.items(), key=lambda t: t[0].ex)
            return tuple((m, c) for m, c in items if c)
        guard += 1
        assert guard < 1000, "bar-correction loop ran away"
        # peel a maximal offending monomial; it must be dominant
        cands = list(D.terms)
        mx = cands[0]
        for m in cands[1:]:
            if nakajima_leq(g, mx, m):
                mx = m
        assert all(not nakajima_leq(g, mx, m) or m == mx for m in cands), \
            "peeled monomial is not maximal"
        assert mx.dominant, "maximal correction monomial is not dominant: %r" % (mx,)
        assert mx != mono
        a = _bar_split(D.coeff(mx))
        L = L - a * standard_tchar(g, mx)
        beta[mx] = beta.get(mx, ScalarRat.from_int(0)) - a


def simple_tchar(g: CartanData, mono: Mono) -> TorusElement:
    """The simple element: the unique bar-invariant member of
    ``standard + lower-standard corrections`` with corrections in
    $t\\,\\mathbb{Z}[t]$."""
    T = qt_torus(g)
    out = T.zero()
    for m, b in simple_in_standard(g, mono):
        out = out + b * standard_tchar(g, m)
    return out


def eval_t1(elem: TorusElement) -> dict[Mono, Fraction]:
    """Specialize $t \\to 1$; the result is an ordinary commutative
    character with rational (integer, in practice) coefficients."""
    out: dict[Mono, Fraction] = {}
    for m, c in elem.terms.items():
        v = c.evaluate(Fraction(1))
        if v:
            out[m] = v
    return out


def kr_tchar(g: CartanData, i: int, p: int, k: int) -> TorusElement:
    """The simple element on a Kirillov-Reshetikhin highest weight."""
    return simple_tchar(g, kr_monomial(i, p, k))


def tsystem_exponents(g: CartanData, i: int, k: int, p: int) -> tuple[Fraction, Fraction]:
    """Solve the quantum torus recurrence on Kirillov-Reshetikhin elements,
    ``L(i,k,p) L(i,k,p+2) = t^a L(i,k+1,p) L(i,k-1,p+2) +
    t^b prod_j L(j,k,p+1)``, for the half-integer exponents (a, b);
    raises if no exact solution exists."""
    lhs = kr_tchar(g, i, p, k) * kr_tchar(g, i, p + 2, k)
    r1 = kr_tchar(g, i, p, k + 1) * kr_tchar(g, i, p + 2, k - 1)
    r2 = qt_torus(g).one()
    for j in sorted(g.neighbors[i]):
        r2 = r2 * kr_tchar(g, j, p + 1, k)

    monos = set(lhs.terms) | set(r1.terms) | set(r2.terms)
    zero = ScalarRat.from_int(0)
    rows = [(r1.terms.get(m, zero), r2.terms.get(m, zero), lhs.terms.get(m, zero))
            for m in monos]
    piv1 = next(r for r in rows if r[0])
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
            raise ValueError("torus recurrence has no exact solution")
    return x.half_power(), y.half_power()
