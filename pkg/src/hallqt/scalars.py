"""Exact coefficient arithmetic for the quantum parameter.

Every algebra in this package is defined over $\\mathbb{Q}(v^{1/2})$, with
$v$ a formal square root of the field parameter ($v^2 = q$ under numeric
specialization; the character-side deformation variable $t$ also lands on
$v$).  To keep all exponents integral we work internally in the variable
$w = v^{1/2}$, so $v = w^2$, $q = w^4$, and a monomial $v^{n/2}$ is stored
as the integer exponent $n$.

``ScalarRat`` is a reduced fraction of Laurent polynomials in $w$ with
rational coefficients: a power offset times a polynomial with nonzero
constant term, over a monic polynomial with nonzero constant term, with the
polynomial gcd divided out.  Equality is therefore structural.

``RootExt`` is the number field $\\mathbb{Q}[x]/(x^4 - q)$ used when a
scalar has to be evaluated at $w = q^{1/4}$ for an actual prime $q$; for
$q = 2, 3$ the polynomial $x^4 - q$ is irreducible (Eisenstein), so this is
a field and division is exact.
"""

from __future__ import annotations

from fractions import Fraction

# ---------------------------------------------------------------------------
# polynomial helpers on coefficient tuples (index = exponent, over Q)

ZERO = Fraction(0)
ONE = Fraction(1)


def _trim(c: list[Fraction]) -> tuple[Fraction, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c) if c else (ZERO,)


def _padd(a: tuple[Fraction, ...], b: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else ZERO) + (b[i] if i < len(b) else ZERO)
                  for i in range(n)])


def _pmul(a: tuple[Fraction, ...], b: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    if a == (ZERO,) or b == (ZERO,):
        return (ZERO,)
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _trim(out)


def _pdivmod(a: tuple[Fraction, ...], b: tuple[Fraction, ...]):
    """Euclidean division of polynomials; b must not be zero."""
    assert b != (ZERO,)
    r = list(a)
    qout = [ZERO] * max(1, len(a) - len(b) + 1)
    db, lb = len(b) - 1, b[-1]
    while len(r) - 1 >= db and _trim(list(r)) != (ZERO,):
        if r[-1] == 0:
            r.pop()
            continue
        shift = len(r) - 1 - db
        c = r[-1] / lb
        qout[shift] = c
        for i in range(len(b)):
            r[shift + i] -= c * b[i]
        r.pop()
    return _trim(qout), _trim(r)


def _pgcd(a: tuple[Fraction, ...], b: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    while b != (ZERO,):
        _, rem = _pdivmod(a, b)
        a, b = b, rem
    if a == (ZERO,):
        return (ONE,)
    return tuple(x / a[-1] for x in a)


def _peval(a: tuple[Fraction, ...], x: Fraction) -> Fraction:
    acc = ZERO
    for c in reversed(a):
        acc = acc * x + c
    return acc


class ScalarRat:
    """An element of $\\mathbb{Q}(v^{1/2})$ in reduced normal form.

    value = w^off * num(w) / den(w), where num and den have nonzero constant
    terms (num != 0; for the zero scalar num == (0,) and off == 0), den is
    monic, and gcd(num, den) = 1.
    """

    __slots__ = ("off", "num", "den")

    def __init__(self, off: int, num: tuple[Fraction, ...], den: tuple[Fraction, ...]):
        # normalize: strip powers of w from num/den into the offset
        if num == (ZERO,):
            self.off, self.num, self.den = 0, (ZERO,), (ONE,)
            return
        while num[0] == 0:
            num = num[1:]
            off += 1
        while den[0] == 0:
            den = den[1:]
            off -= 1
        g = _pgcd(num, den)
        if len(g) > 1:
            num, _ = _pdivmod(num, g)
            den, _ = _pdivmod(den, g)
        lc = den[-1]
        if lc != 1:
            num = tuple(x / lc for x in num)
            den = tuple(x / lc for x in den)
        self.off, self.num, self.den = off, num, den

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_fraction(cls, x) -> "ScalarRat":
        return cls(0, (Fraction(x),), (ONE,))

    @classmethod
    def from_int(cls, n: int) -> "ScalarRat":
        return cls.from_fraction(Fraction(n))

    @classmethod
    def w_power(cls, n: int) -> "ScalarRat":
        """$v^{n/2}$ (the exponent counts powers of $w = v^{1/2}$)."""
        return cls(n, (ONE,), (ONE,))

    @classmethod
    def v_power(cls, n: int) -> "ScalarRat":
        return cls.w_power(2 * n)

    # -- predicates --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num == (ZERO,)

    @property
    def is_laurent(self) -> bool:
        return self.den == (ONE,)

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "ScalarRat") -> "ScalarRat":
        if not isinstance(other, ScalarRat):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        off = min(self.off, other.off)
        a = _pmul(self._shifted(self.off - off), other.den)
        b = _pmul(other._shifted(other.off - off), self.den)
        return ScalarRat(off, _padd(a, b), _pmul(self.den, other.den))

    def _shifted(self, k: int) -> tuple[Fraction, ...]:
        return tuple([ZERO] * k) + self.num if k else self.num

    def __neg__(self) -> "ScalarRat":
        return ScalarRat(self.off, tuple(-x for x in self.num), self.den)

    def __sub__(self, other: "ScalarRat") -> "ScalarRat":
        return self + (-other)

    def __mul__(self, other: "ScalarRat") -> "ScalarRat":
        if not isinstance(other, ScalarRat):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ScalarRat.from_int(0)
        return ScalarRat(self.off + other.off,
                         _pmul(self.num, other.num),
                         _pmul(self.den, other.den))

    def inv(self) -> "ScalarRat":
        if self.is_zero:
            raise ZeroDivisionError("inverting the zero scalar")
        return ScalarRat(-self.off, self.den, self.num)

    def __truediv__(self, other: "ScalarRat") -> "ScalarRat":
        return self * other.inv()

    def __pow__(self, n: int) -> "ScalarRat":
        if n < 0:
            return self.inv() ** (-n)
        out = ScalarRat.from_int(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, ScalarRat):
            return NotImplemented
        return (self.off, self.num, self.den) == (other.off, other.num, other.den)

    def __hash__(self) -> int:
        return hash((self.off, self.num, self.den))

    # -- field automorphisms and specializations ---------------------------

    def bar(self) -> "ScalarRat":
        """The bar involution $w \\mapsto w^{-1}$ (so $v \\mapsto v^{-1}$)."""
        if self.is_zero:
            return self
        rn = tuple(reversed(self.num))
        rd = tuple(reversed(self.den))
        off = -(self.off + len(self.num) - 1) + (len(self.den) - 1)
        return ScalarRat(off, rn, rd)

    def evaluate(self, x) -> Fraction:
        """Evaluate at a nonzero rational $w = x$ (e.g. x = 1 for $t = 1$)."""
        x = Fraction(x)
        if x == 0:
            raise ZeroDivisionError("w = 0 is outside the Laurent domain")
        d = _peval(self.den, x)
        if d == 0:
            raise ZeroDivisionError("pole at the requested specialization")
        return x ** self.off * _peval(self.num, x) / d

    def eval_root(self, r: "RootExt") -> "RootExt":
        """Evaluate at $w = r$ in a quartic root extension."""
        num = RootExt.from_fraction(r.q, ZERO)
        for c in reversed(self.num):
            num = num * r + RootExt.from_fraction(r.q, c)
        den = RootExt.from_fraction(r.q, ZERO)
        for c in reversed(self.den):
            den = den * r + RootExt.from_fraction(r.q, c)
        return (r ** self.off) * num / den

    def as_laurent_dict(self) -> dict[int, Fraction]:
        """Exponent-of-w -> coefficient map; only for denominator-free scalars."""
        if not self.is_laurent:
            raise ValueError("scalar is not a Laurent polynomial: %s" % self.render())
        return {self.off + i: c for i, c in enumerate(self.num) if c != 0}

    def half_power(self) -> Fraction:
        """Read off $a$ from a scalar equal to $v^a = w^{2a}$; raises if
        the scalar is not a unit power."""
        d = self.as_laurent_dict()
        if len(d) != 1:
            raise ValueError("not a pure power: %s" % self.render())
        (n, coef), = d.items()
        if coef != 1:
            raise ValueError("not a unit power: %s" % self.render())
        return Fraction(n, 2)

    # -- printing ----------------------------------------------------------

    def render(self) -> str:
        """ASCII form in the variable v, half powers as v^(n/2)."""
        if self.is_zero:
            return "0"
        num = _render_poly(self.off, self.num)
        if self.den == (ONE,):
            return num
        den = _render_poly(0, self.den)
        if " " in num:
            num = "(" + num + ")"
        if " " in den or "*" in den:
            den = "(" + den + ")"
        return num + " / " + den

    def __repr__(self) -> str:
        return "ScalarRat(%s)" % self.render()

    @classmethod
    def parse(cls, s: str) -> "ScalarRat":
        """Parse an ASCII expression in v (and optionally w = v^(1/2), q = v^2)."""
        import sympy

        w = sympy.Symbol("w", positive=True)
        expr = sympy.parse_expr(
            s.replace("^", "**"),
            local_dict={"v": w ** 2, "w": w, "q": w ** 4},
        )
        expr = sympy.together(sympy.expand(sympy.radsimp(expr)))
        n, d = sympy.fraction(expr)
        return cls._from_sympy_poly(n, w) / cls._from_sympy_poly(d, w)

    @classmethod
    def _from_sympy_poly(cls, e, w) -> "ScalarRat":
        """Convert a sympy Laurent polynomial in w, term by term."""
        import sympy

        terms: dict[int, Fraction] = {}
        for term in sympy.Add.make_args(sympy.expand(e)):
            coeff, wpart = term.as_independent(w)
            k = 0
            if wpart != 1:
                base, exp = wpart.as_base_exp()
                if base != w or not exp.is_Integer:
                    raise ValueError("cannot parse term %s" % term)
                k = int(exp)
            c = sympy.Rational(coeff)
            key = k
            terms[key] = terms.get(key, ZERO) + Fraction(c.p, c.q)
        terms = {k: c for k, c in terms.items() if c != 0}
        if not terms:
            return cls.from_int(0)
        off, deg = min(terms), max(terms)
        coeffs = tuple(terms.get(i, ZERO) for i in range(off, deg + 1))
        return cls(off, coeffs, (ONE,))


def _render_poly(off: int, coeffs: tuple[Fraction, ...]) -> str:
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        e = off + i  # power of w; v-power is e/2
        if e == 0:
            mono = ""
        elif e == 2:
            mono = "v"
        elif e % 2 == 0:
            half = e // 2
            mono = "v^%d" % half if half > 0 else "v^(%d)" % half
        else:
            mono = "v^(%d/2)" % e
        if mono == "":
            term = str(c)
        elif c == 1:
            term = mono
        elif c == -1:
            term = "-" + mono
        else:
            cs = str(c)
            if "/" in cs:
                cs = "(%s)" % cs
            term = cs + "*" + mono
        parts.append(term)
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


# ---------------------------------------------------------------------------
# numeric root field Q[x]/(x^4 - q)


class RootExt:
    """$\\mathbb{Q}(q^{1/4})$ as 4-vectors in the basis $1, r, r^2, r^3$."""

    __slots__ = ("q", "c")

    def __init__(self, q: int, c: tuple[Fraction, Fraction, Fraction, Fraction]):
        self.q = q
        self.c = tuple(Fraction(x) for x in c)

    @classmethod
    def from_fraction(cls, q: int, x) -> "RootExt":
        return cls(q, (Fraction(x), ZERO, ZERO, ZERO))

    @classmethod
    def root(cls, q: int) -> "RootExt":
        """The generator $r = q^{1/4}$."""
        return cls(q, (ZERO, ONE, ZERO, ZERO))

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for x in self.c)

    @property
    def is_rational(self) -> bool:
        return all(x == 0 for x in self.c[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("not a rational element: %r" % (self.c,))
        return self.c[0]

    def __bool__(self) -> bool:
        return not self.is_zero

    def __add__(self, o: "RootExt") -> "RootExt":
        assert self.q == o.q
        return RootExt(self.q, tuple(a + b for a, b in zip(self.c, o.c)))

    def __neg__(self) -> "RootExt":
        return RootExt(self.q, tuple(-a for a in self.c))

    def __sub__(self, o: "RootExt") -> "RootExt":
        return self + (-o)

    def __mul__(self, o: "RootExt") -> "RootExt":
        assert self.q == o.q
        out = [ZERO] * 4
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        k = i + j
                        if k < 4:
                            out[k] += a * b
                        else:
                            out[k - 4] += a * b * self.q
        return RootExt(self.q, tuple(out))

    def inv(self) -> "RootExt":
        """Inverse by solving (mult-by-self) x = 1 over Q."""
        if self.is_zero:
            raise ZeroDivisionError
        # column k of the multiplication matrix is self * r^k
        cols = []
        acc = self
        r = RootExt.root(self.q)
        for _ in range(4):
            cols.append(acc.c)
            acc = acc * r
        m = [[cols[k][i] for k in range(4)] for i in range(4)]
        rhs = [ONE, ZERO, ZERO, ZERO]
        sol = _solve4(m, rhs)
        return RootExt(self.q, tuple(sol))

    def __truediv__(self, o: "RootExt") -> "RootExt":
        return self * o.inv()

    def __pow__(self, n: int) -> "RootExt":
        if n < 0:
            return self.inv() ** (-n)
        out = RootExt.from_fraction(self.q, ONE)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, o) -> bool:
        if not isinstance(o, RootExt):
            return NotImplemented
        return self.q == o.q and self.c == o.c

    def __hash__(self) -> int:
        return hash((self.q, self.c))

    def __repr__(self) -> str:
        return "RootExt(q=%d, %s)" % (self.q, "+".join(
            "%s*r^%d" % (c, i) for i, c in enumerate(self.c) if c != 0) or "0")


def _solve4(m: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gaussian elimination for a 4x4 rational system with unique solution."""
    n = 4
    a = [row[:] + [rhs[i]] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]
