"""Simply laced Cartan data, height functions, and box combinatorics.

The combinatorial layer everything else sits on: an ADE diagram with a
height function $\\varepsilon$ (adjacent values differ by one), the
orientation it induces (arrows point from higher to lower value), the
sink-ordered reduced word for $w_0$ adapted to it, and the two-sided
admissible sequence $(i_k, p_k)_{k \\in \\mathbb{Z}}$ built from that word.
On top of the sequence live the interval boxes $[a,b]$ with matching end
colors and the chains of boxes encoded as a root singleton plus a word in
$\\{L, R\\}$.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


_POS_ROOTS = {"A": lambda n: n * (n + 1) // 2,
              "D": lambda n: n * (n - 1),
              "E": {6: 36, 7: 63, 8: 120}}
_COXETER = {"A": lambda n: n + 1,
            "D": lambda n: 2 * n - 2,
            "E": {6: 12, 7: 18, 8: 30}}


class CartanData:
    """An ADE Dynkin diagram in Bourbaki numbering (rank at most 8)."""

    def __init__(self, letter: str, rank: int):
        if letter not in ("A", "D", "E") or not 1 <= rank <= 8:
            raise ValueError("unsupported type %s%d" % (letter, rank))
        if letter == "D" and rank < 3:
            raise ValueError("D requires rank >= 3")
        if letter == "E" and rank not in (6, 7, 8):
            raise ValueError("E requires rank 6, 7 or 8")
        self.letter, self.rank = letter, rank
        self.vertices = list(range(1, rank + 1))
        self.edges = self._edges()
        self.neighbors = {i: sorted({j for a, b in self.edges for j in (a, b)
                                     if i in (a, b) and j != i})
                          for i in self.vertices}
        if letter == "E":
            self.num_pos_roots = _POS_ROOTS["E"][rank]
            self.coxeter_number = _COXETER["E"][rank]
        else:
            self.num_pos_roots = _POS_ROOTS[letter](rank)
            self.coxeter_number = _COXETER[letter](rank)

    def _edges(self) -> list[tuple[int, int]]:
        n = self.rank
        if self.letter == "A":
            return [(i, i + 1) for i in range(1, n)]
        if self.letter == "D":
            return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
        # Bourbaki E_n: a chain 1-3-4-5-6(-7)(-8) with 2 attached to 4
        chain = [(1, 3), (3, 4), (4, 5), (5, 6)]
        if n >= 7:
            chain.append((6, 7))
        if n == 8:
            chain.append((7, 8))
        return chain + [(2, 4)]

    def cartan_entry(self, i: int, j: int) -> int:
        if i == j:
            return 2
        return -1 if j in self.neighbors[i] else 0

    def bilinear(self, d: dict[int, int], e: dict[int, int]) -> int:
        """Symmetrized Cartan pairing of two root-lattice elements."""
        out = 0
        for i, x in d.items():
            if x:
                out += 2 * x * e.get(i, 0)
                for j in self.neighbors[i]:
                    out -= x * e.get(j, 0)
        return out

    def simple_root(self, i: int) -> dict[int, int]:
        return {i: 1}

    def reflect_root(self, i: int, d: dict[int, int]) -> dict[int, int]:
        """$s_i(d) = d - \\langle \\alpha_i^\\vee, d\\rangle \\alpha_i$."""
        pairing = 2 * d.get(i, 0) - sum(d.get(j, 0) for j in self.neighbors[i])
        out = dict(d)
        out[i] = out.get(i, 0) - pairing
        if out[i] == 0:
            del out[i]
        return out

    @lru_cache(maxsize=None)
    def _star_map(self) -> dict[int, int]:
        """The diagram involution $i^*$ with $w_0(\\alpha_i) = -\\alpha_{i^*}$.

        Classical tables; ``check_star_against_w0`` re-derives them from an
        adapted word (the word construction needs the quota
        $(h + \\varepsilon_{i^*} - \\varepsilon_i)/2$, so the table has to
        come first).
        """
        n = self.rank
        if self.letter == "A":
            return {i: n + 1 - i for i in self.vertices}
        if self.letter == "D":
            if n % 2 == 0:
                return {i: i for i in self.vertices}
            out = {i: i for i in self.vertices}
            out[n - 1], out[n] = n, n - 1
            return out
        if n == 6:
            return {1: 6, 2: 2, 3: 5, 4: 4, 5: 3, 6: 1}
        return {i: i for i in self.vertices}

    def star(self, i: int) -> int:
        return self._star_map()[i]

    @lru_cache(maxsize=None)
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        """All positive roots as coefficient tuples, sorted by height."""
        n = self.rank
        found = {tuple(1 if j == i else 0 for j in range(1, n + 1))
                 for i in self.vertices}
        frontier = set(found)
        while frontier:
            nxt = set()
            for t in frontier:
                d = {i: t[i - 1] for i in self.vertices if t[i - 1]}
                for i in self.vertices:
                    r = self.reflect_root(i, d)
                    if all(v > 0 for v in r.values()):
                        rt = tuple(r.get(j, 0) for j in range(1, n + 1))
                        if rt not in found:
                            found.add(rt)
                            nxt.add(rt)
            frontier = nxt
        out = tuple(sorted(found, key=lambda t: (sum(t), t)))
        assert len(out) == self.num_pos_roots
        return out

    def check_star_against_w0(self, eps: dict[int, int] | None = None) -> None:
        """Assert $w_0(\\alpha_i) = -\\alpha_{i^*}$ along an adapted word."""
        word = adapted_word(self, eps or default_height(self))
        for i in self.vertices:
            d = self.simple_root(i)
            for s in word:
                d = self.reflect_root(s, d)
            assert d == {self.star(i): -1}, (i, d)

    def __hash__(self):
        return hash((self.letter, self.rank))

    def __eq__(self, other):
        return isinstance(other, CartanData) and \
            (self.letter, self.rank) == (other.letter, other.rank)

    def __repr__(self):
        return "CartanData(%s%d)" % (self.letter, self.rank)


# ---------------------------------------------------------------------------
# height functions and adapted words


def check_height(g: CartanData, eps: dict[int, int]) -> None:
    if sorted(eps) != g.vertices:
        raise ValueError("height function must be defined on all vertices")
    for a, b in g.edges:
        if abs(eps[a] - eps[b]) != 1:
            raise ValueError("height must differ by 1 on edge (%d,%d)" % (a, b))


def default_height(g: CartanData) -> dict[int, int]:
    """Graph distance from vertex 1 (a valid height on any tree)."""
    eps = {1: 0}
    frontier = [1]
    while frontier:
        nxt = []
        for i in frontier:
            for j in g.neighbors[i]:
                if j not in eps:
                    eps[j] = eps[i] + 1
                    nxt.append(j)
        frontier = nxt
    return eps


def orientation(g: CartanData, eps: dict[int, int]) -> list[tuple[int, int]]:
    """Arrows of the quiver $Q_\\varepsilon$: $i \\to j$ when
    $\\varepsilon_i > \\varepsilon_j$ on the edge $\\{i,j\\}$."""
    check_height(g, eps)
    return [(a, b) if eps[a] > eps[b] else (b, a) for a, b in g.edges]


def sinks(g: CartanData, eps: dict[int, int]) -> list[int]:
    return [i for i in g.vertices
            if all(eps[i] < eps[j] for j in g.neighbors[i])]


def reflect_height(g: CartanData, i: int, eps: dict[int, int],
                   inverse: bool = False) -> dict[int, int]:
    """$(s_i \\varepsilon)_j = \\varepsilon_j + 2\\delta_{ij}$ at a sink
    (the inverse lowers a source by 2)."""
    if not inverse:
        if i not in sinks(g, eps):
            raise ValueError("vertex %d is not a sink" % i)
        return {**eps, i: eps[i] + 2}
    if not all(eps[i] > eps[j] for j in g.neighbors[i]):
        raise ValueError("vertex %d is not a source" % i)
    return {**eps, i: eps[i] - 2}


def adapted_word(g: CartanData, eps: dict[int, int]) -> list[int]:
    """A deterministic reduced word for $w_0$ adapted to eps.

    Vertex $i$ must be reflected exactly
    $m_i = (h + \\varepsilon_{i^*} - \\varepsilon_i)/2$ times in total
    (its height travels from $\\varepsilon_i$ to $\\varepsilon_{i^*} + h$ in
    steps of 2).  Among the vertices with remaining quota we always reflect
    the one of smallest current height (then smallest index); that vertex is
    automatically a sink, because exhausted neighbors sit strictly higher
    and adjacent heights never tie.  A plain sink-first greedy without the
    quota is wrong: on linear-height A4 it produces a non-reduced word.
    """
    check_height(g, eps)
    h = g.coxeter_number
    ceiling = {i: eps[g.star(i)] + h for i in g.vertices}
    word = []
    cur = dict(eps)
    for _ in range(g.num_pos_roots):
        i = min((i for i in g.vertices if cur[i] < ceiling[i]),
                key=lambda i: (cur[i], i))
        word.append(i)
        cur = reflect_height(g, i, cur)
    for i in g.vertices:
        assert cur[i] == ceiling[i], "adapted word invariant failed"
    return word


# ---------------------------------------------------------------------------
# the two-sided admissible sequence


class AdmissibleSeq:
    """The sequence $(i_k, p_k)_{k \\in \\mathbb{Z}}$ attached to a height
    function and its adapted word.

    For $1 \\le k \\le l$ the color $i_k$ is the adapted word and
    $p_k = (s_{i_{k-1}} \\cdots s_{i_1}\\varepsilon)_{i_k}$; the rest of the
    sequence is determined by $i_{k+l} = (i_k)^*$ and $p_{k+l} = p_k + h$.
    The equivalent direct formula at $k \\le 0$ applies inverse reflections
    $(s_{i_0}^{-1}, s_{i_{-1}}^{-1}, \\dots)$ starting from $s_{i_0}^{-1}$;
    ``p_direct_nonpos`` implements it for cross-checking.
    """

    def __init__(self, g: CartanData, eps: dict[int, int]):
        check_height(g, eps)
        self.g = g
        self.eps = dict(eps)
        self.word = adapted_word(g, eps)
        self.l = len(self.word)
        self.h = g.coxeter_number
        self._base_p = []
        cur = dict(eps)
        for i in self.word:
            self._base_p.append(cur[i])
            cur = reflect_height(g, i, cur)

    def i(self, k: int) -> int:
        m, r = divmod(k - 1, self.l)
        idx = self.word[r]
        if m % 2:
            idx = self.g.star(idx)
        return idx

    def p(self, k: int) -> int:
        m, r = divmod(k - 1, self.l)
        return self._base_p[r] + m * self.h

    def p_direct_nonpos(self, k: int) -> int:
        """$p_k$ for $k \\le 0$ from the inverse-reflection formula."""
        assert k <= 0
        cur = dict(self.eps)
        for j in range(0, k - 1, -1):
            cur = reflect_height(self.g, self.i(j), cur, inverse=True)
        return cur[self.i(k)]

    def parity(self, i: int) -> int:
        """$\\tilde\\varepsilon_i$: the residue of $p_k$ on color $i$."""
        return self.eps[i] % 2

    # -- boxes -------------------------------------------------------------

    def box(self, a: int, b: int) -> "IBox":
        if a > b or self.i(a) != self.i(b):
            raise ValueError("[%d,%d] is not a box here" % (a, b))
        return IBox(a, b, self.i(a))

    def box_closed_open(self, a: int, b: int) -> "IBox":
        """$[a, b\\}$: shrink the right end down to the color of $a$."""
        k = b
        while self.i(k) != self.i(a):
            k -= 1
            if k < a:
                raise ValueError("empty box")
        return IBox(a, k, self.i(a))

    def box_open_closed(self, a: int, b: int) -> "IBox":
        """$\\{a, b]$: shrink the left end up to the color of $b$."""
        k = a
        while self.i(k) != self.i(b):
            k += 1
            if k > b:
                raise ValueError("empty box")
        return IBox(k, b, self.i(b))

    def occurrences(self, box: "IBox") -> list[int]:
        return [k for k in range(box.a, box.b + 1) if self.i(k) == box.color]


@dataclass(frozen=True, order=True)
class IBox:
    """An interval $[a,b]$ in the sequence with $i_a = i_b$ (= color)."""

    a: int
    b: int
    color: int

    def __str__(self):
        if self.a == self.b:
            return "[%d]_%d" % (self.a, self.color)
        return "[%d,%d]_%d" % (self.a, self.b, self.color)


class Chain:
    """A chain of boxes: a root singleton and a word in L/R.

    The envelope after $k$ letters is the interval the first $k+1$ boxes
    tile; letter L extends it one step left and contributes the box
    $[a-1, b\\}$, letter R extends right and contributes $\\{a, b+1]$.
    """

    def __init__(self, seq: AdmissibleSeq, root: int, letters: str = ""):
        if any(c not in "LR" for c in letters):
            raise ValueError("letters must be L or R")
        self.seq = seq
        self.root = root
        self.letters = letters

    @classmethod
    def canonical(cls, seq: AdmissibleSeq, a: int, b: int) -> "Chain":
        """$C_-^{[a,b]}$: root at $b$, then all L."""
        if a > b:
            raise ValueError("empty window")
        return cls(seq, b, "L" * (b - a))

    def __len__(self) -> int:
        return len(self.letters) + 1

    def envelope(self, k: int) -> tuple[int, int]:
        """The interval covered by the first k boxes (1-based k)."""
        if not 1 <= k <= len(self):
            raise IndexError(k)
        a = b = self.root
        for c in self.letters[:k - 1]:
            if c == "L":
                a -= 1
            else:
                b += 1
        return a, b

    def box(self, k: int) -> IBox:
        if k == 1:
            return self.seq.box(self.root, self.root)
        a, b = self.envelope(k)
        if self.letters[k - 2] == "L":
            return self.seq.box_closed_open(a, b)
        return self.seq.box_open_closed(a, b)

    def boxes(self) -> list[IBox]:
        return [self.box(k) for k in range(1, len(self) + 1)]

    def __repr__(self):
        return "Chain(root=%d, letters=%r)" % (self.root, self.letters)
