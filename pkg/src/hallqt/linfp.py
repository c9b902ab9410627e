"""Dense linear algebra over a prime field.

Matrices are plain lists of row lists of ints in $[0, p)$; everything here
is small (dimensions in the tens), so Gaussian elimination with no pivoting
strategy beyond "first nonzero" is plenty.  Kept separate so the counting
modules never touch floating point by accident.
"""

from __future__ import annotations


def zeros(m: int, n: int) -> list[list[int]]:
    return [[0] * n for _ in range(m)]


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(a: list[list[int]]) -> list[list[int]]:
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def matmul(a: list[list[int]], b: list[list[int]], p: int) -> list[list[int]]:
    if not a or not b:
        return [[0] * (len(b[0]) if b else 0) for _ in a]
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) % p for col in bt] for row in a]


def matvec(a: list[list[int]], v: list[int], p: int) -> list[int]:
    return [sum(x * y for x, y in zip(row, v)) % p for row in a]


def rref(a: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form and the pivot column list."""
    m = [row[:] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] % p), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: list[list[int]], p: int) -> int:
    return len(rref(a, p)[1])


def nullspace(a: list[list[int]], p: int) -> list[list[int]]:
    """A basis of the right kernel, one vector per free column."""
    if not a:
        return []
    cols = len(a[0])
    r, pivots = rref(a, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * cols
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = (-r[i][f]) % p
        basis.append(v)
    return basis


def solve(a: list[list[int]], b: list[int], p: int) -> list[int] | None:
    """One solution of $Ax = b$, or None when inconsistent."""
    if not a:
        return [] if not any(x % p for x in b) else None
    cols = len(a[0])
    aug = [row[:] + [bv % p] for row, bv in zip(a, b)]
    r, pivots = rref(aug, p)
    if cols in pivots:
        return None
    x = [0] * cols
    for i, c in enumerate(pivots):
        x[c] = r[i][cols]
    return x


def inverse(a: list[list[int]], p: int) -> list[list[int]]:
    n = len(a)
    aug = [row[:] + ident_row[:] for row, ident_row in zip(a, identity(n))]
    r, pivots = rref(aug, p)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular mod %d" % p)
    return [row[n:] for row in r]
