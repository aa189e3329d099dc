"""Exact linear algebra over Q on dense row-major matrices and sparse vectors.

Matrices are lists of rows.  Multiplication and addition are ring-generic
(entries may be truncated-ring elements); elimination is over Q only.
"""

from __future__ import annotations

from fractions import Fraction


def zeros(rows: int, cols: int) -> list[list]:
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n: int) -> list[list]:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def shape(a) -> tuple[int, int]:
    return len(a), (len(a[0]) if a else 0)


def mat_mul(a, b, inner: int | None = None) -> list[list]:
    # inner is needed when a has zero rows and b has zero columns
    rows = len(a)
    k = len(b) if inner is None else inner
    cols = len(b[0]) if b else 0
    out = zeros(rows, cols)
    for i in range(rows):
        row = a[i]
        acc = out[i]
        for j in range(k):
            x = row[j]
            if x == 0:
                continue
            brow = b[j]
            for c in range(cols):
                y = brow[c]
                if y != 0:
                    acc[c] = acc[c] + x * y
    return out


def mat_add(a, b) -> list[list]:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c) -> list[list]:
    return [[c * x for x in row] for row in a]


def is_zero(a) -> bool:
    return all(x == 0 for row in a for x in row)


def transpose(a, cols: int | None = None) -> list[list]:
    if not a:
        return [[] for _ in range(cols or 0)]
    return [list(col) for col in zip(*a)]


def rref(a) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (matrix, pivot columns)."""
    m = [[Fraction(x) for x in row] for row in a]
    rows, cols = shape(m)
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a) -> int:
    return len(rref(a)[1])


def nullspace(a, cols: int | None = None) -> list[list[Fraction]]:
    """Basis of {x : a x = 0}; one vector per free column."""
    n = shape(a)[1] if a else (cols or 0)
    if not a:
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    r, pivots = rref(a)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -r[i][f]
        basis.append(v)
    return basis


def column_space(a) -> list[list[Fraction]]:
    """Basis of the column span, taken from the pivot columns of ``a``."""
    if not a:
        return []
    _, pivots = rref(a)
    return [[Fraction(row[c]) for row in a] for c in pivots]


def solve(a, b, cols: int | None = None) -> list[Fraction] | None:
    """One solution of a x = b (free variables set to 0), or None."""
    n = shape(a)[1] if a else (cols or 0)
    if not a:
        return [Fraction(0)] * n if all(x == 0 for x in b) else None
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    r, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for i, p in enumerate(pivots):
        x[p] = r[i][n]
    return x


def span_rank(vectors, dim: int) -> int:
    if not vectors:
        return 0
    return rank([list(v) for v in vectors]) if dim else 0


class SparseSpan:
    """Incrementally built span of sparse vectors (dict key -> Fraction).

    Keeps a fully reduced echelon basis so that membership is a single
    reduction pass.
    """

    def __init__(self, key=None):
        self._rows: dict = {}  # pivot key -> reduced row
        self._key = key

    def __len__(self):
        return len(self._rows)

    def basis(self) -> list[dict]:
        return [dict(r) for _, r in sorted(self._rows.items(),
                                             key=lambda kv: self._sort(kv[0]))]

    def _sort(self, k):
        return self._key(k) if self._key else k

    def reduce(self, vec: dict) -> dict:
        v = {k: Fraction(c) for k, c in vec.items() if c != 0}
        for piv, row in self._rows.items():
            c = v.get(piv)
            if c:
                for k, x in row.items():
                    y = v.get(k, 0) - c * x
                    if y:
                        v[k] = y
                    else:
                        v.pop(k, None)
        return v

    def add(self, vec: dict) -> bool:
        v = self.reduce(vec)
        if not v:
            return False
        piv = min(v, key=self._sort)
        inv = 1 / v[piv]
        v = {k: x * inv for k, x in v.items()}
        for p, row in self._rows.items():
            c = row.get(piv)
            if c:
                for k, x in v.items():
                    y = row.get(k, 0) - c * x
                    if y:
                        row[k] = y
                    else:
                        row.pop(k, None)
        self._rows[piv] = v
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)
