"""Small exact linear algebra helpers over Z and Q (internal plumbing)."""

from __future__ import annotations

from fractions import Fraction

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    return [
        [sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
        for i in range(rows)
    ]


class _Worksheet:
    """Integer matrix with row/column operations mirrored into U and V,
    maintaining U * original * V = m throughout."""

    def __init__(self, mat: Matrix):
        self.m = [row[:] for row in mat]
        self.rows = len(self.m)
        self.cols = len(self.m[0])
        self.U = identity(self.rows)
        self.V = identity(self.cols)

    def swap_rows(self, i, j):
        self.m[i], self.m[j] = self.m[j], self.m[i]
        self.U[i], self.U[j] = self.U[j], self.U[i]

    def swap_cols(self, i, j):
        for row in self.m:
            row[i], row[j] = row[j], row[i]
        for row in self.V:
            row[i], row[j] = row[j], row[i]

    def add_row(self, src, dst, c):  # row_dst += c * row_src
        self.m[dst] = [x + c * y for x, y in zip(self.m[dst], self.m[src])]
        self.U[dst] = [x + c * y for x, y in zip(self.U[dst], self.U[src])]

    def add_col(self, src, dst, c):  # col_dst += c * col_src
        for row in self.m:
            row[dst] += c * row[src]
        for row in self.V:
            row[dst] += c * row[src]

    def negate_row(self, i):
        self.m[i] = [-x for x in self.m[i]]
        self.U[i] = [-x for x in self.U[i]]


def smith_normal_form(mat: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Return (U, D, V), U and V unimodular, U*mat*V = D diagonal with
    d_1 | d_2 | ... and nonnegative diagonal."""
    w = _Worksheet(mat)
    m = w.m
    size = min(w.rows, w.cols)

    for t in range(size):
        while True:
            pivot = None
            for i in range(t, w.rows):
                for j in range(t, w.cols):
                    if m[i][j] and (pivot is None or abs(m[i][j]) < abs(m[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break  # remaining block is zero
            w.swap_rows(t, pivot[0])
            w.swap_cols(t, pivot[1])
            p = m[t][t]
            bad = False
            for i in range(t + 1, w.rows):
                if m[i][t] % p:
                    w.add_row(t, i, -(m[i][t] // p))
                    bad = True  # leaves a smaller nonzero remainder
            for j in range(t + 1, w.cols):
                if m[t][j] % p:
                    w.add_col(t, j, -(m[t][j] // p))
                    bad = True
            if bad:
                continue
            for i in range(t + 1, w.rows):
                if m[i][t]:
                    w.add_row(t, i, -(m[i][t] // p))
            for j in range(t + 1, w.cols):
                if m[t][j]:
                    w.add_col(t, j, -(m[t][j] // p))
            break
        if m[t][t] < 0:
            w.negate_row(t)

    # divisibility chain: fix adjacent violations until stable
    changed = True
    while changed:
        changed = False
        for t in range(size - 1):
            a, b = m[t][t], m[t + 1][t + 1]
            if a and b and b % a:
                changed = True
                w.add_col(t + 1, t, 1)  # block becomes [[a, 0], [b, b]]
                while m[t + 1][t]:
                    q = m[t][t] // m[t + 1][t]
                    w.add_row(t + 1, t, -q)
                    w.swap_rows(t, t + 1)
                g = m[t][t]
                # block entries are Z-combinations of a and b, so g divides them
                if m[t][t + 1]:
                    w.add_col(t, t + 1, -(m[t][t + 1] // g))
                if m[t][t] < 0:
                    w.negate_row(t)
                if m[t + 1][t + 1] < 0:
                    w.negate_row(t + 1)
    return w.U, m, w.V


def rational_inverse(mat) -> list[list[Fraction]]:
    """Inverse of a nonsingular square matrix, exactly over Q."""
    n = len(mat)
    a = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(mat)
    ]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def inertia(mat) -> tuple[int, int]:
    """Signature (n_plus, n_minus) of a nondegenerate symmetric matrix, by
    exact symmetric reduction (Sylvester's law of inertia)."""
    n = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    pos = neg = 0
    remaining = list(range(n))
    while remaining:
        k = next((i for i in remaining if a[i][i] != 0), None)
        if k is None:
            # all remaining diagonal entries vanish; e_i += e_j makes
            # the (i,i) entry 2*a[i][j] != 0
            i = remaining[0]
            j = next(j for j in remaining if a[i][j] != 0)
            for t in range(n):
                a[i][t] += a[j][t]
            for t in range(n):
                a[t][i] += a[t][j]
            k = i
        if a[k][k] > 0:
            pos += 1
        else:
            neg += 1
        remaining.remove(k)
        for i in remaining:
            if a[i][k]:
                f = a[i][k] / a[k][k]
                for t in range(n):
                    a[i][t] -= f * a[k][t]
                for t in range(n):
                    a[t][i] -= f * a[t][k]
    return pos, neg


def det(mat) -> Fraction:
    """Determinant by exact Gaussian elimination."""
    n = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    sign = 1
    out = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        out *= a[col][col]
        inv = Fraction(1) / a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return out * sign
