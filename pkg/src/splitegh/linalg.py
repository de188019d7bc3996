"""Small dense exact linear algebra (determinants, solves, inverses)."""
from __future__ import annotations

from .errors import ArgumentError
from .field import QQ, Field


def as_matrix(rows, field: Field = QQ) -> list[list]:
    m = [[field(x) for x in row] for row in rows]
    if any(len(r) != len(m) for r in m):
        raise ArgumentError("matrix must be square")
    return m


def determinant(rows, field: Field = QQ):
    a = [list(r) for r in as_matrix(rows, field)]
    n = len(a)
    det = field.one
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return field.zero
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        p = a[col][col]
        det = det * p
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] / p
                row_c = a[col]
                row_r = a[r]
                for k in range(col, n):
                    row_r[k] = row_r[k] - f * row_c[k]
    return det


def solve(rows, rhs, field: Field = QQ) -> list:
    """Solve ``A x = rhs`` for square nonsingular ``A``."""
    a = as_matrix(rows, field)
    n = len(a)
    aug = [a[i] + [field(rhs[i])] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ArgumentError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def inverse(rows, field: Field = QQ) -> list[list]:
    a = as_matrix(rows, field)
    n = len(a)
    cols = [solve(a, [field.one if i == j else field.zero for i in range(n)], field)
            for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def principal_submatrix(rows, indices) -> list[list]:
    """Rows and columns ``indices`` (0-based)."""
    return [[rows[i][j] for j in indices] for i in indices]
