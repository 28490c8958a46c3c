"""Exact Gaussian elimination over the rationals for small matrices."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def as_rows(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def invert(rows: Sequence[Sequence]) -> Matrix:
    """Inverse via Gauss-Jordan elimination; raises ValueError on singular input."""
    a = as_rows(rows)
    n = len(a)
    aug = [a[i] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        scale = 1 / aug[col][col]
        aug[col] = [x * scale for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def rank(rows: Sequence[Sequence]) -> int:
    a = as_rows(rows)
    if not a:
        return 0
    n_rows, n_cols = len(a), len(a[0])
    r = 0
    for col in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        for i in range(n_rows):
            if i != r and a[i][col] != 0:
                f = a[i][col] / a[r][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == n_rows:
            break
    return r


def determinant(rows: Sequence[Sequence]) -> Fraction:
    a = as_rows(rows)
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        scale = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] * scale
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def leading_principal_minors(rows: Sequence[Sequence]) -> list[Fraction]:
    n = len(rows)
    return [determinant([row[:k] for row in rows[:k]]) for k in range(1, n + 1)]
