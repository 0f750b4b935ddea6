"""Fraction-free exact determinants."""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by Bareiss elimination.

    Every intermediate division is exact, so entries stay integral and
    bounded by Hadamard-type minors.
    """
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            f = row_i[k]
            if f:
                for j in range(k + 1, n):
                    row_i[j] = (row_i[j] * pivot - f * row_k[j]) // prev
            elif pivot != prev:
                for j in range(k + 1, n):
                    if row_i[j]:
                        row_i[j] = row_i[j] * pivot // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def rational_det(matrix: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a rational matrix (rows scaled to integers first)."""
    scale = 1
    int_rows = []
    for row in matrix:
        row = [Fraction(x) for x in row]
        d = 1
        for x in row:
            d = lcm(d, x.denominator)
        scale *= d
        int_rows.append([int(x * d) for x in row])
    return Fraction(bareiss_det(int_rows), scale)
