"""Small exact linear algebra over the rationals.

Matrices are tuples of tuples of :class:`~fractions.Fraction`; sizes here never
exceed 9x9 so plain Gauss-Jordan is the right tool.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

Matrix = tuple[tuple[Fraction, ...], ...]


def to_matrix(rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt) for row in a)


def matvec(m: Matrix, v: Sequence) -> tuple[Fraction, ...]:
    return tuple(sum((Fraction(x) * y for x, y in zip(row, v)), Fraction(0)) for row in m)


def vecmat(v: Sequence, m: Matrix) -> tuple[Fraction, ...]:
    return matvec(transpose(m), v)


def quadratic(m: Matrix, x: Sequence, y: Sequence | None = None) -> Fraction:
    y = x if y is None else y
    return sum((Fraction(xi) * mij * yj for xi, row in zip(x, m) for mij, yj in zip(row, y)), Fraction(0))


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    aug = [list(row) + list(e) for row, e in zip(m, identity(n))]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def det(m: Matrix) -> Fraction:
    n = len(m)
    a = [list(row) for row in m]
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            result = -result
        p = a[col][col]
        result *= p
        for r in range(col + 1, n):
            f = a[r][col] / p
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return result


def rank(m: Matrix) -> int:
    a = [list(row) for row in m]
    rows = len(a)
    cols = len(a[0]) if a else 0
    r = 0
    for col in range(cols):
        pivot = next((i for i in range(r, rows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        for i in range(r + 1, rows):
            f = a[i][col] / a[r][col]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def is_symmetric(m: Matrix) -> bool:
    return all(m[i][j] == m[j][i] for i in range(len(m)) for j in range(i))


def leading_minors(m: Matrix) -> list[Fraction]:
    return [det(tuple(row[:i] for row in m[:i])) for i in range(1, len(m) + 1)]


def is_positive_definite(m: Matrix) -> bool:
    """Sylvester's criterion; exact."""
    return is_symmetric(m) and all(d > 0 for d in leading_minors(m))


def common_denominator(values) -> int:
    d = 1
    for x in values:
        d = lcm(d, Fraction(x).denominator)
    return d


def is_integral(values) -> bool:
    return all(Fraction(x).denominator == 1 for x in values)
