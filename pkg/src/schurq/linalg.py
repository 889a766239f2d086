"""Small exact linear algebra over the rationals (Gaussian elimination)."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

from .polyring import Scalar, as_scalar


class SingularSystem(ArithmeticError):
    pass


def _copy(rows: Sequence[Sequence]) -> List[List[Fraction]]:
    return [[Fraction(v) for v in row] for row in rows]


def det(rows: Sequence[Sequence]) -> Scalar:
    m = _copy(rows)
    size = len(m)
    if any(len(r) != size for r in m):
        raise ValueError("determinant of a non-square matrix")
    result = Fraction(1)
    for c in range(size):
        pivot = next((r for r in range(c, size) if m[r][c]), None)
        if pivot is None:
            return 0
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            result = -result
        p = m[c][c]
        result *= p
        for r in range(c + 1, size):
            if m[r][c]:
                f = m[r][c] / p
                row_c = m[c]
                m[r] = [x - f * y for x, y in zip(m[r], row_c)]
    return as_scalar(result)


def rank(rows: Sequence[Sequence]) -> int:
    m = _copy(rows)
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        pivot = next((k for k in range(r, len(m)) if m[k][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for k in range(len(m)):
            if k != r and m[k][c]:
                f = m[k][c] / m[r][c]
                m[k] = [x - f * y for x, y in zip(m[k], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def solve(rows: Sequence[Sequence], rhs: Sequence) -> List[Scalar]:
    """Unique solution of a square system; raises SingularSystem otherwise."""
    m = _copy(rows)
    size = len(m)
    b = [Fraction(v) for v in rhs]
    if len(b) != size or any(len(r) != size for r in m):
        raise ValueError("solve expects a square system")
    for c in range(size):
        pivot = next((r for r in range(c, size) if m[r][c]), None)
        if pivot is None:
            raise SingularSystem(f"no pivot in column {c}")
        m[c], m[pivot] = m[pivot], m[c]
        b[c], b[pivot] = b[pivot], b[c]
        for r in range(size):
            if r != c and m[r][c]:
                f = m[r][c] / m[c][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
                b[r] -= f * b[c]
    return [as_scalar(b[i] / m[i][i]) for i in range(size)]


def matmul(x: Sequence[Sequence], y: Sequence[Sequence]) -> List[List[Scalar]]:
    cols = list(zip(*y))
    return [[as_scalar(sum((Fraction(p) * q for p, q in zip(row, col)), Fraction(0))) for col in cols] for row in x]


def identity(size: int) -> List[List[int]]:
    return [[1 if i == j else 0 for j in range(size)] for i in range(size)]
