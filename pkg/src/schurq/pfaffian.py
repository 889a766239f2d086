"""Pfaffians over exact rings, and the two Pfaffian formulas for Q_{lam;a}."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence

from .polyring import MultiPoly, Scalar, as_scalar
from .shapes import ParameterSequence, StrictPartition, generalized_power
from .tableaux import two_row_q


class NotSkewSymmetric(ValueError):
    pass


class SingularPoint(ValueError):
    """The sample point violates a precondition; draw another one."""


class SkewMatrix:
    """Square skew-symmetric matrix with entries in a commutative ring."""

    def __init__(self, rows: Sequence[Sequence], check: bool = True):
        self.rows = [list(r) for r in rows]
        self.size = len(self.rows)
        if any(len(r) != self.size for r in self.rows):
            raise NotSkewSymmetric("matrix is not square")
        if check:
            for i in range(self.size):
                if self.rows[i][i] != 0:
                    raise NotSkewSymmetric(f"nonzero diagonal entry at {i}")
                for j in range(i + 1, self.size):
                    if self.rows[i][j] != -self.rows[j][i]:
                        raise NotSkewSymmetric(f"entries ({i},{j}) and ({j},{i}) are not opposite")

    @classmethod
    def from_upper(cls, size: int, upper) -> "SkewMatrix":
        """Build from a callable ``upper(i, j)`` for i < j (0-based)."""
        rows: List[List] = [[0] * size for _ in range(size)]
        for i in range(size):
            for j in range(i + 1, size):
                v = upper(i, j)
                rows[i][j] = v
                rows[j][i] = -v
        if size and isinstance(rows[0][-1], MultiPoly):
            z = rows[0][-1] * 0
            for i in range(size):
                rows[i][i] = z
        return cls(rows, check=False)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]


def pfaffian(A, one=1):
    """Signed perfect-matching sum, by expansion along the first remaining row.

    Subsets of indices are memoized as bitmasks, so the cost is O(2^m m) ring
    operations.  ``one`` is returned for the empty matrix.
    """
    if not isinstance(A, SkewMatrix):
        A = SkewMatrix(A)
    m = A.size
    if m % 2:
        raise ValueError(f"Pfaffian of odd size {m}")
    if m == 0:
        return one
    rows = A.rows
    memo: Dict[int, object] = {}

    def pf(mask: int):
        if mask == 0:
            return None  # empty product
        if mask in memo:
            return memo[mask]
        idx = [k for k in range(m) if mask >> k & 1]
        i = idx[0]
        acc = None
        for t in range(1, len(idx)):
            j = idx[t]
            aij = rows[i][j]
            if not aij:
                continue
            rest = pf(mask & ~(1 << i) & ~(1 << j))
            term = aij if rest is None else aij * rest
            if t % 2 == 0:
                term = -term
            acc = term if acc is None else acc + term
        if acc is None:
            acc = 0
        memo[mask] = acc
        return acc

    result = pf((1 << m) - 1)
    if isinstance(result, (int, Fraction)):
        return as_scalar(result)
    return result


def _check_point(point: Sequence[Scalar], augment: bool) -> None:
    n = len(point)
    for i in range(n):
        for j in range(i + 1, n):
            if point[i] == point[j]:
                raise SingularPoint("coordinates must be pairwise distinct")
            if point[i] + point[j] == 0:
                raise SingularPoint("two coordinates sum to zero")
    if augment and any(v == 0 for v in point):
        raise SingularPoint("zero coordinate collides with the appended zero")


def _a0_upper(xs):
    return lambda i, j: Fraction(xs[i] - xs[j]) / (xs[i] + xs[j])


def nimmo_eval(lam: Sequence[int], a: ParameterSequence, point: Sequence) -> Scalar:
    """P_{lam;a}(point) as Pf_lam(point) / Pf_0(point)."""
    lam = StrictPartition(lam)
    xs = [as_scalar(v) for v in point]
    n, l = len(xs), len(lam)
    if n < l:
        raise ValueError(f"need at least {l} coordinates")
    _check_point(xs, augment=(n % 2 == 1) or ((n + l) % 2 == 1))

    ys = xs + [0] if n % 2 else xs
    pf0 = pfaffian(SkewMatrix.from_upper(len(ys), _a0_upper(ys)))
    if pf0 == 0:
        raise SingularPoint("Pf_0 vanishes at this point")

    zs = xs + [0] if (n + l) % 2 else xs
    nz = len(zs)
    upper_a0 = _a0_upper(zs)

    def upper(i, j):
        if j < nz:
            return upper_a0(i, j)
        if i < nz:
            return generalized_power(zs[i], lam[l - 1 - (j - nz)], a)
        return 0

    pfl = pfaffian(SkewMatrix.from_upper(nz + l, upper))
    return as_scalar(Fraction(pfl) / pf0)


def giambelli(lam: Sequence[int], a: ParameterSequence, n: int) -> MultiPoly:
    """Q_{lam;a} as the Pfaffian of two-row functions Q_{(lam_i, lam_j);a}."""
    lam = StrictPartition(lam)
    l = len(lam)
    size = 2 * ((l + 1) // 2)
    parts = list(lam) + [0] * (size - l)
    entries = {}

    def upper(i, j):
        key = (parts[i], parts[j])
        if key not in entries:
            entries[key] = two_row_q(parts[i], parts[j], a, n)
        return entries[key]

    M = SkewMatrix.from_upper(size, upper)
    return pfaffian(M, one=MultiPoly.one(n))
