"""Dimensions g_{lam/mu} of skew shifted diagrams, three ways."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, List, Sequence, Tuple

from .pfaffian import SkewMatrix, pfaffian
from .polyring import poly_eval
from .shapes import (
    StrictPartition,
    contains,
    cover_successors,
    falling_factorial,
    strict_partitions_of,
)
from .tableaux import p_factorial


@dataclass
class SchurGraphSlice:
    """Strict partitions of weights lo..hi and the covering edges between them."""

    levels: Dict[int, List[StrictPartition]]
    edges: List[Tuple[StrictPartition, StrictPartition]] = field(default_factory=list)

    @classmethod
    def build(cls, lo: int, hi: int) -> "SchurGraphSlice":
        levels = {w: strict_partitions_of(w) for w in range(lo, hi + 1)}
        edges = []
        for w in range(lo, hi):
            nxt = set(levels[w + 1])
            for mu in levels[w]:
                edges.extend((mu, lam) for lam in cover_successors(mu) if lam in nxt)
        return cls(levels, edges)


def g_paths(mu: Sequence[int], lam: Sequence[int]) -> int:
    """Number of saturated chains mu -> ... -> lam in the Schur graph."""
    mu, lam = StrictPartition(mu), StrictPartition(lam)
    if not contains(mu, lam):
        return 0
    counts: Dict[StrictPartition, int] = {mu: 1}
    for _ in range(lam.weight - mu.weight):
        nxt: Dict[StrictPartition, int] = {}
        for nu, c in counts.items():
            for rho in cover_successors(nu):
                if contains(rho, lam):
                    nxt[rho] = nxt.get(rho, 0) + c
        counts = nxt
    return counts.get(lam, 0)


def _as_int(value: Fraction, what: str) -> int:
    value = Fraction(value)
    if value.denominator != 1:
        raise ArithmeticError(f"{what} produced a non-integer {value}")
    return value.numerator


def g_unskew(lam: Sequence[int]) -> int:
    """|lam|! / prod lam_k! * prod_{i<j} (lam_i - lam_j)/(lam_i + lam_j)."""
    lam = StrictPartition(lam)
    value = Fraction(factorial(lam.weight))
    for p in lam:
        value /= factorial(p)
    for i in range(len(lam)):
        for j in range(i + 1, len(lam)):
            value *= Fraction(lam[i] - lam[j], lam[i] + lam[j])
    return _as_int(value, "g_unskew")


def g_formula(mu: Sequence[int], lam: Sequence[int]) -> int:
    """g_{lam/empty} * P*_mu(lam_1, ..., lam_l) / (|lam| falling |mu|)."""
    mu, lam = StrictPartition(mu), StrictPartition(lam)
    if len(mu) > len(lam) or mu.weight > lam.weight:
        return 0
    n = len(lam)
    value = poly_eval(p_factorial(mu, n), tuple(lam)) if n else (1 if not mu else 0)
    value = Fraction(g_unskew(lam)) * value / falling_factorial(lam.weight, mu.weight)
    return _as_int(value, "g_formula")


def factorial_reciprocal(m: int) -> Fraction:
    """1/m!, and 0 for negative m."""
    return Fraction(0) if m < 0 else Fraction(1, factorial(m))


def dimension_matrix(mu: Sequence[int], lam: Sequence[int], increasing: bool = True) -> SkewMatrix:
    """A_{lam/mu}: the X block on lam (padded by a zero part when l(lam)+l(mu)
    is odd) bordered by Y = (1/(lam_i - mu_j)!).

    Y lists the parts of mu in increasing order, as the B block of the Nimmo
    matrix does; listing them decreasingly multiplies the Pfaffian by
    (-1)^(l(l-1)/2), l = l(mu).
    """
    mu, lam = StrictPartition(mu), StrictPartition(lam)
    rows = list(lam)
    if (len(lam) + len(mu)) % 2:
        rows.append(0)
    k, l = len(rows), len(mu)
    cols = mu[::-1] if increasing else mu

    def upper(i, j):
        if j < k:
            li, lj = rows[i], rows[j]
            return Fraction(li - lj, li + lj) * factorial_reciprocal(li) * factorial_reciprocal(lj)
        if i < k:
            return factorial_reciprocal(rows[i] - cols[j - k])
        return Fraction(0)

    return SkewMatrix.from_upper(k + l, upper)


def g_pfaffian(mu: Sequence[int], lam: Sequence[int]) -> int:
    """(|lam| - |mu|)! * Pf(A_{lam/mu})."""
    mu, lam = StrictPartition(mu), StrictPartition(lam)
    diff = lam.weight - mu.weight
    if diff < 0:
        return 0
    value = factorial(diff) * Fraction(pfaffian(dimension_matrix(mu, lam)))
    return _as_int(value, "g_pfaffian")


def g_all(mu: Sequence[int], lam: Sequence[int]) -> Dict[str, int]:
    return {"paths": g_paths(mu, lam), "formula": g_formula(mu, lam), "pfaffian": g_pfaffian(mu, lam)}
