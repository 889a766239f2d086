"""Executable checks: the symmetrization definition, vanishing and
characterization properties, and the Pieri rule."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Dict, List, Sequence, Tuple

from .linalg import SingularSystem, solve
from .polyring import MultiPoly, Scalar, as_scalar, poly_eval
from .shapes import (
    ParameterSequence,
    StrictPartition,
    contains,
    cover_successors,
    generalized_power,
    h_weight,
    node_point,
    strict_partitions_upto,
)
from .pfaffian import SingularPoint
from .tableaux import p_classical, p_multiparam

ORACLE_MAX_VARS = 7


class HypothesisNotMet(ValueError):
    """Parameters repeat where the statement needs them pairwise distinct."""


def definition_oracle_eval(lam: Sequence[int], a: ParameterSequence, point: Sequence) -> Scalar:
    """P_{lam;a}(point) by brute-force symmetrization over S(n).

    The cross-ratio product runs over i <= l(lam), i < j <= n.
    """
    lam = StrictPartition(lam)
    xs = [Fraction(as_scalar(v)) for v in point]
    n, l = len(xs), len(lam)
    if l > n:
        return 0
    if n > ORACLE_MAX_VARS:
        raise ValueError(f"symmetrization over S({n}) is too expensive")
    for i in range(n):
        for j in range(i + 1, n):
            if xs[i] == xs[j] or xs[i] + xs[j] == 0:
                raise SingularPoint("coordinates must be distinct with no opposite pair")
    powers = {(i, k): Fraction(generalized_power(xs[i], k, a)) for i in range(n) for k in lam}
    ratio = {
        (i, j): (xs[i] + xs[j]) / (xs[i] - xs[j])
        for i in range(n) for j in range(n) if i != j
    }
    total = Fraction(0)
    for w in permutations(range(n)):
        term = Fraction(1)
        for i in range(l):
            term *= powers[(w[i], lam[i])]
            for j in range(i + 1, n):
                term *= ratio[(w[i], w[j])]
        total += term
    return as_scalar(total / factorial(n - l))


def _require_distinct(a: ParameterSequence, upto: int) -> None:
    if not a.distinct_upto(upto):
        raise HypothesisNotMet(f"a_1..a_{upto} are not pairwise distinct")


def vanishing_check(mu: Sequence[int], lam: Sequence[int], a: ParameterSequence) -> bool:
    """mu not inside lam => P_{mu;a}(x(lam)) = 0, and P_{mu;a}(x(mu)) = H_a(mu)."""
    mu, lam = StrictPartition(mu), StrictPartition(lam)
    _require_distinct(a, max(mu.part(1), lam.part(1)) + 1)
    n = max(len(mu), len(lam), 1)
    p = p_multiparam(mu, a, n)
    if poly_eval(p, node_point(mu, a, n)) != h_weight(mu, a):
        return False
    if not contains(mu, lam) and poly_eval(p, node_point(lam, a, n)) != 0:
        return False
    return True


@dataclass
class InterpolationSystem:
    """Values P_{mu;a}(x(lam)): rows indexed by nodes lam, columns by mu."""

    shapes: List[StrictPartition]
    nodes: List[Tuple[Scalar, ...]]
    matrix: List[List[Scalar]]

    def is_triangular(self) -> bool:
        """Zero unless mu is contained in lam."""
        return all(
            self.matrix[r][c] == 0
            for r, lam in enumerate(self.shapes)
            for c, mu in enumerate(self.shapes)
            if not contains(mu, lam)
        )

    def diagonal(self) -> List[Scalar]:
        return [self.matrix[k][k] for k in range(len(self.shapes))]


def interpolation_system(max_weight: int, a: ParameterSequence, n: int | None = None) -> InterpolationSystem:
    shapes = strict_partitions_upto(max_weight)
    _require_distinct(a, max_weight + 1)
    if n is None:
        n = max(len(s) for s in shapes) or 1
    if any(len(s) > n for s in shapes):
        raise ValueError("n too small for the nodes of this system")
    nodes = [node_point(s, a, n) for s in shapes]
    polys = [p_multiparam(s, a, n) for s in shapes]
    matrix = [[poly_eval(p, x) for p in polys] for x in nodes]
    return InterpolationSystem(shapes, nodes, matrix)


def interpolate(mu: Sequence[int], a: ParameterSequence, n: int | None = None) -> Dict[StrictPartition, Scalar]:
    """Solve f(x(lam)) = H_a(mu) [lam = mu], |lam| <= |mu|, for f in the span
    of {P_{nu;a} : |nu| <= |mu|}; returns coefficients keyed by nu."""
    mu = StrictPartition(mu)
    system = interpolation_system(mu.weight, a, n)
    rhs = [h_weight(mu, a) if s == mu else 0 for s in system.shapes]
    try:
        coeffs = solve(system.matrix, rhs)
    except SingularSystem as exc:
        raise SingularSystem("interpolation system is singular (repeated parameters or n too small)") from exc
    return dict(zip(system.shapes, coeffs))


def pieri_sides(mu: Sequence[int], a: ParameterSequence, n: int) -> Tuple[MultiPoly, MultiPoly]:
    mu = StrictPartition(mu)
    a.require(mu.part(1) + 2)
    shift = sum((a[p + 1] for p in mu), 0)
    p1 = p_multiparam((1,), a, n)
    lhs = p_multiparam(mu, a, n) * (p1 - shift)
    rhs = MultiPoly.zero(n)
    for lam in cover_successors(mu):
        rhs = rhs + p_multiparam(lam, a, n)
    return lhs, rhs


def pieri_check(mu: Sequence[int], a: ParameterSequence, n: int) -> bool:
    """P_{mu;a} (P_(1) - sum_j a_{mu_j+1}) == sum over covers of P_{lam;a}."""
    lhs, rhs = pieri_sides(mu, a, n)
    return lhs == rhs


def characterization_one(coeffs: Dict[Tuple[int, ...], Scalar], a: ParameterSequence, n: int) -> bool:
    """Characterization by vanishing at small nodes.

    ``coeffs`` gives c_mu over DP_w.  Starting from the top-degree part
    sum c_mu P_mu, solve for the unique lower-degree correction in span
    {P_{nu;a} : |nu| < w} that vanishes at every node x(lam), |lam| < w, and
    compare with sum c_mu P_{mu;a}.
    """
    if not coeffs:
        return True
    w = sum(next(iter(coeffs)))
    if any(sum(m) != w for m in coeffs):
        raise ValueError("all shapes must have the same weight")
    _require_distinct(a, w + 1)
    top = MultiPoly.zero(n)
    target = MultiPoly.zero(n)
    for m, c in coeffs.items():
        top = top + p_classical(m, n) * c
        target = target + p_multiparam(m, a, n) * c
    lower = strict_partitions_upto(w - 1)
    if not lower:
        return top == target
    nodes = [node_point(s, a, n) for s in lower]
    basis = [p_multiparam(s, a, n) for s in lower]
    matrix = [[poly_eval(b, x) for b in basis] for x in nodes]
    rhs = [-poly_eval(top, x) for x in nodes]
    correction = solve(matrix, rhs)
    f = top
    for c, b in zip(correction, basis):
        f = f + b * c
    vanishes = all(poly_eval(f, x) == 0 for x in nodes)
    return vanishes and f == target


def characterization_nodes_vanish(coeffs: Dict[Tuple[int, ...], Scalar], a: ParameterSequence, n: int) -> bool:
    """sum c_mu P_{mu;a} over DP_w vanishes at x(lam) for all |lam| < w."""
    if not coeffs:
        return True
    w = sum(next(iter(coeffs)))
    f = MultiPoly.zero(n)
    for m, c in coeffs.items():
        f = f + p_multiparam(m, a, n) * c
    return all(poly_eval(f, node_point(s, a, n)) == 0 for s in strict_partitions_upto(w - 1))

