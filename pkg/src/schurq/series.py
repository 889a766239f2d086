"""Generating-function identities and transition coefficients between
parameter sequences."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .linalg import det
from .polyring import MultiPoly, Scalar, USeries, as_scalar, useries_mul, useries_of_ratio
from .shapes import ParameterSequence, StrictPartition, contains, strict_partitions_upto
from .tableaux import one_row_p, q_multiparam, two_row_p


def u_poly_from_roots(roots: Sequence[Scalar]) -> List[Scalar]:
    """Ascending u-coefficients of prod (u - c)."""
    coeffs: List[Scalar] = [1]
    for c in roots:
        shifted = [0] + coeffs
        scaled = [-c * v for v in coeffs] + [0]
        coeffs = [as_scalar(s + t) for s, t in zip(shifted, scaled)]
    return coeffs


def inverse_product_series(roots: Sequence[Scalar], order: int, n: int = 0) -> USeries:
    """1 / prod (u - c) in powers of 1/u."""
    return useries_of_ratio([1], u_poly_from_roots(roots), order, n)


# -- transition coefficients d_{rr'} --------------------------------------------

@dataclass(frozen=True)
class DCoeffTable:
    """d_{rr'} for 0 <= r' <= r <= R; zero when r < r'."""

    R: int
    entries: Tuple[Tuple[Scalar, ...], ...]

    def __call__(self, r: int, rp: int) -> Scalar:
        if r < rp:
            return 0
        if not 0 <= rp <= r <= self.R:
            raise IndexError(f"d_({r},{rp}) outside the table of size {self.R}")
        return self.entries[r][rp]


def d_coeffs(a: ParameterSequence, b: ParameterSequence, R: int) -> DCoeffTable:
    """Coefficients of 1/((u-b_1)...(u-b_{r'+1})) in the basis 1/((u-a_1)...(u-a_{r+1})),
    by matching series in 1/u."""
    a.require(R + 1)
    b.require(R + 1)
    order = R + 1
    basis = [inverse_product_series(a.values[: r + 1], order) for r in range(R + 1)]
    table = [[0] * (R + 1) for _ in range(R + 1)]
    for rp in range(R + 1):
        rest = inverse_product_series(b.values[: rp + 1], order)
        for r in range(rp, R + 1):
            c = rest[r + 1].constant_value()
            table[r][rp] = c
            if c:
                rest = rest - basis[r] * c
        assert all(rest[k].is_zero() for k in range(order + 1)), "triangular solve left a residue"
    return DCoeffTable(R, tuple(tuple(row) for row in table))


def super_h(k: int, xs: Sequence[Scalar], ys: Sequence[Scalar]) -> Scalar:
    """[t^k] prod(1 + y t) / prod(1 - x t)."""
    if k < 0:
        return 0
    # h_j(xs) by the standard recursion over variables.
    h = [1] + [0] * k
    for x in xs:
        for j in range(1, k + 1):
            h[j] = h[j] + x * h[j - 1]
    e = [1] + [0] * k
    for y in ys:
        for j in range(k, 0, -1):
            e[j] = e[j] + y * e[j - 1]
    return as_scalar(sum(h[k - i] * e[i] for i in range(k + 1)))


def d_closed_form(a: ParameterSequence, b: ParameterSequence, r: int, rp: int) -> Scalar:
    """h_{r-r'}(b_2, ..., b_{r'+1}; -a_2, ..., -a_r)."""
    if r < rp:
        return 0
    return super_h(r - rp, b.values[1: rp + 1], [-v for v in a.values[1: r]])


def transition_two_row_sides(r: int, s: int, a: ParameterSequence, b: ParameterSequence, n: int):
    d = d_coeffs(a, b, max(r, s))
    lhs = two_row_p(r, s, a, n)
    rhs = MultiPoly.zero(n)
    for rp in range(1, r + 1):
        for sp in range(1, s + 1):
            c = d(r, rp) * d(s, sp)
            if c:
                rhs = rhs + two_row_p(rp, sp, b, n) * c
    return lhs, rhs


def transition_two_row_check(r: int, s: int, a: ParameterSequence, b: ParameterSequence, n: int) -> bool:
    """P_{(r,s);a} == sum_{r',s' >= 1} d_{rr'} d_{ss'} P_{(r',s');b}."""
    if r < 1 or s < 1:
        raise ValueError("two-row transition needs r, s >= 1")
    lhs, rhs = transition_two_row_sides(r, s, a, b, n)
    return lhs == rhs


@dataclass
class TransitionMatrix:
    """Q_{mu;a} = sum_nu entries[mu][nu] Q_{nu;b}; rows and columns follow ``shapes``."""

    shapes: List[StrictPartition]
    entries: List[List[Scalar]]

    def entry(self, mu: Sequence[int], nu: Sequence[int]) -> Scalar:
        return self.entries[self.shapes.index(StrictPartition(mu))][self.shapes.index(StrictPartition(nu))]

    def is_unitriangular(self) -> bool:
        for i, mu in enumerate(self.shapes):
            for j, nu in enumerate(self.shapes):
                v = self.entries[i][j]
                if i == j and v != 1:
                    return False
                if v and not (len(nu) == len(mu) and contains(nu, mu)):
                    return False
        return True


def transition_entry(mu: Sequence[int], nu: Sequence[int], d: DCoeffTable) -> Scalar:
    mu, nu = StrictPartition(mu), StrictPartition(nu)
    if len(mu) != len(nu) or not contains(nu, mu):
        return 0
    if not mu:
        return 1
    return det([[d(mi, nj) for nj in nu] for mi in mu])


def transition_matrix(a: ParameterSequence, b: ParameterSequence, max_weight: int) -> TransitionMatrix:
    shapes = strict_partitions_upto(max_weight)
    d = d_coeffs(a, b, max_weight)
    entries = [[transition_entry(mu, nu, d) for nu in shapes] for mu in shapes]
    return TransitionMatrix(shapes, entries)


def expansion_residual(mu: Sequence[int], a: ParameterSequence, b: ParameterSequence, n: int,
                       matrix: TransitionMatrix | None = None) -> MultiPoly:
    """Q_{mu;a} - sum_nu d_{mu nu} Q_{nu;b}; the zero polynomial when the expansion holds."""
    mu = StrictPartition(mu)
    if matrix is None:
        matrix = transition_matrix(a, b, mu.weight)
    res = q_multiparam(mu, a, n)
    row = matrix.entries[matrix.shapes.index(mu)]
    for nu, c in zip(matrix.shapes, row):
        if c:
            res = res - q_multiparam(nu, b, n) * c
    return res


# -- generating functions ---------------------------------------------------------

def cross_ratio_product(n: int, order: int) -> USeries:
    """prod_j (u + x_j)/(u - x_j) in powers of 1/u."""
    result = USeries.constant(1, order, n)
    for j in range(1, n + 1):
        x = MultiPoly.var(n, j)
        result = useries_mul(result, useries_of_ratio([x, 1], [-x, 1], order, n))
    return result


def one_row_genfun_sides(a: ParameterSequence, n: int, N: int) -> Tuple[USeries, USeries]:
    a.require(N + 1)
    lhs = USeries([], N, n)
    tau = a.shifted()
    for r in range(N + 1):
        weight = inverse_product_series(tau[:r], N, n)
        lhs = lhs + weight * q_multiparam((r,) if r else (), a, n)
    return lhs, cross_ratio_product(n, N)


def one_row_genfun_check(a: ParameterSequence, n: int, N: int) -> bool:
    """sum_r Q_{(r);a} / (u | tau a)^r == prod (u + x_j)/(u - x_j), to order N."""
    lhs, rhs = one_row_genfun_sides(a, n, N)
    return lhs == rhs


def dlin_sides(k: int, l: int, a: ParameterSequence, n: int):
    P = lambda i, j: two_row_p(i, j, a, n)
    R = lambda i: one_row_p(i, a, n)
    lhs = P(k + 1, l) + P(k, l + 1) + P(k, l) * (a[k + 1] + a[l + 1])
    rhs = R(k) * R(l + 1) - R(k + 1) * R(l) + R(k) * R(l) * (a[l + 1] - a[k + 1])
    return lhs, rhs


def koro_sides(k: int, a: ParameterSequence, n: int):
    lhs = one_row_p(k + 1, a, n) + two_row_p(k, 1, a, n) + one_row_p(k, a, n) * a[k + 1]
    rhs = one_row_p(k, a, n) * one_row_p(1, a, n)
    return lhs, rhs


def two_row_relations_check(k: int, l: int, a: ParameterSequence, n: int) -> bool:
    """The linear two-row relation at (k, l), k, l >= 1, and the one-box
    Pieri relation at k."""
    if k < 1 or l < 1:
        raise ValueError("relations are stated for k, l >= 1")
    a.require(max(k, l) + 2)
    lhs, rhs = dlin_sides(k, l, a, n)
    if lhs != rhs:
        return False
    lhs, rhs = koro_sides(k, a, n)
    return lhs == rhs


def simple_two_row_check(k: int, l: int, n: int) -> bool:
    """Classical P_{(k+1,l)} + P_{(k,l+1)} == P_(k) P_(l+1) - P_(k+1) P_(l)."""
    a = ParameterSequence.classical(max(k, l) + 3)
    P = lambda i, j: two_row_p(i, j, a, n)
    R = lambda i: one_row_p(i, a, n)
    return P(k + 1, l) + P(k, l + 1) == R(k) * R(l + 1) - R(k + 1) * R(l)


def two_row_genfun_sides(a: ParameterSequence, n: int, order: int = 6):
    """Both sides of the two-row generating identity after multiplying by
    p q with p = 1/u, q = 1/v:

        4 (p + q) S' = q (F(p) + 1)(1 - F(q)) - p (1 - F(p))(F(q) + 1),

    where S' = sum_{k,l >= 0} P_{(k,l);a} p^k q^l / (prod_{m<=k+1} (1 - a_m p)
    prod_{m<=l+1} (1 - a_m q)) and F = prod (1 + x t)/(1 - x t).
    Returns coefficient dicts {(i, j): poly} for i, j <= order.
    """
    K = order
    a.require(K + 2)
    weights = []
    for k in range(K + 1):
        w = inverse_product_series(a.values[: k + 1], K + 1, n)
        weights.append([w[i + 1] for i in range(K + 1)])  # drop the leading 1/u
    S: Dict[Tuple[int, int], MultiPoly] = {}
    for i in range(K + 1):
        for j in range(K + 1):
            S[(i, j)] = MultiPoly.zero(n)
    for k in range(K + 1):
        for l in range(K + 1):
            p_kl = two_row_p(k, l, a, n)
            if p_kl.is_zero():
                continue
            for i in range(k, K + 1):
                wi = weights[k][i].constant_value()
                if not wi:
                    continue
                for j in range(l, K + 1):
                    wj = weights[l][j].constant_value()
                    if wj:
                        S[(i, j)] = S[(i, j)] + p_kl * (wi * wj)
    F = cross_ratio_product(n, K)
    one = MultiPoly.one(n)
    A = [F[i] + (one if i == 0 else 0) for i in range(K + 1)]
    C = [(one if i == 0 else 0) - F[i] for i in range(K + 1)]
    lhs, rhs = {}, {}
    zero = MultiPoly.zero(n)
    for i in range(K + 1):
        for j in range(K + 1):
            left = zero
            if i >= 1:
                left = left + S[(i - 1, j)]
            if j >= 1:
                left = left + S[(i, j - 1)]
            lhs[(i, j)] = left * 4
            right = zero
            if j >= 1:
                right = right + A[i] * C[j - 1]
            if i >= 1:
                right = right - C[i - 1] * A[j]
            rhs[(i, j)] = right
    return lhs, rhs


def two_row_genfun_check(a: ParameterSequence, n: int, order: int = 6) -> bool:
    lhs, rhs = two_row_genfun_sides(a, n, order)
    return lhs == rhs
