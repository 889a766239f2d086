import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from schurq.linalg import det
from schurq.pfaffian import NotSkewSymmetric, SingularPoint, SkewMatrix, giambelli, nimmo_eval, pfaffian
from schurq.polyring import MultiPoly, poly_eval
from schurq.shapes import ParameterSequence, strict_partitions_upto
from schurq.tableaux import p_factorial, p_multiparam, q_classical, q_multiparam, two_row_q
from schurq.verify import random_point

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=6)


@st.composite
def skew_matrices(draw, max_size=8):
    size = 2 * draw(st.integers(0, max_size // 2))
    upper = {(i, j): draw(rationals) for i in range(size) for j in range(i + 1, size)}
    return SkewMatrix.from_upper(size, lambda i, j: upper[(i, j)])


def test_small_cases():
    assert pfaffian([[0, 5], [-5, 0]]) == 5
    a = {(i, j): sympy.Symbol(f"a{i}{j}") for i in range(4) for j in range(i + 1, 4)}
    M = SkewMatrix.from_upper(4, lambda i, j: a[(i, j)])
    expected = a[(0, 1)] * a[(2, 3)] - a[(0, 2)] * a[(1, 3)] + a[(0, 3)] * a[(1, 2)]
    assert sympy.expand(pfaffian(M) - expected) == 0


@given(skew_matrices())
@settings(max_examples=40, deadline=None)
def test_square_is_determinant(M):
    assert Fraction(pfaffian(M)) ** 2 == det(M.rows)
    assert det(M.rows) == sympy.Matrix(M.rows).det()


@given(skew_matrices(6), rationals, st.data())
@settings(max_examples=30, deadline=None)
def test_row_scaling(M, c, data):
    """Scaling row and column k multiplies the Pfaffian by c."""
    if M.size == 0:
        return
    k = data.draw(st.integers(0, M.size - 1))
    rows = [list(r) for r in M.rows]
    for j in range(M.size):
        rows[k][j] *= c
        rows[j][k] *= c
    assert pfaffian(rows) == pfaffian(M) * c


def test_rejects_non_skew():
    with pytest.raises(NotSkewSymmetric):
        SkewMatrix([[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        pfaffian(SkewMatrix([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]]))


def test_nimmo_examples():
    cl = ParameterSequence.classical(8)
    assert nimmo_eval((1,), cl, (1, 2)) == 3
    assert nimmo_eval((), cl, (Fraction(1, 2), 3)) == 1
    fa = ParameterSequence.factorial(8)
    assert nimmo_eval((2, 1), fa, (5, 3, 2)) == poly_eval(p_factorial((2, 1), 3), (5, 3, 2))


def test_nimmo_bad_points():
    cl = ParameterSequence.classical(8)
    with pytest.raises(SingularPoint):
        nimmo_eval((1,), cl, (1, 1))
    with pytest.raises(SingularPoint):
        nimmo_eval((1,), cl, (2, -2))
    with pytest.raises(SingularPoint):
        nimmo_eval((1,), cl, (0, 2, 3))


@pytest.mark.parametrize("lam", [lam for lam in strict_partitions_upto(6) if lam])
def test_nimmo_matches_tableaux(lam, params):
    rng = random.Random(f"nimmo{lam}")
    for n in range(len(lam), 5):
        p = p_multiparam(lam, params, n)
        for _ in range(3):
            pt = random_point(rng, n)
            assert nimmo_eval(lam, params, pt) == poly_eval(p, pt)


def test_giambelli_two_rows(params):
    assert giambelli((3, 1), params, 2) == two_row_q(3, 1, params, 2)


def test_giambelli_examples():
    assert giambelli((2, 1), ParameterSequence.classical(8), 3) == q_classical((2, 1), 3)
    fa = ParameterSequence.factorial(8)
    assert giambelli((3, 2, 1), fa, 3) == q_multiparam((3, 2, 1), fa, 3)


@pytest.mark.parametrize("lam", [lam for lam in strict_partitions_upto(8) if lam and len(lam) <= 4])
def test_giambelli_matches_tableaux(lam, params):
    for n in range(1, 4):
        assert giambelli(lam, params, n) == q_multiparam(lam, params, n)
