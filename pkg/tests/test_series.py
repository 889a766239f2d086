import random

import pytest

from schurq.linalg import identity, matmul
from schurq.polyring import MultiPoly
from schurq.series import (
    d_closed_form,
    d_coeffs,
    dlin_sides,
    expansion_residual,
    inverse_product_series,
    one_row_genfun_check,
    one_row_genfun_sides,
    simple_two_row_check,
    super_h,
    transition_matrix,
    transition_two_row_check,
    two_row_genfun_check,
    two_row_relations_check,
)
from schurq.shapes import ParameterSequence, strict_partitions_upto


@pytest.fixture(scope="module")
def pair():
    rng = random.Random(11)
    return ParameterSequence.random(rng, 24), ParameterSequence.random(rng, 24)


FA, CL = ParameterSequence.factorial(24), ParameterSequence.classical(24)


def test_same_parameters_give_identity(params):
    d = d_coeffs(params, params, 6)
    assert all(d(r, s) == (r == s) for r in range(7) for s in range(7))


def test_upper_entries_vanish():
    assert d_coeffs(FA, CL, 5)(2, 4) == 0


def test_resubstitution(pair):
    """sum_r d_{rr'} / (u|a)^{r+1} reproduces 1/(u|b)^{r'+1} to the table's order."""
    a, b = pair
    R = 6
    d = d_coeffs(a, b, R)
    for rp in range(R + 1):
        total = inverse_product_series((), R + 1) * 0
        for r in range(rp, R + 1):
            total = total + inverse_product_series(a.values[: r + 1], R + 1) * d(r, rp)
        assert total == inverse_product_series(b.values[: rp + 1], R + 1)


@pytest.mark.parametrize("a,b", [(FA, CL), (CL, FA)])
def test_closed_form(a, b, pair):
    for x, y in [(a, b), pair]:
        d = d_coeffs(x, y, 7)
        assert all(d(r, s) == d_closed_form(x, y, r, s) for r in range(8) for s in range(8))


def test_super_h():
    assert super_h(2, [1, 2], []) == 1 + 2 + 4
    assert super_h(1, [3], [5]) == 8
    assert super_h(2, [], [1, 2, 3]) == 11
    assert super_h(-1, [1], [1]) == 0


@pytest.mark.parametrize("r,s", [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3)])
def test_two_row_transition(r, s, pair):
    assert transition_two_row_check(r, s, FA, CL, 2)
    assert transition_two_row_check(r, s, *pair, 2)
    assert transition_two_row_check(r, s, FA, FA, 2)


def test_transition_matrix_identity(params):
    t = transition_matrix(params, params, 5)
    assert t.entries == identity(len(t.shapes))


@pytest.mark.parametrize("which", ["factorial-classical", "classical-factorial", "random"])
def test_roundtrip_and_expansion(which, pair):
    a, b = {"factorial-classical": (FA, CL), "classical-factorial": (CL, FA)}.get(which, pair)
    t = transition_matrix(a, b, 5)
    back = transition_matrix(b, a, 5)
    assert t.is_unitriangular()
    assert matmul(t.entries, back.entries) == identity(len(t.shapes))
    for mu in strict_partitions_upto(5):
        for n in range(max(len(mu), 1), 4):
            assert expansion_residual(mu, a, b, n, t).is_zero()


def test_one_row_series_examples():
    lhs, rhs = one_row_genfun_sides(CL, 1, 5)
    x = MultiPoly.var(1, 1)
    assert rhs[0] == 1 and lhs[0] == 1
    assert [rhs[r] for r in range(1, 6)] == [x ** r * 2 for r in range(1, 6)]
    assert one_row_genfun_check(FA, 2, 5)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_one_row_series(n, params):
    assert one_row_genfun_check(params, n, 8)


@pytest.mark.parametrize("k", range(1, 6))
def test_two_row_relations(k, params):
    for l in range(1, k):
        assert two_row_relations_check(k, l, params, 3)
        assert simple_two_row_check(k, l, 3)


def test_linear_relation_fails_without_second_row(params):
    """At l = 0 the one-box relation takes over; the linear one does not hold."""
    lhs, rhs = dlin_sides(2, 0, params, 2)
    assert lhs != rhs


def test_relations_need_positive_indices():
    with pytest.raises(ValueError):
        two_row_relations_check(2, 0, FA, 2)


def test_two_row_series(params):
    assert two_row_genfun_check(params, 2, 6)
