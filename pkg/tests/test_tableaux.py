import random
from fractions import Fraction

import pytest

from schurq.identities import definition_oracle_eval
from schurq.polyring import MultiPoly, is_supersymmetric, poly_eval, restrict_last_var
from schurq.shapes import NonStrictPartition, ParameterSequence, strict_partitions_upto
from schurq.tableaux import (
    EnumerationGuard,
    MarkedLetter,
    check_guard,
    enumerate_marked,
    p_classical,
    p_factorial,
    p_multiparam,
    q_classical,
    q_factorial,
    q_from_marked_tableaux,
    q_multiparam,
    q_via_unmarked,
    two_row_p,
)
from schurq.verify import random_point


def test_letter_order():
    one_p, one, two_p = MarkedLetter(1, True), MarkedLetter(1, False), MarkedLetter(2, True)
    assert one_p < one < two_p
    assert str(one_p) == "1'"


@pytest.mark.parametrize("lam,n,count", [((1,), 1, 2), ((2,), 1, 2), ((1,), 0, 0), ((2, 1), 2, 8)])
def test_tableau_counts(lam, n, count):
    assert len(list(enumerate_marked(lam, n))) == count


def test_two_primes_in_a_row_rejected():
    rows = [t.rows()[0] for t in enumerate_marked((2,), 1)]
    assert [MarkedLetter(1, True), MarkedLetter(1, True)] not in rows


def test_one_box(params):
    x = MultiPoly.gens(2)
    assert q_multiparam((1,), params, 2) == (x[0] + x[1]) * 2
    assert p_multiparam((1,), params, 2) == x[0] + x[1]


def test_one_row_two_boxes(params):
    x = MultiPoly.var(1, 1)
    assert q_multiparam((2,), params, 1) == x * (x - params[2]) * 2


def test_empty_shape():
    assert p_multiparam((), ParameterSequence.factorial(4), 3) == 1


def test_non_strict_rejected():
    with pytest.raises(NonStrictPartition):
        q_multiparam((2, 2), ParameterSequence.classical(4), 2)


def test_too_long_is_zero():
    assert q_multiparam((3, 2, 1), ParameterSequence.factorial(8), 2).is_zero()


def test_presets():
    x = MultiPoly.var(1, 1)
    assert p_factorial((2,), 1) == x * (x - 1)
    assert q_factorial((1,), 3) == q_classical((1,), 3)
    p = p_classical((2, 1), 2)
    assert p.degree() == 3 and is_supersymmetric(p)


SMALL = [lam for lam in strict_partitions_upto(5) if lam]


@pytest.mark.parametrize("lam", SMALL)
def test_literal_tableau_sum_matches(lam, params):
    for n in range(len(lam), 4):
        assert q_from_marked_tableaux(lam, params, n) == q_multiparam(lam, params, n)


@pytest.mark.parametrize("lam", [lam for lam in strict_partitions_upto(7) if lam])
def test_unmarked_formula_matches(lam, params):
    for n in range(len(lam), 4):
        assert q_via_unmarked(lam, params, n) == q_multiparam(lam, params, n)


@pytest.mark.parametrize("lam", SMALL)
def test_against_symmetrization(lam, params):
    rng = random.Random(str(lam))
    for n in range(len(lam), 4):
        p = p_multiparam(lam, params, n)
        for _ in range(3):
            pt = random_point(rng, n)
            assert poly_eval(p, pt) == definition_oracle_eval(lam, params, pt)


@pytest.mark.parametrize("lam", strict_partitions_upto(6))
def test_structure(lam, params):
    for n in range(1, 4):
        q = q_multiparam(lam, params, n)
        assert is_supersymmetric(q)
        assert restrict_last_var(q_multiparam(lam, params, n + 1)) == q
        if not q.is_zero():
            assert q.top_component() == q_classical(lam, n)


def test_basis_full_rank(random_params):
    """Coefficient vectors of P_{lam;a|3}, |lam| <= 6, are linearly independent."""
    from schurq.linalg import rank
    polys = [p_multiparam(lam, random_params, 3) for lam in strict_partitions_upto(6) if len(lam) <= 3]
    monos = sorted({m for p in polys for m, _ in p.items()})
    rows = [[p.coeff(m) for m in monos] for p in polys]
    assert rank(rows) == len(polys)


def test_antisymmetry(params):
    assert two_row_p(1, 3, params, 2) == -two_row_p(3, 1, params, 2)
    assert two_row_p(2, 2, params, 2).is_zero()


def test_guard(monkeypatch):
    with pytest.raises(EnumerationGuard):
        check_guard((13,), 1)
    with pytest.raises(EnumerationGuard):
        check_guard((1,), 7)
    check_guard((13,), 1, force=True)
    monkeypatch.setenv("SCHURQ_MAX_CELLS", "20")
    check_guard((13,), 1)
