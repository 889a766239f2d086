import pytest

from schurq.dimensions import SchurGraphSlice, g_all, g_formula, g_paths, g_pfaffian, g_unskew
from schurq.shapes import contains, strict_partitions_upto


@pytest.mark.parametrize("mu,lam,g", [
    ((), (2, 1), 1),
    ((), (3, 1), 2),
    ((), (3, 2, 1), 2),
    ((2, 1), (3, 2, 1), 1),
    ((1,), (2,), 1),
    ((2,), (1,), 0),
    ((), (4,), 1),
])
def test_values(mu, lam, g):
    assert g_all(mu, lam) == {"paths": g, "formula": g, "pfaffian": g}


@pytest.mark.parametrize("lam,g", [((5,), 1), ((2, 1), 1), ((3, 2, 1), 2)])
def test_unskew(lam, g):
    assert g_unskew(lam) == g


@pytest.mark.parametrize("lam", strict_partitions_upto(9))
def test_three_way_agreement(lam):
    for mu in strict_partitions_upto(lam.weight):
        g = g_paths(mu, lam)
        assert g_formula(mu, lam) == g
        assert g_pfaffian(mu, lam) == g
        assert (g > 0) == contains(mu, lam)


@pytest.mark.parametrize("lam", strict_partitions_upto(7))
def test_diagonal_and_empty(lam):
    assert g_paths(lam, lam) == 1
    assert g_formula((), lam) == g_unskew(lam)


def test_graph_slice_edges_connect_consecutive_weights():
    g = SchurGraphSlice.build(0, 6)
    assert all(lam.weight == mu.weight + 1 for mu, lam in g.edges)
    assert ((2, 1), (3, 1)) in g.edges


def test_branching_recursion():
    """g_{lam/empty} is the sum of g over the predecessors of lam."""
    from schurq.shapes import cover_predecessors
    for lam in strict_partitions_upto(9):
        if lam:
            assert g_paths((), lam) == sum(g_paths((), nu) for nu in cover_predecessors(lam))
