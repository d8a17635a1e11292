import numpy as np
import pytest

from eqhodge import _kernels as K
from eqhodge.repring import FiniteGroup

needs_numba = pytest.mark.skipif(not K.HAVE_NUMBA, reason="numba unavailable")


@pytest.mark.parametrize("group", [FiniteGroup.cyclic(7), FiniteGroup.dihedral(6),
                                   FiniteGroup.dihedral(9)], ids=repr)
def test_numpy_kernels(group):
    t = group.table
    assert K._associativity_failures_np(t) == 0
    orders = K._element_orders_np(t, group.identity)
    for x in range(group.order):
        y, k = x, 1
        while y != group.identity:
            y, k = group.mul(y, x), k + 1
        assert orders[x] == k


@needs_numba
@pytest.mark.parametrize("group", [FiniteGroup.cyclic(7), FiniteGroup.dihedral(6),
                                   FiniteGroup.dihedral(40)], ids=repr)
def test_numba_and_numpy_agree(group):
    nb = K.numba_kernels()
    t, inv = np.ascontiguousarray(group.table), np.ascontiguousarray(group.inverses)
    assert nb.associativity_failures(t) == K._associativity_failures_np(t)
    assert np.array_equal(nb.conjugacy_labels(t, inv), K._conjugacy_labels_np(t, inv))
    assert np.array_equal(nb.element_orders(t, group.identity),
                          K._element_orders_np(t, group.identity))


@needs_numba
def test_large_groups_dispatch_to_numba():
    g = FiniteGroup.dihedral(K.NUMBA_MIN_ORDER)
    assert K._use_numba(g.table) == K.USE_NUMBA
    assert K.associativity_failures(g.table) == 0
    assert K.element_orders(g.table, g.identity).max() == K.NUMBA_MIN_ORDER


def test_broken_table_counts_failures():
    t = np.array([[0, 1, 2], [1, 0, 2], [2, 2, 0]])
    assert K._associativity_failures_np(t) > 0


def test_env_flag_selects_numpy(monkeypatch):
    import importlib

    monkeypatch.setenv("EQHODGE_DISABLE_NUMBA", "1")
    mod = importlib.reload(K)
    try:
        assert not mod.USE_NUMBA
        g = FiniteGroup.dihedral(40)
        assert not mod._use_numba(g.table)
        assert mod.associativity_failures(g.table) == 0
    finally:
        monkeypatch.delenv("EQHODGE_DISABLE_NUMBA")
        importlib.reload(K)
