"""Cayley-table kernels.

Every kernel exists twice: a numba ``@njit`` loop and a vectorised numpy
version, returning identical results.  numba is imported lazily and only used
for tables of order >= ``NUMBA_MIN_ORDER``; below that numpy finishes in
microseconds while loading numba costs most of a second per process.  Set
``EQHODGE_DISABLE_NUMBA=1`` to force the numpy path everywhere.
``benchmarks/bench_kernels.py`` times the two paths against each other.
"""

from __future__ import annotations

import importlib.util
import os
from types import SimpleNamespace
from typing import Optional

import numpy as np

_DISABLED = os.environ.get("EQHODGE_DISABLE_NUMBA", "0").lower() not in ("", "0", "false", "no")

HAVE_NUMBA = importlib.util.find_spec("numba") is not None
USE_NUMBA = HAVE_NUMBA and not _DISABLED
NUMBA_MIN_ORDER = 64


# --- numpy reference path -------------------------------------------------

def _associativity_failures_np(table):
    n = table.shape[0]
    left = table[table]                                   # (ab)c
    right = table[np.arange(n)[:, None, None], table[None, :, :]]  # a(bc)
    return int(np.count_nonzero(left != right))


def _conjugacy_labels_np(table, inverses):
    # conj[g, x] = g x g^-1; the orbit minimum is a canonical class label.
    conj = table[table, inverses[:, None]]
    return conj.min(axis=0).astype(np.int64)


def _element_orders_np(table, identity):
    n = table.shape[0]
    orders = np.zeros(n, dtype=np.int64)
    current = np.arange(n)
    for k in range(1, n + 1):
        hit = (current == identity) & (orders == 0)
        orders[hit] = k
        if np.all(orders):
            break
        current = table[current, np.arange(n)]
    return orders


# --- numba path (compiled on first use) -------------------------------------

_NB: Optional[SimpleNamespace] = None


def numba_kernels() -> SimpleNamespace:
    """The jitted kernels; imports numba on the first call."""
    global _NB
    if _NB is not None:
        return _NB
    from numba import njit

    @njit(cache=True)
    def associativity_failures(table):
        n = table.shape[0]
        bad = 0
        for a in range(n):
            for b in range(n):
                ab = table[a, b]
                for c in range(n):
                    if table[ab, c] != table[a, table[b, c]]:
                        bad += 1
        return bad

    @njit(cache=True)
    def conjugacy_labels(table, inverses):
        n = table.shape[0]
        labels = np.empty(n, dtype=np.int64)
        for x in range(n):
            best = x
            for g in range(n):
                y = table[table[g, x], inverses[g]]
                if y < best:
                    best = y
            labels[x] = best
        return labels

    @njit(cache=True)
    def element_orders(table, identity):
        n = table.shape[0]
        orders = np.zeros(n, dtype=np.int64)
        for x in range(n):
            y = x
            k = 1
            while y != identity:
                y = table[y, x]
                k += 1
                if k > n:
                    return orders  # not a group; caller validates first
            orders[x] = k
        return orders

    _NB = SimpleNamespace(associativity_failures=associativity_failures,
                          conjugacy_labels=conjugacy_labels, element_orders=element_orders)
    return _NB


def _use_numba(table: np.ndarray) -> bool:
    return USE_NUMBA and table.shape[0] >= NUMBA_MIN_ORDER


def associativity_failures(table: np.ndarray) -> int:
    """Number of triples (a, b, c) with (ab)c != a(bc)."""
    if _use_numba(table):
        return int(numba_kernels().associativity_failures(table))
    return _associativity_failures_np(table)


def conjugacy_labels(table: np.ndarray, inverses: np.ndarray) -> np.ndarray:
    """Label each element by the smallest element index in its conjugacy class."""
    if _use_numba(table):
        return numba_kernels().conjugacy_labels(table, inverses)
    return _conjugacy_labels_np(table, inverses)


def element_orders(table: np.ndarray, identity: int) -> np.ndarray:
    if _use_numba(table):
        return numba_kernels().element_orders(table, identity)
    return _element_orders_np(table, identity)
