"""Time the numba and numpy Cayley-table kernels against each other.

    python benchmarks/bench_kernels.py [--sizes 8 32 64 128] [--repeat 5]

Uses dihedral groups D_m (order 2m).  The first numba call compiles (or
loads from cache) and is excluded from the timings.  The library itself only
dispatches to numba for orders >= ``NUMBA_MIN_ORDER``.
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from eqhodge import _kernels as K
from eqhodge.repring import FiniteGroup


def _cases(group: FiniteGroup):
    nb = K.numba_kernels()
    t = np.ascontiguousarray(group.table)
    inv = np.ascontiguousarray(group.inverses)
    return {
        "associativity": (
            lambda: K._associativity_failures_np(t),
            lambda: nb.associativity_failures(t),
        ),
        "conjugacy": (
            lambda: K._conjugacy_labels_np(t, inv),
            lambda: nb.conjugacy_labels(t, inv),
        ),
        "orders": (
            lambda: K._element_orders_np(t, group.identity),
            lambda: nb.element_orders(t, group.identity),
        ),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[8, 32, 64, 128])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not K.HAVE_NUMBA:
        raise SystemExit("numba is not installed")
    print(f"{'kernel':<14}{'|G|':>6}{'numpy ms':>12}{'numba ms':>12}{'speedup':>10}")
    for m in args.sizes:
        group = FiniteGroup.dihedral(m)
        for name, (f_np, f_nb) in _cases(group).items():
            a, b = f_np(), f_nb()
            if not np.array_equal(np.asarray(a), np.asarray(b)):
                raise SystemExit(f"{name}: numpy and numba disagree for D_{m}")
            t_np = min(timeit.repeat(f_np, number=1, repeat=args.repeat)) * 1e3
            t_nb = min(timeit.repeat(f_nb, number=1, repeat=args.repeat)) * 1e3
            print(f"{name:<14}{group.order:>6}{t_np:>12.3f}{t_nb:>12.3f}{t_np / t_nb:>10.1f}")


if __name__ == "__main__":
    main()
