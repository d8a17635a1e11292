"""Shioda-Tate bookkeeping and Mordell-Weil rank bounds after base change."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .basechange import Hypothesis, classify_hypothesis, tjurina_class
from .chi_engine import BundleSpec, evaluate, hodge_middle
from .covers import Cover, as_abstract, cover_report
from .errors import HypothesisViolation, InconsistentData, TjurinaUnavailable
from .repring import VirtualModule, regular_class, trivial_class
from .weierstrass import SurfaceReport

DISCREPANCY_NOTE = (
    "pal_bound uses eps*(c_E - d_E/6 + 2g - 2 + s), which agrees with "
    "10 deg L - mu = c_E - d_E/6; the variant with +d_E/6 is reported as "
    "pal_bound_plus_variant for comparison only"
)


def trivial_lattice_class(tjurina: Optional[VirtualModule]) -> VirtualModule:
    """Zero section, fiber class and the non-identity fiber components: 2[C] + [H^0(T)]."""
    if tjurina is None:
        raise TjurinaUnavailable("trivial lattice needs the Tjurina class")
    return 2 * trivial_class(tjurina.table) + tjurina


def _require_smooth_branch(report: SurfaceReport, cover: Cover) -> None:
    if classify_hypothesis(report, cover) is not Hypothesis.SMOOTH_BRANCH:
        raise HypothesisViolation("a singular fiber lies over a branch point of the cover")


def covering_module(report: SurfaceReport, cover: Cover) -> VirtualModule:
    """M with E(C(C')) (x) C a quotient of M.

    M = (10n - mu)[C[G]] + [H^0(K)] + [H^0(K)]^dual - 2[C], computed from
    the cover data and checked against [H^{1,1}(X')] minus the trivial lattice.
    """
    c = as_abstract(cover)
    _require_smooth_branch(report, c)
    cr = cover_report(c)
    t = c.table
    M = ((10 * report.deg_L - report.mu) * regular_class(t)
         + cr.h0_K + cr.h0_K.dual() - 2 * trivial_class(t))
    tj = tjurina_class(report, c, Hypothesis.SMOOTH_BRANCH)
    h11 = evaluate(hodge_middle(1, BundleSpec.weierstrass(report.deg_L)), cr, tj)
    if h11 - trivial_lattice_class(tj) != M:
        raise InconsistentData("H^{1,1} minus trivial lattice differs from the covering module")
    if not M.is_honest():
        raise InconsistentData(f"covering module has a negative multiplicity: {M.mult}")
    return M


def _euler_base(cover: Cover) -> int:
    c = as_abstract(cover)
    return 2 * c.genus - 2 + c.s


def pal_bound(report: SurfaceReport, cover: Cover, epsilon: Optional[int] = None) -> int:
    c = as_abstract(cover)
    _require_smooth_branch(report, c)
    eps = c.order if epsilon is None else int(epsilon)
    if eps < 1:
        raise ValueError("epsilon must be a positive integer")
    if report.d_E % 6:
        raise InconsistentData("d_E is not divisible by 6")
    bound = eps * (report.c_E - report.d_E // 6 + _euler_base(c))
    if eps == c.order:
        dim = covering_module(report, c).dimension
        if bound < dim:
            raise InconsistentData(f"bound {bound} is below dim M = {dim}")
    return bound


def pal_bound_plus_variant(report: SurfaceReport, cover: Cover,
                           epsilon: Optional[int] = None) -> int:
    """eps*(c_E + d_E/6 + 2g - 2 + s); reported next to ``pal_bound`` only."""
    c = as_abstract(cover)
    eps = c.order if epsilon is None else int(epsilon)
    return eps * (report.c_E + report.d_E // 6 + _euler_base(c))


def per_isotypic(M: VirtualModule) -> list[tuple[int, int, int]]:
    """(character index, character dimension, multiplicity) for each non-zero multiplicity."""
    return [(i, M.table.dims[i], k) for i, k in enumerate(M.mult) if k]


@dataclass(frozen=True)
class MWReport:
    M: VirtualModule
    rank_bound_dim: int
    pal_bound: int
    epsilon: int
    per_isotypic: tuple[tuple[int, int, int], ...]
    pal_bound_plus_variant: int
    discrepancy_note: str = DISCREPANCY_NOTE


def mw_report(report: SurfaceReport, cover: Cover, epsilon: Optional[int] = None) -> MWReport:
    c = as_abstract(cover)
    eps = c.order if epsilon is None else int(epsilon)
    M = covering_module(report, c)
    return MWReport(M, M.dimension, pal_bound(report, c, eps), eps,
                    tuple(per_isotypic(M)), pal_bound_plus_variant(report, c, eps))


__all__ = [
    "trivial_lattice_class", "covering_module", "pal_bound", "pal_bound_plus_variant",
    "per_isotypic", "MWReport", "mw_report", "DISCREPANCY_NOTE",
]
