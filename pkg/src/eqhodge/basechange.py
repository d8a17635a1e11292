"""Pulling the fibration back along a Galois cover of the base."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .covers import Branch, Cover, as_abstract
from .errors import ConfigError, HypothesisViolation, InconsistentData
from .polyfield import gcd
from .repring import VirtualModule, regular_class
from .weierstrass import FiberData, Kodaira, SurfaceReport, kodaira_type


class Hypothesis(enum.Enum):
    SMOOTH_BRANCH = "smooth_branch"
    SEMISTABLE_BRANCH = "semistable_branch"
    VIOLATED = "violated"


@dataclass(frozen=True)
class Incidence:
    """``npoints`` branch points with inertia order ``e`` lying in the cluster of ``fiber``."""

    fiber: FiberData
    branch: Branch
    npoints: int
    e: int


def branch_incidences(report: SurfaceReport, cover: Cover) -> list[Incidence]:
    """Match branch points against singular-fiber clusters using gcds only."""
    c = as_abstract(cover)
    out = []
    for b in c.branch:
        if isinstance(b.place, str):
            raise ConfigError(
                f"branch point {b.place!r} is an abstract label; give it as a rational "
                "point, 'inf', or a factor polynomial so it can be matched to fibers")
        e = c.group.element_order(b.inertia)
        for f in report.fibers:
            place = f.cluster.place
            if b.place.is_infinity or place.is_infinity:
                if b.place.is_infinity and place.is_infinity:
                    out.append(Incidence(f, b, 1, e))
                continue
            k = gcd(b.place.factor, place.factor).degree
            if k:
                out.append(Incidence(f, b, k, e))
    return out


def classify_hypothesis(report: SurfaceReport, cover: Cover) -> Hypothesis:
    inc = branch_incidences(report, cover)
    kinds = [i.fiber.kodaira for i in inc]
    if all(k.is_smooth for k in kinds):
        return Hypothesis.SMOOTH_BRANCH
    if all(k.is_semistable for k in kinds):
        return Hypothesis.SEMISTABLE_BRANCH
    return Hypothesis.VIOLATED


def pullback_type(kodaira: Kodaira, e: int, triple=None) -> Kodaira:
    """Type upstairs at a point of ramification index e over a semistable fiber."""
    if e == 1:
        return kodaira
    if not kodaira.is_semistable:
        raise HypothesisViolation(f"additive fiber {kodaira} over a branch point")
    up = Kodaira("I", e * kodaira.m)
    if triple is not None:
        vA, vB, vD = triple
        again = kodaira_type(e * vA, e * vB, e * vD)
        if again != up:
            raise InconsistentData(f"pullback of {kodaira} by e={e}: {again} != {up}")
    return up


@dataclass(frozen=True)
class UpstairsFiber:
    kodaira: Kodaira
    count: int
    source: FiberData
    e: int


@dataclass(frozen=True)
class BaseChangeReport:
    hypothesis: Hypothesis
    fibers_up: tuple[UpstairsFiber, ...]
    mu_up: int
    c_E_up: int
    d_E_up: int
    tjurina: Optional[VirtualModule]
    group_order: int


def pullback_fibers(report: SurfaceReport, cover: Cover) -> list[UpstairsFiber]:
    c = as_abstract(cover)
    G = c.order
    inc = branch_incidences(report, c)
    out = []
    for f in report.fibers:
        here = [i for i in inc if i.fiber is f]
        unbranched = f.deg - sum(i.npoints for i in here)
        if unbranched < 0:
            raise InconsistentData("more branch points than points in a cluster")
        if unbranched:
            out.append(UpstairsFiber(f.kodaira, unbranched * G, f, 1))
        for i in here:
            k = pullback_type(f.kodaira, i.e, f.cluster.triple())
            if not k.is_smooth:
                out.append(UpstairsFiber(k, i.npoints * G // i.e, f, i.e))
    return out


def tjurina_class(report: SurfaceReport, cover: Cover,
                  hypothesis: Optional[Hypothesis] = None) -> Optional[VirtualModule]:
    """[H^0(T)] = mu [C[G]] when no singular fiber sits over a branch point, else None.

    With a multiplicative fiber over a branch point W' acquires an A_{ek-1}
    point on the ramification locus; its class is not computed.
    """
    c = as_abstract(cover)
    if hypothesis is None:
        hypothesis = classify_hypothesis(report, c)
    if hypothesis is not Hypothesis.SMOOTH_BRANCH:
        return None
    return report.mu * regular_class(c.table)


def base_change(report: SurfaceReport, cover: Cover) -> BaseChangeReport:
    c = as_abstract(cover)
    hyp = classify_hypothesis(report, c)
    if hyp is Hypothesis.VIOLATED:
        bad = [str(i.fiber.kodaira) for i in branch_incidences(report, c)
               if not i.fiber.kodaira.is_semistable]
        raise HypothesisViolation(
            "additive fiber(s) " + ", ".join(bad) + " over branch points of the cover")
    ups = pullback_fibers(report, c)
    G = c.order
    euler = sum(u.kodaira.euler * u.count for u in ups)
    d_up = 12 * report.deg_L * G
    if euler != d_up:
        raise InconsistentData(f"upstairs Euler total {euler} != {d_up}")
    mu_up = sum(u.kodaira.milnor * u.count for u in ups)
    c_up = sum(u.kodaira.conductor_exp * u.count for u in ups)
    if mu_up != d_up - c_up:
        raise InconsistentData("upstairs Milnor total inconsistent")
    tj = tjurina_class(report, c, hyp)
    if hyp is Hypothesis.SMOOTH_BRANCH:
        if mu_up != G * report.mu or tj.dimension != mu_up:
            raise InconsistentData("Tjurina class dimension differs from the upstairs Milnor total")
    return BaseChangeReport(hyp, tuple(ups), mu_up, c_up, d_up, tj, G)


__all__ = [
    "Hypothesis", "Incidence", "branch_incidences", "classify_hypothesis", "pullback_type",
    "UpstairsFiber", "BaseChangeReport", "pullback_fibers", "tjurina_class", "base_change",
]
