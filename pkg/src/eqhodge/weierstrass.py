"""Short Weierstrass surfaces y^2 = x^3 + A x + B over P^1.

``n`` is deg L; A and B are sections of L^4 and L^6, i.e. polynomials of
degree at most 4n and 6n.  Kodaira types come from the characteristic-0
Tate table keyed on (v(A), v(B), v(disc)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

from .errors import InconsistentData, IsotrivialSurface, NonMinimalModel
from .polyfield import INF, Poly, ValuationCluster, discriminant, uniform_clusters

_ADDITIVE_DATA = {
    # family: (milnor, euler)
    "II": (0, 2),
    "III": (1, 3),
    "IV": (2, 4),
    "IV*": (6, 8),
    "III*": (7, 9),
    "II*": (8, 10),
}


@dataclass(frozen=True)
class Kodaira:
    """Kodaira fiber type. ``family`` is one of I, I*, II, III, IV, IV*, III*, II*."""

    family: str
    m: int = 0

    @property
    def conductor_exp(self) -> int:
        if self.family == "I":
            return 0 if self.m == 0 else 1
        return 2

    @property
    def milnor(self) -> int:
        if self.family == "I":
            return max(self.m - 1, 0)
        if self.family == "I*":
            return self.m + 4
        return _ADDITIVE_DATA[self.family][0]

    @property
    def euler(self) -> int:
        if self.family == "I":
            return self.m
        if self.family == "I*":
            return self.m + 6
        return _ADDITIVE_DATA[self.family][1]

    @property
    def is_smooth(self) -> bool:
        return self.family == "I" and self.m == 0

    @property
    def is_semistable(self) -> bool:
        return self.family == "I"

    @property
    def code(self) -> str:
        """Machine form: I1, Istar2, IVstar, ..."""
        if self.family == "I":
            return f"I{self.m}"
        if self.family == "I*":
            return f"Istar{self.m}"
        return self.family.replace("*", "star")

    @classmethod
    def from_code(cls, code: str) -> "Kodaira":
        if code.startswith("Istar"):
            return cls("I*", int(code[5:]))
        if code.endswith("star"):
            return cls(code[:-4] + "*")
        if code in ("II", "III", "IV"):
            return cls(code)
        if code.startswith("I") and code[1:].isdigit():
            return cls("I", int(code[1:]))
        raise ValueError(f"unknown Kodaira code {code!r}")

    def __str__(self) -> str:
        if self.family == "I":
            return f"I_{self.m}"
        if self.family == "I*":
            return f"I_{self.m}*"
        return self.family


def kodaira_type(vA: float, vB: float, vD: float) -> Kodaira:
    """Kodaira type of a minimal short Weierstrass model in residue characteristic 0."""
    if vD == 0:
        return Kodaira("I", 0)
    if vA == 0:
        if vB != 0:
            raise InconsistentData(f"impossible valuation triple {(vA, vB, vD)}")
        return Kodaira("I", int(vD))
    if vA >= 1 and vB == 1 and vD == 2:
        return Kodaira("II")
    if vA == 1 and vB >= 2 and vD == 3:
        return Kodaira("III")
    if vA >= 2 and vB == 2 and vD == 4:
        return Kodaira("IV")
    if vD == 6 and ((vA == 2 and vB == 3) or (vA >= 3 and vB == 3) or (vA == 2 and vB >= 4)):
        return Kodaira("I*", 0)
    if vA == 2 and vB == 3 and vD > 6:
        return Kodaira("I*", int(vD) - 6)
    if vA >= 3 and vB == 4 and vD == 8:
        return Kodaira("IV*")
    if vA == 3 and vB >= 5 and vD == 9:
        return Kodaira("III*")
    if vA >= 4 and vB == 5 and vD == 10:
        return Kodaira("II*")
    raise InconsistentData(f"valuation triple {(vA, vB, vD)} matches no Kodaira type "
                           "(non-minimal model?)")


@dataclass(frozen=True)
class WeierstrassSurface:
    n: int
    A: Poly
    B: Poly

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("deg L must be positive")
        if self.A.degree > 4 * self.n or self.B.degree > 6 * self.n:
            raise ValueError(f"need deg A <= {4 * self.n}, deg B <= {6 * self.n}")

    @cached_property
    def discriminant(self) -> Poly:
        return discriminant(self.A, self.B)

    @cached_property
    def clusters(self) -> list[ValuationCluster]:
        return uniform_clusters(self.A, self.B, self.n)

    def is_isotrivial(self) -> bool:
        """True when j = 1728 * 4A^3 / disc is constant."""
        D = self.discriminant
        if self.A.is_zero() or self.B.is_zero():
            return True
        A3 = self.A ** 3
        return A3 * D.lead == D * A3.lead


@dataclass(frozen=True)
class Violation:
    cluster: ValuationCluster
    message: str
    suggested_n: Optional[int] = None


def check_minimal(surface: WeierstrassSurface) -> list[Violation]:
    """Empty list iff v(A) <= 3 or v(B) <= 5 at every cluster, infinity included."""
    out = []
    for c in surface.clusters:
        if c.vA >= 4 and c.vB >= 6:
            if c.place.is_infinity:
                suggestion = surface.n - 1 if surface.n > 1 else None
                msg = (f"not minimal at infinity (vA={c.vA}, vB={c.vB}); "
                       f"the same surface has deg L = {surface.n - 1}")
            else:
                suggestion = None
                msg = f"not minimal at {c.place} (vA={c.vA}, vB={c.vB})"
            out.append(Violation(c, msg, suggestion))
    return out


@dataclass(frozen=True)
class FiberData:
    cluster: ValuationCluster
    kodaira: Kodaira

    @property
    def conductor_exp(self) -> int:
        return self.kodaira.conductor_exp

    @property
    def milnor(self) -> int:
        return self.kodaira.milnor

    @property
    def euler(self) -> int:
        return self.kodaira.euler

    @property
    def deg(self) -> int:
        return self.cluster.deg


@dataclass(frozen=True)
class SurfaceReport:
    surface: WeierstrassSurface = field(repr=False)
    deg_L: int
    d_E: int
    c_E: int
    mu: int
    fibers: tuple[FiberData, ...]
    isotrivial: bool = False

    def fiber_at_infinity(self) -> Optional[FiberData]:
        for f in self.fibers:
            if f.cluster.place.is_infinity:
                return f
        return None


def surface_report(surface: WeierstrassSurface, allow_isotrivial: bool = False) -> SurfaceReport:
    """Singular fibers and the global invariants d_E, c_E, mu of a minimal model."""
    bad = check_minimal(surface)
    if bad:
        raise NonMinimalModel("; ".join(v.message for v in bad), bad)
    iso = surface.is_isotrivial()
    if iso and not allow_isotrivial:
        raise IsotrivialSurface("j-invariant is constant (isotrivial fibration)")
    fibers = []
    for c in surface.clusters:
        if c.vD == 0:
            continue
        fibers.append(FiberData(c, kodaira_type(c.vA, c.vB, c.vD)))
    n = surface.n
    d_E = sum(f.deg * int(f.cluster.vD) for f in fibers)
    c_E = sum(f.deg * f.conductor_exp for f in fibers)
    mu = sum(f.deg * f.milnor for f in fibers)
    euler = sum(f.deg * f.euler for f in fibers)
    if d_E != 12 * n or euler != 12 * n or mu != d_E - c_E:
        raise InconsistentData(
            f"surface invariants inconsistent: d_E={d_E}, euler={euler}, mu={mu}, c_E={c_E}")
    for f in fibers:
        if f.euler - f.conductor_exp != f.milnor:
            raise InconsistentData(f"Milnor/Euler/conductor mismatch for {f.kodaira}")
    return SurfaceReport(surface, n, d_E, c_E, mu, tuple(fibers), iso)


__all__ = [
    "INF", "Kodaira", "kodaira_type", "WeierstrassSurface", "Violation", "check_minimal",
    "FiberData", "SurfaceReport", "surface_report",
]
