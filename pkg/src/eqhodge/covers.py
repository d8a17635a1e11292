"""Galois covers C' -> C and their K(C[G]) invariants.

Conventions
-----------
G acts on functions and forms on C' by pullback, and the character of a
module such as H^0(K_{C'}) is ``g -> trace(g^*)``.  The inertia generator
recorded at a branch point is the canonical one: the element whose pullback
multiplies a local parameter at a point above the branch point by
exp(2 pi i / e).  For y^m = f(t) with G = Z/m generated by y -> exp(2 pi i/m) y
that is the generator itself at every root of f, and its (-deg f)-th power at
infinity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Union

from .errors import InconsistentData
from .polyfield import INFINITY, Place, Poly, gcd, squarefree_decomposition
from .repring import (
    CharacterTable,
    FiniteGroup,
    VirtualModule,
    cyclic_table,
    eigenvalue_multiplicity,
    induced_trivial,
    regular_class,
    trivial_class,
    zero_class,
)


@dataclass(frozen=True)
class Branch:
    """Branch locus entry: a place (possibly several geometric points) or an abstract label."""

    place: Union[Place, str]
    inertia: int

    @property
    def npoints(self) -> int:
        return 1 if isinstance(self.place, str) else self.place.degree


@dataclass(eq=False)
class AbstractCover:
    table: CharacterTable
    genus: int
    branch: tuple[Branch, ...] = ()

    def __post_init__(self):
        self.branch = tuple(self.branch)
        g = self.table.group
        if self.genus < 0:
            raise InconsistentData("base genus must be non-negative")
        labels, places = set(), []
        for b in self.branch:
            if not 0 <= b.inertia < g.order:
                raise InconsistentData(f"inertia element {b.inertia} not in G")
            if b.inertia == g.identity:
                raise InconsistentData("inertia generator must not be the identity")
            if isinstance(b.place, str):
                if b.place in labels:
                    raise InconsistentData(f"branch label {b.place!r} repeated")
                labels.add(b.place)
            else:
                for other in places:
                    if other.is_infinity and b.place.is_infinity:
                        raise InconsistentData("infinity listed twice as a branch point")
                    if (not other.is_infinity and not b.place.is_infinity
                            and gcd(other.factor, b.place.factor).degree > 0):
                        raise InconsistentData("branch places are not pairwise distinct")
                if not b.place.is_infinity:
                    sf = squarefree_decomposition(b.place.factor)
                    if len(sf) != 1 or sf[0][1] != 1:
                        raise InconsistentData("branch place factor must be squarefree")
                places.append(b.place)

    @property
    def group(self) -> FiniteGroup:
        return self.table.group

    @property
    def order(self) -> int:
        return self.table.group.order

    @property
    def s(self) -> int:
        return sum(b.npoints for b in self.branch)

    @property
    def is_ramified(self) -> bool:
        return bool(self.branch)


@dataclass(eq=False)
class SuperellipticCover:
    """y^m = f(t) over P^1 with G = Z/m acting by y -> exp(2 pi i/m) y."""

    m: int
    f: Poly

    def __post_init__(self):
        if self.m < 2:
            raise InconsistentData("superelliptic cover needs m >= 2")
        if self.f.degree < 1:
            raise InconsistentData("f must be non-constant")
        sf = squarefree_decomposition(self.f)
        if len(sf) != 1 or sf[0][1] != 1:
            raise InconsistentData("f must be squarefree")
        # local monodromy exponents: 1 at each root, -deg f at infinity
        if math.gcd(self.m, 1, self.f.degree) != 1:
            raise InconsistentData("cover is disconnected")

    @property
    def table(self) -> CharacterTable:
        return cyclic_table(self.m)

    @cached_property
    def abstract(self) -> AbstractCover:
        m, d = self.m, self.f.degree
        branch = [Branch(Place(self.f.monic()), 1)]
        if d % m:
            branch.append(Branch(INFINITY, (-d) % m))
        return AbstractCover(self.table, 0, tuple(branch))

    def ramification_at_infinity(self) -> int:
        return self.m // math.gcd(self.m, self.f.degree)


Cover = Union[AbstractCover, SuperellipticCover]


def as_abstract(cover: Cover) -> AbstractCover:
    return cover.abstract if isinstance(cover, SuperellipticCover) else cover


def genus_up(cover: Cover) -> int:
    """Riemann-Hurwitz: 2g' - 2 = |G|(2g - 2) + sum_q (|G|/e_q)(e_q - 1)."""
    c = as_abstract(cover)
    G = c.order
    total = G * (2 * c.genus - 2)
    for b in c.branch:
        e = c.group.element_order(b.inertia)
        total += b.npoints * (G // e) * (e - 1)
    if total % 2:
        raise InconsistentData("Riemann-Hurwitz gives a non-integral genus")
    g = total // 2 + 1
    if g < 0:
        raise InconsistentData("Riemann-Hurwitz gives a negative genus")
    return g


def h0_OZ(cover: Cover) -> VirtualModule:
    """[H^0(O_Z)] = sum over branch points of Ind_{I_q}^G 1."""
    c = as_abstract(cover)
    out = zero_class(c.table)
    for b in c.branch:
        out = out + b.npoints * induced_trivial(c.table, b.inertia)
    return out


def lemcan_symmetric(cover: Cover) -> VirtualModule:
    """[H^0(K)] + [H^0(K)]^dual as given by the ramification sequence.

    Ramified: 2[C] + (2g - 2 + s)[C[G]] - [H^0(O_Z)];
    unramified: 2[C] + (2g - 2)[C[G]].
    """
    c = as_abstract(cover)
    reg, triv = regular_class(c.table), trivial_class(c.table)
    if not c.is_ramified:
        return 2 * triv + (2 * c.genus - 2) * reg
    return 2 * triv + (2 * c.genus - 2 + c.s) * reg - h0_OZ(c)


def _chevalley_weil(c: AbstractCover) -> VirtualModule:
    t = c.table
    g = c.group
    mult = []
    for i in range(t.size):
        acc = Fraction(t.dims[i] * (c.genus - 1))
        if i == t.trivial_index:
            acc += 1
        for b in c.branch:
            e = g.element_order(b.inertia)
            local = Fraction(0)
            for k in range(1, e):
                nk = eigenvalue_multiplicity(t, i, b.inertia, k)
                local += Fraction(nk * (e - k), e)
            acc += b.npoints * local
        if acc.denominator != 1:
            raise InconsistentData(
                f"inertia data gives a fractional multiplicity {acc} for character {i}; "
                "check that each inertia element is the canonical generator and that "
                "the local monodromies multiply to a consistent cover")
        mult.append(int(acc))
    return VirtualModule(t, tuple(mult))


def h0_canonical(cover: Cover) -> VirtualModule:
    """[H^0(C', K_{C'})] as a G-module.

    The ramification sequence pins down h + h^dual.  When every irreducible
    character is real this determines h (halve it); otherwise the local
    eigenvalue count at each branch point is needed to separate a character
    from its conjugate.  Both routes run whenever they apply and must agree.
    """
    c = as_abstract(cover)
    sym = lemcan_symmetric(c)
    if c.table.all_real():
        h = sym.halve()
    else:
        h = _chevalley_weil(c)
        if h + h.dual() != sym:
            raise InconsistentData("local eigenvalue count disagrees with the ramification sequence")
    if c.table.all_real() and c.is_ramified:
        h_cw = _chevalley_weil(c)
        if h_cw != h:
            raise InconsistentData("local eigenvalue count disagrees with the ramification sequence")
    if not h.is_honest():
        raise InconsistentData(f"negative multiplicity in H^0(K): {h.mult}")
    if h.dimension != genus_up(c):
        raise InconsistentData("dim H^0(K) differs from the Riemann-Hurwitz genus")
    return h


def chi_O(cover: Cover) -> VirtualModule:
    """chi_G(O_{C'}) = [C] - [H^1(O)], with H^1(O) dual to H^0(K)."""
    c = as_abstract(cover)
    return trivial_class(c.table) - h0_canonical(c).dual()


@dataclass(frozen=True)
class CoverReport:
    cover: Cover = field(repr=False, compare=False)
    genus_up: int
    s: int
    h0_OZ: VirtualModule
    h0_K: VirtualModule
    chi_O: VirtualModule

    @property
    def table(self) -> CharacterTable:
        return as_abstract(self.cover).table


def cover_report(cover: Cover) -> CoverReport:
    c = as_abstract(cover)
    g1 = genus_up(c)
    oz = h0_OZ(c)
    hk = h0_canonical(c)
    chi = trivial_class(c.table) - hk.dual()
    if oz.dimension != sum(b.npoints * c.order // c.group.element_order(b.inertia)
                           for b in c.branch):
        raise InconsistentData("dim H^0(O_Z) differs from the number of ramification points")
    if chi.dimension != 1 - g1:
        raise InconsistentData("dim chi(O) differs from 1 - g'")
    return CoverReport(cover, g1, c.s, oz, hk, chi)


def _v_inf_data(m: int, d: int) -> tuple[int, int, int]:
    """(points over infinity, ramification e, valuation of y) for y^m = f, deg f = d."""
    g = math.gcd(m, d)
    e = m // g
    return g, e, -(d // g)


def superelliptic_differentials_oracle(m: int, f: Poly) -> VirtualModule:
    """Enumerate holomorphic forms t^i y^-j dt on y^m = f(t) and read off characters.

    Valuations: at a point over a root of f (simple, totally ramified) the
    local parameter is y, so v(t - root) = m, v(y) = 1, v(dt) = m - 1.  Over
    infinity there are gcd(m, deg f) points with ramification e; there
    v(t) = -e, v(y) = -deg f / gcd and v(dt) = -e - 1.  The pullback by the
    generator y -> zeta y multiplies t^i y^-j dt by zeta^-j, so the form spans
    the character with index -j mod m.
    """
    cover = SuperellipticCover(m, f)
    d = f.degree
    _, e_inf, vy_inf = _v_inf_data(m, d)
    # places over roots of f: (v(t), v(y), v(dt)); t vanishes only over the root 0
    root_places = [(0, 1, m - 1)]
    if f(0) == 0:
        root_places.append((m, 1, m - 1))
    mult = [0] * m
    count = 0
    for j in range(1, m):
        for i in range(0, d + 1):
            divisor = [i * vt - j * vy + vdt for vt, vy, vdt in root_places]
            divisor.append(-i * e_inf - j * vy_inf - e_inf - 1)
            if min(divisor) >= 0:
                mult[(-j) % m] += 1
                count += 1
    table = cover.table
    if count != genus_up(cover):
        raise InconsistentData(f"found {count} holomorphic forms, genus is {genus_up(cover)}")
    return VirtualModule(table, tuple(mult))
