"""Symbolic equivariant Euler characteristics on split projective bundles.

Setting: E = O(a_1) + ... + O(a_r) on C (degrees a_j), P = P(f^*E) over C'
with phi_* O(1) = f^*E, and a hypersurface X' in |phi^* f^* L_0 (d)| with
deg L_0 = ``ell``.  Every Euler characteristic reduces, through
phi_* O(t) = Sym^t, to a sum of pulled-back line bundles, each contributing

    chi_G(f^*M)         = deg M [C[G]] + chi_G(O_{C'})
    chi_G(f^*M (x) K)   = deg M [C[G]] - chi_G(O_{C'})^dual

The dual is tracked separately (``cOd``, ``b_dual``) because H^1(O) is the dual of
H^0(K); identifying the two, as is customary, is only valid when H^0(K) is
self-dual.  ``identified_pair``/``coefficients`` add the two back together.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional

from .covers import CoverReport
from .errors import ConfigError, TjurinaUnavailable
from .repring import VirtualModule, regular_class, trivial_class


@dataclass(frozen=True)
class BundleSpec:
    degrees: tuple[int, ...]
    ell: int
    d: int
    assumptions_asserted: bool = True

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(a) for a in self.degrees))
        if len(self.degrees) < 3:
            raise ConfigError("the bundle needs rank r >= 3")
        if self.d < 1:
            raise ConfigError("fiber degree d must be positive")

    @classmethod
    def weierstrass(cls, n: int) -> "BundleSpec":
        """O + L^-2 + L^-3 with W in |L^6 (3)|, deg L = n."""
        return cls((0, -2 * n, -3 * n), 6 * n, 3)

    @property
    def r(self) -> int:
        return len(self.degrees)

    @property
    def dim(self) -> int:
        """Dimension of the hypersurface X'."""
        return self.r - 1

    @property
    def det_degree(self) -> int:
        return sum(self.degrees)


@dataclass(frozen=True)
class SheafTerm:
    """mult * phi^*(f^*N (x) K^kflag)(t) with deg N = degC."""

    degC: int
    kflag: bool
    t: int
    mult: int = 1


@dataclass(frozen=True)
class SymbolicChi:
    """cG [C[G]] + cO chi_G(O) + cOd chi_G(O)^dual."""

    cG: int = 0
    cO: int = 0
    cOd: int = 0

    def __add__(self, o: "SymbolicChi") -> "SymbolicChi":
        return SymbolicChi(self.cG + o.cG, self.cO + o.cO, self.cOd + o.cOd)

    def __sub__(self, o: "SymbolicChi") -> "SymbolicChi":
        return SymbolicChi(self.cG - o.cG, self.cO - o.cO, self.cOd - o.cOd)

    def __neg__(self) -> "SymbolicChi":
        return SymbolicChi(-self.cG, -self.cO, -self.cOd)

    def __mul__(self, k: int) -> "SymbolicChi":
        return SymbolicChi(k * self.cG, k * self.cO, k * self.cOd)

    __rmul__ = __mul__

    def dual(self) -> "SymbolicChi":
        return SymbolicChi(self.cG, self.cOd, self.cO)

    def identified_pair(self) -> tuple[int, int]:
        """(coefficient of [C[G]], coefficient of chi_G(O)) with O and its dual identified."""
        return (self.cG, self.cO + self.cOd)


ZERO_CHI = SymbolicChi()


@dataclass(frozen=True)
class SymbolicClass:
    """a [C[G]] + b chi_G(O) + b_dual chi_G(O)^dual + c [C] - delta [H^0(T)]."""

    a: int = 0
    b: int = 0
    c: int = 0
    delta: int = 0
    b_dual: int = 0

    def __add__(self, o: "SymbolicClass") -> "SymbolicClass":
        return SymbolicClass(self.a + o.a, self.b + o.b, self.c + o.c,
                             self.delta + o.delta, self.b_dual + o.b_dual)

    def __sub__(self, o: "SymbolicClass") -> "SymbolicClass":
        return self + (-1) * o

    def __mul__(self, k: int) -> "SymbolicClass":
        return SymbolicClass(k * self.a, k * self.b, k * self.c, k * self.delta,
                             k * self.b_dual)

    __rmul__ = __mul__

    @classmethod
    def from_chi(cls, chi: SymbolicChi) -> "SymbolicClass":
        return cls(a=chi.cG, b=chi.cO, b_dual=chi.cOd)

    def dual(self) -> "SymbolicClass":
        return SymbolicClass(self.a, self.b_dual, self.c, self.delta, self.b)

    def coefficients(self) -> tuple[int, int, int, int]:
        """(a, b, c, delta) with chi_G(O) and its dual identified."""
        return (self.a, self.b + self.b_dual, self.c, self.delta)


TRIVIAL_CLASS = SymbolicClass(c=1)
H0K_CLASS = SymbolicClass(c=1, b_dual=-1)      # [H^0(K_{C'})] = [C] - chi^dual
H01_CLASS = SymbolicClass(c=1, b=-1)           # [H^1(O_{C'})] = [C] - chi


def monomial_count(t: int, r: int) -> int:
    return comb(t + r - 1, r - 1)


def pushforward_chi(term: SheafTerm, bundle: BundleSpec) -> SymbolicChi:
    """chi_G of mult * phi^*(f^*N (x) K^kflag)(t) on P."""
    r, t = bundle.r, term.t
    if t >= 0:
        count = monomial_count(t, r)
        # each variable carries total exponent count*t/r over all monomials of degree t
        cG = count * term.degC + comb(t + r - 1, r) * bundle.det_degree
        chi = SymbolicChi(cG, 0, -count) if term.kflag else SymbolicChi(cG, count, 0)
    elif t > -r:
        chi = ZERO_CHI
    else:
        # Serre duality on P: chi(F) = (-1)^r chi(F^v (x) K_P)^dual,
        # K_P = phi^*(det f^*E (x) K)(-r)
        dual_term = SheafTerm(bundle.det_degree - term.degC, not term.kflag, -t - r)
        chi = ((-1) ** r) * pushforward_chi(dual_term, bundle).dual()
    return term.mult * chi


def wedge_degrees(bundle: BundleSpec, t: int) -> list[int]:
    """Degrees of the summands of wedge^t E (t-subset sums)."""
    if not 0 <= t <= bundle.r:
        raise ValueError(f"wedge power {t} out of range 0..{bundle.r}")
    return [sum(c) for c in combinations(bundle.degrees, t)]


def chi_omega_vertical(t: int, twist: SheafTerm, bundle: BundleSpec) -> SymbolicChi:
    """chi_G(Omega^t_phi (x) twist) from 0 -> Omega^t -> wedge^t(phi^*E)(-t) -> Omega^{t-1} -> 0."""
    if t < 0 or t >= bundle.r:
        return ZERO_CHI
    acc = pushforward_chi(twist, bundle)  # Omega^0 = O
    for s in range(1, t + 1):
        wedge = ZERO_CHI
        for w in wedge_degrees(bundle, s):
            wedge = wedge + pushforward_chi(
                SheafTerm(twist.degC + w, twist.kflag, twist.t - s, twist.mult), bundle)
        acc = wedge - acc
    return acc


def hypersurface_twist(bundle: BundleSpec, k: int, kflag: bool = False) -> SheafTerm:
    """O(kX') (optionally tensored with phi^*K_{C'})."""
    return SheafTerm(k * bundle.ell, kflag, k * bundle.d)


def chi_omega_total(t: int, k: int, bundle: BundleSpec) -> SymbolicChi:
    """chi_G(Omega^t_P(kX')) via 0 -> phi^*K (x) Omega^{t-1}_phi -> Omega^t_P -> Omega^t_phi -> 0."""
    if t < 0 or t > bundle.r:
        return ZERO_CHI
    return (chi_omega_vertical(t - 1, hypersurface_twist(bundle, k, True), bundle)
            + chi_omega_vertical(t, hypersurface_twist(bundle, k, False), bundle))


def canonical_twist_chi(k: int, bundle: BundleSpec) -> SymbolicChi:
    """chi_G(K_P(kX')) directly from K_P = phi^*(det f^*E (x) K_{C'})(-r)."""
    return pushforward_chi(
        SheafTerm(bundle.det_degree + k * bundle.ell, True, k * bundle.d - bundle.r), bundle)


def hodge_of_bundle(p: int, q: int, bundle: BundleSpec) -> SymbolicClass:
    """[H^{p,q}(P)] for the P^{r-1}-bundle P over C'."""
    r = bundle.r
    if not (0 <= p <= r and 0 <= q <= r):
        raise ValueError(f"Hodge index ({p},{q}) out of range for dim P = {r}")
    if p == q:
        return SymbolicClass(c=1) if p in (0, r) else SymbolicClass(c=2)
    if p == q + 1:
        return H0K_CLASS          # H^{1,0}(C') x h^q
    if q == p + 1:
        return H01_CLASS          # H^{0,1}(C') x h^p
    return SymbolicClass()


def _residue_sum(p: int, bundle: BundleSpec) -> SymbolicChi:
    n = bundle.dim
    acc = ZERO_CHI
    for k in range(1, n - p + 2):
        acc = acc + ((-1) ** k) * chi_omega_total(p + k, k, bundle)
    for k in range(1, n - p + 1):
        acc = acc + ((-1) ** k) * chi_omega_total(p + 1 + k, k, bundle)
    return acc


def hodge_middle(p: int, bundle: BundleSpec, singular: bool = False) -> SymbolicClass:
    """[H^{p, n-p}(X')], n = dim X', from the log-pole filtration on P minus X'.

    For p >= 1:
        [H^{p,n-p}(X')] = [H^{p,n-p}(P)] - (-1)^{n-p} S_p,
    and for p = 0:
        [H^{0,n}(X')] = (-1)^n ([C] - [H^0(K_{C'})] - S_0),
    where S_p = sum_{k=1}^{n-p+1} (-1)^k chi(Omega^{p+k}(kX'))
              + sum_{k=1}^{n-p} (-1)^k chi(Omega^{p+1+k}(kX')).
    With ``singular`` (surfaces only) the (1,1) slot is that of the singular
    model W', i.e. minus [H^0(T)].
    """
    n = bundle.dim
    if not bundle.assumptions_asserted:
        raise ConfigError("Lefschetz-type assumptions on X' must be asserted")
    if singular and bundle.r != 3:
        raise ConfigError("singular models are supported for surfaces (r = 3) only")
    if not 0 <= p <= n:
        raise ValueError(f"p = {p} out of range 0..{n}")
    S = SymbolicClass.from_chi(_residue_sum(p, bundle))
    if p >= 1:
        out = hodge_of_bundle(p, n - p, bundle) - ((-1) ** (n - p)) * S
    else:
        out = ((-1) ** n) * (TRIVIAL_CLASS - H0K_CLASS - S)
    if singular and p == 1:
        out = out + SymbolicClass(delta=1)
    return out


def full_diamond(bundle: BundleSpec, singular: bool = False) -> list[list[SymbolicClass]]:
    """diamond[p][q] = [H^{p,q}(X')] for 0 <= p, q <= dim X'."""
    n = bundle.dim
    out = [[SymbolicClass()] * (n + 1) for _ in range(n + 1)]
    for p in range(n + 1):
        for q in range(n + 1):
            if p + q < n:
                out[p][q] = hodge_of_bundle(p, q, bundle)
            elif p + q == n:
                out[p][q] = hodge_middle(p, bundle, singular)
    for p in range(n + 1):
        for q in range(n + 1):
            if p + q > n:
                out[p][q] = out[n - p][n - q].dual()
    return out


def evaluate(cls: SymbolicClass, cover: CoverReport,
             tjurina: Optional[VirtualModule] = None) -> VirtualModule:
    t = cover.table
    if cls.delta and tjurina is None:
        raise TjurinaUnavailable("class involves [H^0(T)] but the Tjurina class is unavailable")
    out = (cls.a * regular_class(t) + cls.b * cover.chi_O + cls.b_dual * cover.chi_O.dual()
           + cls.c * trivial_class(t))
    if cls.delta:
        out = out - cls.delta * tjurina
    return out


def evaluate_diamond(diamond, cover: CoverReport,
                     tjurina: Optional[VirtualModule] = None) -> list[list[VirtualModule]]:
    return [[evaluate(c, cover, tjurina) for c in row] for row in diamond]


# The six Euler characteristics used for the Weierstrass family, as callables of a bundle.
def weierstrass_lemma_vectors(bundle: BundleSpec) -> dict[str, SymbolicChi]:
    ell, d = bundle.ell, bundle.d
    K_W = hypersurface_twist(bundle, 1, True)
    e_k = ZERO_CHI
    for a in bundle.degrees:
        e_k = e_k + pushforward_chi(SheafTerm(ell + a, True, d - 1), bundle)
    return {
        "K_P(W')": chi_omega_total(bundle.r, 1, bundle),
        "K_P(2W')": chi_omega_total(bundle.r, 2, bundle),
        "Omega2_phi(W')": chi_omega_vertical(2, hypersurface_twist(bundle, 1), bundle),
        "phi*K(W')": pushforward_chi(K_W, bundle),
        "phi*(E(x)K)(W')(-1)": e_k,
        "Omega2_P(W')": chi_omega_total(2, 1, bundle),
    }
