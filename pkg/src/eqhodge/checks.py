"""Cross-module consistency checks run by ``check_level = "full"`` / ``--check``."""

from __future__ import annotations

from typing import Optional

from .chi_engine import (
    BundleSpec, SheafTerm, SymbolicClass, evaluate, full_diamond, pushforward_chi,
    weierstrass_lemma_vectors,
)
from .covers import CoverReport, SuperellipticCover, h0_canonical, superelliptic_differentials_oracle
from .errors import InconsistentData
from .repring import VirtualModule, zero_class

# (cG per unit n, coefficient of chi(O)) for the Weierstrass bundle
WEIERSTRASS_VECTORS = {
    "K_P(W')": (1, -1),
    "K_P(2W')": (20, -10),
    "Omega2_phi(W')": (1, 1),
    "phi*K(W')": (10, -10),
    "phi*(E(x)K)(W')(-1)": (18, -18),
    "Omega2_P(W')": (9, -7),
}


def check_regression(ns=range(1, 6)) -> list[str]:
    done = []
    for n in ns:
        got = weierstrass_lemma_vectors(BundleSpec.weierstrass(n))
        for name, (a, b) in WEIERSTRASS_VECTORS.items():
            if got[name].identified_pair() != (a * n, b):
                raise InconsistentData(
                    f"regression vector {name} at n={n}: {got[name].identified_pair()} != {(a * n, b)}")
        done.append(f"regression n={n}")
    return done


def check_oracle(cover) -> list[str]:
    if not isinstance(cover, SuperellipticCover):
        return []
    oracle = superelliptic_differentials_oracle(cover.m, cover.f)
    if oracle != h0_canonical(cover):
        raise InconsistentData(
            f"differentials oracle {oracle.mult} != H^0(K) {h0_canonical(cover).mult}")
    return ["differentials oracle"]


def check_diamond(bundle: BundleSpec, cover: CoverReport,
                  tjurina: Optional[VirtualModule] = None) -> list[str]:
    n = bundle.dim
    diamond = full_diamond(bundle)
    ev = [[evaluate(c, cover) for c in row] for row in diamond]
    for p in range(n + 1):
        for q in range(n + 1):
            if not ev[p][q].is_honest():
                raise InconsistentData(f"H^{{{p},{q}}} has a negative multiplicity {ev[p][q].mult}")
            if ev[q][p] != ev[p][q].dual():
                raise InconsistentData(f"Hodge symmetry fails at ({p},{q})")
    out = ["diamond positivity", "Hodge symmetry"]
    if tjurina is not None and n == 2:
        sing = evaluate(full_diamond(bundle, singular=True)[1][1], cover, tjurina)
        if not sing.is_honest():
            raise InconsistentData("singular H^{1,1} has a negative multiplicity")
        out.append("singular (1,1) slot")
    return out


def euler_oracle(bundle: BundleSpec, cover: CoverReport) -> tuple[VirtualModule, VirtualModule]:
    """(sum_q (-1)^q [H^{0,q}(X')] from the diamond, chi(O_P) - chi(O_P(-X')) directly)."""
    diamond = full_diamond(bundle)
    from_diamond = sum((((-1) ** q) * evaluate(diamond[0][q], cover)
                        for q in range(bundle.dim + 1)), zero_class(cover.table))
    direct = (pushforward_chi(SheafTerm(0, False, 0), bundle)
              - pushforward_chi(SheafTerm(-bundle.ell, False, -bundle.d), bundle))
    return from_diamond, evaluate(SymbolicClass.from_chi(direct), cover)
