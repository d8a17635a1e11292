"""Independent reference computations used by the tests.

Nothing here calls into the clustering, Kodaira table or symbolic engine of
the package; each oracle recomputes its quantity from a different route.
"""

from __future__ import annotations

from itertools import product

import sympy as sp

from eqhodge.repring import CharacterTable, FiniteGroup, VirtualModule

T = sp.Symbol("t")


# --- group theory -----------------------------------------------------------

def brute_conjugacy_classes(group: FiniteGroup) -> list[frozenset]:
    n = group.order
    seen, out = set(), []
    for x in range(n):
        if x in seen:
            continue
        orbit = frozenset(group.mul(group.mul(g, x), group.inverse(g)) for g in range(n))
        seen |= orbit
        out.append(orbit)
    return out


def coset_permutation_module(table: CharacterTable, generator: int) -> VirtualModule:
    """Permutation character of G on G/<generator>, decomposed."""
    g = table.group
    H = {g.identity}
    x = generator
    while x != g.identity:
        H.add(x)
        x = g.mul(x, generator)
    cosets = {frozenset(g.mul(y, h) for h in H) for y in range(g.order)}
    chi = []
    for cl in table.classes:
        x = cl[0]
        chi.append(sum(1 for c in cosets if frozenset(g.mul(x, y) for y in c) == c))
    return VirtualModule(table, table.decompose(chi))


def s3_group() -> tuple[FiniteGroup, list]:
    """S_3 from permutations of {0,1,2}, and its character matrix (one column per element)."""
    perms = [(0, 1, 2), (1, 0, 2), (0, 2, 1), (2, 1, 0), (1, 2, 0), (2, 0, 1)]
    idx = {p: i for i, p in enumerate(perms)}
    table = [[idx[tuple(a[b[k]] for k in range(3))] for b in perms] for a in perms]

    def sign(p):
        inv = sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j])
        return (-1) ** inv

    def fixed(p):
        return sum(1 for i in range(3) if p[i] == i)

    chars = [[1] * 6, [sign(p) for p in perms], [fixed(p) - 1 for p in perms]]
    return FiniteGroup(table, idx[(0, 1, 2)], "S3"), chars


# --- Weierstrass local data -------------------------------------------------

def kodaira_by_j(vA, vB, vD) -> str:
    """Kodaira code of a minimal model from v(j) = 3 v(A) - v(disc) and v(disc).

    Potentially multiplicative (v(j) < 0): I_m if the model is already
    multiplicative (v(A) = 0), else I_m*; potentially good: v(disc) alone.
    """
    if vD == 0:
        return "I0"
    vj = 3 * vA - vD  # +inf when A = 0 (j = 0)
    if vj < 0:
        m = -vj
        return f"I{m}" if vA == 0 else f"Istar{m}"
    return {2: "II", 3: "III", 4: "IV", 6: "Istar0", 8: "IVstar", 9: "IIIstar", 10: "IIstar"}[vD]


def _sym(coeffs) -> sp.Poly:
    return sp.Poly(list(reversed([sp.Rational(c.numerator, c.denominator)
                                  for c in coeffs])) or [0], T, domain="QQ")


def _mult(p: sp.Poly, q: sp.Poly) -> float:
    if p.is_zero:
        return float("inf")
    k = 0
    while True:
        quo, rem = sp.div(p, q)
        if not rem.is_zero:
            return k
        p, k = quo, k + 1


def sympy_fibers(n: int, A, B) -> list[tuple[str, int, tuple]]:
    """[(kodaira code, degree of the irreducible factor, (vA, vB, vD))] incl. infinity."""
    a, b = _sym(A.coeffs), _sym(B.coeffs)
    d = 4 * a ** 3 + 27 * b ** 2
    out = []
    for fac, _ in sp.factor_list(d.as_expr(), T)[1]:
        q = sp.Poly(fac, T, domain="QQ")
        trip = (_mult(a, q), _mult(b, q), _mult(d, q))
        out.append((kodaira_by_j(*trip), q.degree(), trip))
    deg = lambda p: -1 if p.is_zero else p.degree()
    trip = (4 * n - deg(a) if not a.is_zero else float("inf"),
            6 * n - deg(b) if not b.is_zero else float("inf"), 12 * n - deg(d))
    if trip[2]:
        out.append((kodaira_by_j(*trip), 1, trip))
    return out


# --- Euler characteristics on P(E) --------------------------------------------

def monomials(t: int, r: int):
    for e in product(range(t + 1), repeat=r):
        if sum(e) == t:
            yield e


def chi_oracle(degC: int, kflag: bool, t: int, degrees) -> tuple[int, int, int]:
    """(cG, cO, cO_dual) by explicit monomials and relative duality.

    R^0 phi_* O(t) = Sym^t E for t >= 0; R^{r-1} phi_* O(t) = (Sym^{-t-r} E (x) det E)^v
    for t <= -r.  A line bundle M on C' contributes deg M [C[G]] + chi(O) and
    M (x) K contributes deg M [C[G]] - chi(O)^dual.
    """
    r = len(degrees)
    if t >= 0:
        mons, sign, shift, flip = list(monomials(t, r)), 1, degC, 1
    elif t <= -r:
        mons, sign, shift, flip = list(monomials(-t - r, r)), (-1) ** (r - 1), degC - sum(degrees), -1
    else:
        return (0, 0, 0)
    cG = sum(shift + flip * sum(i * a for i, a in zip(m, degrees)) for m in mons)
    k = len(mons)
    cO, cOd = (0, -k) if kflag else (k, 0)
    return (sign * cG, sign * cO, sign * cOd)

