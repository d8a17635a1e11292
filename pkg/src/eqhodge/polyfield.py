"""Exact univariate polynomials over Q, places of P^1, and valuation clusters.

Clusters group the zeros of the discriminant into pairwise coprime monic
factors on which the valuations of A, B and the discriminant are constant.
Only gcds and derivatives are used; nothing is ever factored.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .errors import InconsistentData, SingularGenericFiber

INF = math.inf

Number = Union[int, Fraction]


def parse_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise ValueError(f"not a rational number: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational number: {x!r}") from exc
    raise ValueError(f"not a rational number: {x!r}")


class Poly:
    """Polynomial in t with Fraction coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [parse_rational(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def t(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "Poly":
        p = cls([lead])
        for r in roots:
            p = p * cls([-parse_rational(r), 1])
        return p

    # -- basic queries ------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else "+"
            else:
                coef = f"{'-' if c < 0 else '+'}{abs(c)}"
                if mono:
                    coef += "*"
            terms.append(coef + mono)
        s = "".join(terms)
        return s[1:] if s.startswith("+") else s

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Poly":
        return _as_poly(other) - self

    def __mul__(self, other) -> "Poly":
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        result, base = Poly([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divrem(self, other: "Poly") -> tuple["Poly", "Poly"]:
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.lead
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coeffs) - 1] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(quot), Poly(rem[: len(other.coeffs) - 1])

    def __floordiv__(self, other) -> "Poly":
        return self.divrem(other)[0]

    def __mod__(self, other) -> "Poly":
        return self.divrem(other)[1]

    def exact_div(self, other) -> "Poly":
        q, r = self.divrem(other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def __call__(self, x: Number) -> Fraction:
        x = parse_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    eval = __call__

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lc = self.lead
        return Poly(c / lc for c in self.coeffs)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    return Poly([x])


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero only when both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: p = lead * prod s_i^i with s_i squarefree, pairwise coprime.

    Returns the non-constant parts as ``(s_i, i)`` sorted by multiplicity.
    """
    if p.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    out: list[tuple[Poly, int]] = []
    dp = p.derivative()
    a = gcd(p, dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.derivative()
    i = 1
    while not b.is_constant():
        a = gcd(b, d)
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        if not a.is_constant():
            out.append((a.monic(), i))
        i += 1
    return out


def split_by_valuation(s: Poly, p: Poly) -> list[tuple[Poly, float]]:
    """Split squarefree ``s`` into factors on whose roots v(p) is constant.

    Uses v_c(p) >= k+1 iff c is a root of p, p', ..., p^(k) (characteristic 0).
    """
    if p.is_zero():
        return [(s.monic(), INF)]
    out = []
    cur = s.monic()
    deriv = p
    k = 0
    while not cur.is_constant():
        g = gcd(cur, deriv)
        piece = cur.exact_div(g)
        if not piece.is_constant():
            out.append((piece.monic(), k))
        cur = g
        deriv = deriv.derivative()
        k += 1
    return out


@dataclass(frozen=True)
class Place:
    """A finite place cluster (monic squarefree factor) or the place at infinity."""

    factor: Optional[Poly] = None

    @property
    def is_infinity(self) -> bool:
        return self.factor is None

    @property
    def degree(self) -> int:
        return 1 if self.factor is None else self.factor.degree

    @classmethod
    def at(cls, c) -> "Place":
        return cls(Poly([-parse_rational(c), 1]))

    def label(self) -> str:
        if self.factor is None:
            return "inf"
        if self.factor.degree == 1:
            return str(-self.factor[0])
        return f"roots({self.factor})"

    def __str__(self) -> str:
        return self.label()


INFINITY = Place()


@dataclass(frozen=True)
class ValuationCluster:
    place: Place
    deg: int
    vA: float
    vB: float
    vD: float

    def triple(self) -> tuple[float, float, float]:
        return (self.vA, self.vB, self.vD)


def _v_inf(p: Poly, bound: int) -> float:
    return INF if p.is_zero() else bound - p.degree


def discriminant(A: Poly, B: Poly) -> Poly:
    """4A^3 + 27B^2 (the unit -16 is dropped)."""
    return 4 * A ** 3 + 27 * B ** 2


def uniform_clusters(A: Poly, B: Poly, n: int) -> list[ValuationCluster]:
    """Discriminant clusters with uniform (vA, vB, vD), plus the cluster at infinity."""
    if A.degree > 4 * n or B.degree > 6 * n:
        raise ValueError(f"deg A <= {4 * n} and deg B <= {6 * n} required for n = {n}")
    D = discriminant(A, B)
    if D.is_zero():
        raise SingularGenericFiber("discriminant 4A^3+27B^2 vanishes identically")
    out = []
    for s, vd in squarefree_decomposition(D):
        for sa, va in split_by_valuation(s, A):
            for sb, vb in split_by_valuation(sa, B):
                out.append(ValuationCluster(Place(sb), sb.degree, va, vb, vd))
    out.append(ValuationCluster(INFINITY, 1, _v_inf(A, 4 * n), _v_inf(B, 6 * n),
                                _v_inf(D, 12 * n)))
    total = sum(c.deg * c.vD for c in out)
    if total != 12 * n:
        raise InconsistentData(f"discriminant divisor degree {total} != {12 * n}")
    return out


def valuation_at_point(p: Poly, c, bound: Optional[int] = None) -> float:
    """Order of vanishing of p at t = c, or at infinity (c = inf) relative to ``bound``."""
    if c is None or c == INF or (isinstance(c, str) and c.strip().lower() in ("inf", "infinity")):
        if bound is None:
            raise ValueError("valuation at infinity needs the ambient degree bound")
        return _v_inf(p, bound)
    if p.is_zero():
        return INF
    lin = Poly([-parse_rational(c), 1])
    k = 0
    while True:
        q, r = p.divrem(lin)
        if not r.is_zero():
            return k
        p, k = q, k + 1
