from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from eqhodge.errors import SingularGenericFiber
from eqhodge.polyfield import (
    INF, INFINITY, Place, Poly, discriminant, gcd, parse_rational, split_by_valuation,
    squarefree_decomposition, uniform_clusters, valuation_at_point,
)

t = Poly.t()
small = st.integers(-6, 6)
polys = st.lists(small, min_size=0, max_size=6).map(Poly)
nonzero = polys.filter(lambda p: not p.is_zero())


def test_examples():
    assert gcd(t ** 2 - 1, t ** 2 - 2 * t + 1) == t - 1
    assert (4 * t ** 3 + 27 * t ** 2)(1) == 31
    q, r = (t ** 3).divrem(t - 1)
    assert q == t ** 2 + t + 1 and r == Poly([1])
    with pytest.raises(ZeroDivisionError):
        t.divrem(Poly())


def test_parse_rational():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational(-2) == -2
    with pytest.raises(ValueError):
        parse_rational("x")
    with pytest.raises(ValueError):
        parse_rational(True)


def test_squarefree_examples():
    assert squarefree_decomposition(t ** 3 * (t - 1)) == [(t - 1, 1), (t, 3)]
    assert squarefree_decomposition(t ** 2 + 1) == [(t ** 2 + 1, 1)]
    p = (t ** 2 - 2) ** 2 * (t + 1)
    assert squarefree_decomposition(p) == [(t + 1, 1), (t ** 2 - 2, 2)]


@given(polys, polys)
def test_ring_laws(a, b):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b).derivative() == a.derivative() + b.derivative()
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()
    if not b.is_zero():
        q, r = a.divrem(b)
        assert q * b + r == a
        assert r.degree < b.degree


@given(nonzero, nonzero)
def test_gcd_divides_and_matches_sympy(a, b):
    g = gcd(a, b)
    assert (a % g).is_zero() and (b % g).is_zero()
    T = sp.Symbol("t")
    ref = sp.Poly(sp.gcd(sp.Poly(list(reversed(a.coeffs)), T).as_expr(),
                         sp.Poly(list(reversed(b.coeffs)), T).as_expr()), T).monic()
    assert [Fraction(int(c.p), int(c.q)) for c in reversed(ref.all_coeffs())] == list(g.coeffs)


@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(1, 4)), min_size=1, max_size=4),
       st.integers(1, 5))
def test_squarefree_reconstructs(parts, lead):
    p = Poly([lead])
    for r, k in parts:
        p = p * (t - r) ** k
    dec = squarefree_decomposition(p)
    rebuilt = Poly([p.lead])
    for s, i in dec:
        rebuilt = rebuilt * s ** i
        assert squarefree_decomposition(s) == [(s, 1)]
    assert rebuilt == p
    for (s1, _), (s2, _) in zip(dec, dec[1:]):
        assert gcd(s1, s2).degree == 0


def test_split_by_valuation():
    s = (t - 1) * (t - 2) * (t - 3)
    p = (t - 1) ** 3 * (t - 2)
    got = {v: f for f, v in split_by_valuation(s, p)}
    assert got == {0: t - 3, 1: t - 2, 3: t - 1}
    assert split_by_valuation(s, Poly()) == [(s, INF)]


def test_running_example_clusters():
    cl = uniform_clusters(t, t, 1)
    finite = {c.place.factor: c.triple() for c in cl if not c.place.is_infinity}
    assert finite == {t: (1, 1, 2), t + Fraction(27, 4): (0, 0, 1)}
    assert cl[-1].place is INFINITY and cl[-1].triple() == (3, 5, 9)
    assert discriminant(t, t) == 4 * t ** 3 + 27 * t ** 2


def test_degenerate_infinity_clusters():
    (c,) = uniform_clusters(Poly(), Poly([1]), 1)
    assert c.triple() == (INF, 6, 12)
    (c,) = uniform_clusters(Poly([1]), Poly(), 1)
    assert c.triple() == (4, INF, 12)


def test_singular_generic_fiber():
    u = t + 1
    with pytest.raises(SingularGenericFiber):
        uniform_clusters(-3 * u ** 2, 2 * u ** 3, 1)


@given(st.lists(small, min_size=1, max_size=5), st.lists(small, min_size=1, max_size=7))
def test_clusters_coprime_and_total(ca, cb):
    A, B = Poly(ca), Poly(cb)
    if discriminant(A, B).is_zero():
        return
    cl = uniform_clusters(A, B, 1)
    assert sum(c.deg * c.vD for c in cl) == 12
    fin = [c.place.factor for c in cl if not c.place.is_infinity]
    for i, f in enumerate(fin):
        for g in fin[i + 1:]:
            assert gcd(f, g).degree == 0


def test_valuation_at_point():
    assert valuation_at_point(t ** 2 * (t + 1), 0) == 2
    assert valuation_at_point(t ** 2 + 1, 1) == 0
    assert valuation_at_point(t ** 3, "inf", 5) == 2
    assert Place.at("1/2").label() == "1/2"
