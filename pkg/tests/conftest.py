from __future__ import annotations

import sys
from pathlib import Path

import hypothesis.strategies as st
from hypothesis import HealthCheck, assume, settings

sys.path.insert(0, str(Path(__file__).parent))

from eqhodge.errors import SingularGenericFiber  # noqa: E402
from eqhodge.polyfield import Poly  # noqa: E402
from eqhodge.weierstrass import WeierstrassSurface, check_minimal  # noqa: E402

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow])
settings.load_profile("default")

# (vA, vB) local shapes that realise every Kodaira family when nothing else vanishes
LOCAL_SHAPES = [(0, 0), (1, 1), (1, 2), (2, 2), (2, 3), (3, 4), (3, 5), (4, 5), (2, 4), (3, 3)]
ROOTS = [-3, -2, -1, 0, 1, 2, 3]


@st.composite
def minimal_surfaces(draw, max_n: int = 3) -> WeierstrassSurface:
    """Random minimal, non-isotrivial short Weierstrass surfaces over P^1."""
    n = draw(st.integers(1, max_n))
    roots = draw(st.lists(st.sampled_from(ROOTS), max_size=3, unique=True))
    A, B = Poly([1]), Poly([1])
    for r in roots:
        a, b = draw(st.sampled_from(LOCAL_SHAPES))
        A, B = A * Poly([-r, 1]) ** a, B * Poly([-r, 1]) ** b
    assume(A.degree <= 4 * n and B.degree <= 6 * n)
    coeff = st.integers(-4, 4)
    ca = draw(st.lists(coeff, min_size=1, max_size=4 * n - A.degree + 1))
    cb = draw(st.lists(coeff, min_size=1, max_size=6 * n - B.degree + 1))
    A, B = A * Poly(ca), B * Poly(cb)
    s = WeierstrassSurface(n, A, B)
    try:
        assume(not check_minimal(s))
    except SingularGenericFiber:
        assume(False)
    assume(not s.is_isotrivial())
    return s


@st.composite
def multiplicative_surfaces(draw, max_n: int = 3) -> WeierstrassSurface:
    """A = -3u^2 w^2, B = (2u^3 + eps) w^3, so disc = 27 eps (4u^3 + eps) w^6: I_m or I_m* at the root of eps."""
    n = draw(st.integers(1, max_n))
    r = draw(st.sampled_from(ROOTS))
    star = draw(st.booleans())
    w = Poly([-r, 1]) if star else Poly([1])
    u = Poly(draw(st.lists(st.integers(-3, 3), min_size=1, max_size=2 * n - 2 * star + 1)))
    assume(u.degree >= 0 and u(r) != 0)
    m = draw(st.integers(1, 6 * n - 3 * star))
    c = draw(st.sampled_from([1, -1, 2, 5]))
    eps = Poly([-r, 1]) ** m * Poly([c])
    A = Poly([-3]) * u ** 2 * w ** 2
    B = (Poly([2]) * u ** 3 + eps) * w ** 3
    assume(A.degree <= 4 * n and B.degree <= 6 * n)
    s = WeierstrassSurface(n, A, B)
    try:
        assume(not check_minimal(s))
    except SingularGenericFiber:
        assume(False)
    assume(not s.is_isotrivial())
    return s


def any_surfaces(max_n: int = 3):
    return st.one_of(minimal_surfaces(max_n), multiplicative_surfaces(max_n))
