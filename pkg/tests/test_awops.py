from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semiclassical.awops import (
    LEMMA25_NAMES,
    dq,
    dq_laurent,
    dq_monomial,
    sq,
    sq_laurent,
    sq_monomial,
    structural_polys,
    verify_lemma25,
)
from semiclassical.poly import Poly
from semiclassical.scalar import QContext

F = Fraction


def brute_force(f: Poly, t0: Fraction, z: Fraction):
    """D_q f and S_q f at x = (z + 1/z)/2 straight from the definition, shifts z -> t z, z / t."""
    def xof(w):
        return (w + 1 / w) / 2

    up, down = f(xof(t0 * z)), f(xof(z / t0))
    return (up - down) / (xof(t0 * z) - xof(z / t0)), (up + down) / 2


def X(ctx):
    return Poly((ctx.zero, ctx.one))


def test_dq_sq_of_constants(ctx):
    one = Poly((ctx.one,))
    assert dq(one, ctx).is_zero()
    assert sq(one, ctx) == one


def test_monomial_images(ctx):
    a = ctx.alpha
    x = X(ctx)
    assert sq(x, ctx) == x * a
    assert dq(x ** 2, ctx) == x * (2 * a)
    assert sq(x ** 2, ctx) == Poly((1 - a * a, ctx.zero, 2 * a * a - 1))
    assert dq(x ** 3, ctx) == Poly((1 - a * a, ctx.zero, 4 * a * a - 1))
    assert sq(x ** 3, ctx) == Poly((ctx.zero, 3 * a * (1 - a * a), ctx.zero, a * (4 * a * a - 3)))
    assert dq(x ** 4, ctx) == Poly((ctx.zero, 4 * a * (1 - a * a), ctx.zero, 4 * a * (2 * a * a - 1)))
    assert sq(x ** 4, ctx) == Poly(((1 - a * a) ** 2, ctx.zero, 2 * (1 - a * a) * (4 * a * a - 1), ctx.zero,
                                    8 * a ** 4 - 8 * a * a + 1))


def test_structural_polys(ctx):
    U = structural_polys(ctx)
    k = ctx.alpha ** 2 - 1
    assert U.U1 == X(ctx) * k
    assert U.U2 == (X(ctx) ** 2 - 1) * k


def test_leading_coefficients(ctx):
    for n in range(0, 21):
        s = sq_monomial(n, ctx)
        assert s.degree == n and s.lc == ctx.alpha_n(n)
        if n:
            d = dq_monomial(n, ctx)
            assert d.degree == n - 1 and d.lc == ctx.gamma_n(n)


def test_cache_matches_laurent_route(ctx):
    x = X(ctx)
    f = x ** 7 * 3 - x ** 4 + x * ctx.alpha + 2
    assert dq(f, ctx) == dq_laurent(f, ctx)
    assert sq(f, ctx) == sq_laurent(f, ctx)


@pytest.mark.parametrize("t0", [F(1, 2), F(3, 5), F(-7, 2)])
def test_against_definition_at_rational_points(t0):
    ctx = QContext.rational(t0)
    f = Poly((F(1, 3), F(-2), F(0), F(5, 4), F(1), F(-1, 7), F(2)))
    Df, Sf = dq(f, ctx), sq(f, ctx)
    for z in (F(2), F(-3, 5), F(7, 4)):
        xz = (z + 1 / z) / 2
        d_ref, s_ref = brute_force(f, t0, z)
        assert Df(xz) == d_ref
        assert Sf(xz) == s_ref


def test_symbolic_specialises_to_rational(sym):
    x = X(sym)
    f = x ** 6 - x ** 3 * sym.t + x * 2
    for t0 in (F(1, 2), F(3, 5)):
        rat = QContext.rational(t0)
        fr = f.specialize(t0)
        assert dq(f, sym).specialize(t0) == dq(fr, rat)
        assert sq(f, sym).specialize(t0) == sq(fr, rat)


def test_aw_operators_need_aw_context():
    with pytest.raises(ValueError):
        dq(Poly((F(0), F(1))), QContext.rational(F(1, 2), "hahn"))


fracs = st.fractions(min_value=-4, max_value=4, max_denominator=5)


@settings(max_examples=40, deadline=None)
@given(st.lists(fracs, max_size=9), st.lists(fracs, max_size=9), fracs)
def test_linearity(a, b, c):
    ctx = QContext.rational(F(2, 3))
    f, g = Poly(a), Poly(b)
    assert dq(f + g * c, ctx) == dq(f, ctx) + dq(g, ctx) * c
    assert sq(f + g * c, ctx) == sq(f, ctx) + sq(g, ctx) * c


@settings(max_examples=40, deadline=None)
@given(st.lists(fracs, max_size=9), st.lists(fracs, max_size=9))
def test_product_rule_for_dq(a, b):
    ctx = QContext.rational(F(2, 3))
    f, g = Poly(a), Poly(b)
    assert dq(f * g, ctx) == dq(f, ctx) * sq(g, ctx) + sq(f, ctx) * dq(g, ctx)


def test_lemma25_small_run(ctx):
    rep = verify_lemma25(4, 10, 7, ctx)
    assert [c.name for c in rep.checks] == list(LEMMA25_NAMES)
    assert rep.ok, rep.to_dict()


def test_lemma25_requires_positive_degree(rat):
    with pytest.raises(ValueError):
        verify_lemma25(0, 1, 0, rat)
