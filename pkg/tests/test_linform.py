from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semiclassical import linform as lf
from semiclassical.awops import dq, sq, structural_polys
from semiclassical.linform import DegreeOverflowError, LinearForm
from semiclassical.poly import Poly
from semiclassical.scalar import QContext

F = Fraction
fracs = st.fractions(min_value=-4, max_value=4, max_denominator=5)
forms = st.lists(fracs, min_size=12, max_size=16).map(LinearForm)


def test_apply_examples():
    u = LinearForm([1, 0, 0, 0])
    assert lf.apply(u, Poly((0, 0, 1))) == 0
    v = LinearForm([F(1), F(3), F(-2)])
    assert lf.apply(v, Poly((1,))) == 1
    with pytest.raises(DegreeOverflowError):
        lf.apply(v, Poly((0, 0, 0, 1)))


def test_mul_poly_examples():
    u = LinearForm([F(1), F(2), F(3), F(4)])
    assert lf.mul_poly(Poly((1,)), u) == u
    xu = lf.mul_poly(Poly((0, 1)), u)
    assert xu.moments == (2, 3, 4) and xu.valid_degree == 2
    v = LinearForm([F(1), F(0), F(5), F(0), F(7)])
    assert lf.mul_poly(Poly((0, 0, 1)), v).moments == (5, 0, 7)


def test_delta_and_division():
    assert lf.delta(F(0), 3).moments == (1, 0, 0, 0)
    c = F(2, 3)
    u = LinearForm([F(1), F(-1), F(4), F(1, 2), F(3), F(0), F(2)])
    xc = Poly((-c, F(1)))
    assert lf.common(lf.mul_poly(xc, lf.div_linear(c, u)), u)[0] == u
    back = lf.div_linear(c, lf.mul_poly(xc, u))
    expected = u - lf.delta(c, u.valid_degree).scale(u.moments[0])
    assert lf.common(back, expected)[0] == lf.common(back, expected)[1]


def test_transposed_operator_examples(ctx):
    u = LinearForm([ctx.one, ctx.scalar(3), ctx.scalar(-2), ctx.one])
    Du, Su = lf.dq_form(u, ctx), lf.sq_form(u, ctx)
    assert Du.valid_degree == 4 and Su.valid_degree == 3
    assert Du.moments[0] == 0
    assert Su.moments[0] == u.moments[0]
    assert Du.moments[2] == -2 * ctx.alpha * u.moments[1]


def test_valid_degree_is_tight():
    u = LinearForm([F(1)] * 6)
    assert lf.mul_poly(Poly((0, 0, 1)), u).valid_degree == 3
    with pytest.raises(DegreeOverflowError):
        u[6]
    with pytest.raises(DegreeOverflowError):
        u.truncate(7)


def test_json_roundtrip(sym):
    u = LinearForm([sym.one, sym.t / 3, 1 / (sym.t + 1)])
    assert lf.form_from_json(u.to_json(), sym) == u


@settings(max_examples=30, deadline=None)
@given(forms, st.lists(fracs, min_size=1, max_size=5))
def test_transposition(u, coeffs):
    ctx = QContext.rational(F(3, 5))
    f = Poly(coeffs)
    Du, Su = lf.dq_form(u, ctx), lf.sq_form(u, ctx)
    if f.degree <= u.valid_degree:
        assert lf.apply(Du, f) == -lf.apply(u, dq(f, ctx))
        assert lf.apply(Su, f) == lf.apply(u, sq(f, ctx))


@settings(max_examples=25, deadline=None)
@given(forms, st.lists(fracs, min_size=1, max_size=5))
def test_form_product_rules(u, coeffs):
    ctx = QContext.rational(F(3, 5))
    f = Poly(coeffs)
    U = structural_polys(ctx)
    a = ctx.alpha
    Df, Sf = dq(f, ctx), sq(f, ctx)
    Du, Su = lf.dq_form(u, ctx), lf.sq_form(u, ctx)
    lhs = lf.dq_form(lf.mul_poly(f, u), ctx).scale(a)
    rhs = lf.mul_poly(Sf * a - U.U1 * Df, Du) + lf.mul_poly(Df, Su)
    l, r = lf.common(lhs, rhs)
    assert l == r
