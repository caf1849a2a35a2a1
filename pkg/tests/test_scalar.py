from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from semiclassical import _zpoly as zp
from semiclassical.parsing import ParseError, parse_poly, parse_scalar
from semiclassical.scalar import (
    ModeMismatchError,
    PoleError,
    QContext,
    RatFunc,
    arith,
    coeff_symbols,
    format_scalar,
    specialize,
)

T = sympy.Symbol("t")


def to_sympy(x: RatFunc):
    num = sum(c * T ** k for k, c in enumerate(x.num))
    den = sum(c * T ** k for k, c in enumerate(x.den))
    return num / den


small_int = st.integers(-6, 6)
zpolys = st.lists(small_int, min_size=1, max_size=5)


@st.composite
def ratfuncs(draw):
    num = draw(zpolys)
    den = draw(zpolys.filter(lambda p: any(p)))
    shift = draw(st.integers(-3, 3))
    t = RatFunc.gen()
    a = sum((t ** k * c for k, c in enumerate(num)), RatFunc.const(0))
    b = sum((t ** k * c for k, c in enumerate(den)), RatFunc.const(0))
    return a / b * t ** shift


# -- examples ------------------------------------------------------------------------------

def test_rational_sum():
    assert arith(Fraction(1, 2), Fraction(1, 3), "+") == Fraction(5, 6)


def test_t_over_t_is_one(sym):
    assert arith(sym.t, sym.t, "/") == 1


def test_factor_cancels(sym):
    t = sym.t
    assert (t * t - 1) / (t - 1) == t + 1


def test_mode_mismatch_rejected(sym):
    with pytest.raises(ModeMismatchError):
        arith(sym.t, Fraction(1, 2), "+")


def test_division_by_zero(sym):
    with pytest.raises(ZeroDivisionError):
        sym.t / (sym.t - sym.t)
    with pytest.raises(ZeroDivisionError):
        arith(Fraction(1), Fraction(0), "/")


def test_coeff_symbols_small_n(ctx):
    a0, g0, q0 = coeff_symbols(ctx, 0)
    assert (a0, g0, q0) == (1, 0, 0)
    a1, g1, q1 = coeff_symbols(ctx, 1)
    assert g1 == 1 and q1 == 1
    assert a1 == (ctx.t + 1 / ctx.t) / 2
    # gamma_2 = (t^2 - t^-2)/(t - t^-1) = t + 1/t
    assert ctx.gamma_n(2) == ctx.t + 1 / ctx.t == 2 * ctx.alpha


def test_negative_index_conventions(ctx):
    assert ctx.gamma_n(-1) == -1
    assert ctx.alpha_n(-1) == ctx.alpha


def test_alpha_gamma_closed_forms(ctx):
    t = ctx.t
    for n in range(0, 15):
        assert ctx.alpha_n(n) == (t ** n + t ** -n) / 2
        assert ctx.gamma_n(n) == (t ** n - t ** -n) / (t - 1 / t)


def test_rational_mode_excludes_unit_q():
    for bad in (0, 1, -1):
        with pytest.raises(ValueError):
            QContext.rational(bad)


def test_canonical_sign_and_content(sym):
    t = sym.t
    x = (2 - 4 * t) / (-6 * t * t)
    assert x.den[-1] > 0
    assert format_scalar(x) == "(2*t - 1)/(3*t^2)"


def test_format_examples(sym):
    t = sym.t
    assert format_scalar((-3 * t * t + 1) / (2 * t)) == "(-3*t^2 + 1)/(2*t)"
    assert format_scalar(1 / t) == "1/t"
    assert format_scalar(Fraction(-3, 4)) == "-3/4"


def test_parse_examples(sym):
    x = parse_scalar("(t^2-1)/(4*t)", sym)
    assert x.num == (-1, 0, 1) and x.den == (0, 4)
    assert parse_scalar("-3/4", QContext.rational(Fraction(1, 2))) == Fraction(-3, 4)
    with pytest.raises(ParseError):
        parse_scalar("1/(t-t)", sym)


@pytest.mark.parametrize("text", ["1 +", "(t", "t ^ x", "2*x", "3 $ 4"])
def test_parse_errors_have_positions(sym, text):
    with pytest.raises(ParseError) as info:
        parse_scalar(text, sym)
    assert info.value.position is not None


def test_parse_rational_mode_substitutes_t():
    ctx = QContext.rational(Fraction(2, 3))
    assert parse_scalar("t^2 + 1/t", ctx) == Fraction(4, 9) + Fraction(3, 2)


def test_parse_poly_rejects_division_by_x(sym):
    with pytest.raises(ParseError):
        parse_poly("1/x", sym)


def test_pole_on_specialisation(sym):
    with pytest.raises(PoleError):
        specialize(1 / (sym.t - 1), 1)


# -- integer polynomial kernel -------------------------------------------------------------

def test_kronecker_matches_schoolbook():
    import random

    rng = random.Random(5)
    for _ in range(50):
        a = zp.norm(rng.randint(-10 ** 8, 10 ** 8) for _ in range(rng.randint(20, 40)))
        b = zp.norm(rng.randint(-99, 99) for _ in range(rng.randint(20, 40)))
        school = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                school[i + j] += x * y
        assert zp.mul(a, b) == zp.norm(school)


@settings(max_examples=60, deadline=None)
@given(zpolys, zpolys, zpolys)
def test_gcd_against_sympy(a, b, g):
    a, b, g = zp.norm(a), zp.norm(b), zp.norm(g)
    if not a or not b or not g:
        return
    A, B = zp.mul(a, g), zp.mul(b, g)
    ours = zp.primitive(zp.gcd_poly(A, B))
    ref = sympy.Poly(sympy.gcd(sympy.Poly(list(reversed(A)), T), sympy.Poly(list(reversed(B)), T)), T)
    ref_coeffs = tuple(int(c) for c in reversed(ref.all_coeffs()))
    assert ours == zp.primitive(ref_coeffs)


# -- field properties ----------------------------------------------------------------------

@settings(max_examples=80, deadline=None)
@given(ratfuncs(), ratfuncs(), ratfuncs())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    if not a.is_zero():
        assert a * (1 / a) == 1


@settings(max_examples=80, deadline=None)
@given(ratfuncs(), ratfuncs())
def test_arithmetic_against_sympy(a, b):
    assert sympy.simplify(to_sympy(a + b) - (to_sympy(a) + to_sympy(b))) == 0
    assert sympy.simplify(to_sympy(a * b) - to_sympy(a) * to_sympy(b)) == 0


@settings(max_examples=80, deadline=None)
@given(ratfuncs())
def test_canonical_form_invariants(a):
    if a.is_zero():
        return
    assert a.den[-1] > 0
    assert zp.degree(zp.gcd_poly(a.num, a.den)) == 0


@settings(max_examples=80, deadline=None)
@given(ratfuncs())
def test_parse_format_roundtrip(a):
    ctx = QContext.symbolic()
    assert parse_scalar(format_scalar(a), ctx) == a


@settings(max_examples=60, deadline=None)
@given(ratfuncs(), ratfuncs(), st.sampled_from([Fraction(1, 2), Fraction(3, 5), Fraction(-7, 3), Fraction(5)]))
def test_specialisation_is_a_homomorphism(a, b, t0):
    try:
        sa, sb = specialize(a, t0), specialize(b, t0)
        prod = specialize(a * b, t0)
        total = specialize(a + b, t0)
    except PoleError:
        return
    assert prod == sa * sb
    assert total == sa + sb
