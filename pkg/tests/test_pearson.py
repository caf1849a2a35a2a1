from __future__ import annotations

from fractions import Fraction

import pytest

from semiclassical import linform as lf
from semiclassical.awops import structural_polys
from semiclassical.opseq import from_registry, moments, recurrence_from_moments
from semiclassical.pearson import (
    InsufficientDepthError,
    NormalPair,
    PearsonPair,
    _power_index,
    admissible,
    class_from_normal,
    is_degenerate,
    moments_from_pearson,
    normal_to_pearson,
    pearson_to_normal,
    regularity_thm23,
    triple_to_pearson,
    verify_pearson,
)
from semiclassical.poly import Poly
from semiclassical.suites import PROP41_CLOSED, engineered_singular_pair
from semiclassical.parsing import parse_poly
from semiclassical.scalar import QContext

F = Fraction


def P(ctx, *coeffs):
    return Poly(tuple(ctx.scalar(c) for c in coeffs))


@pytest.fixture(scope="module")
def prop41_sym():
    ctx = QContext.symbolic()
    fam = from_registry("prop41", ctx).build(30)
    u = moments(fam, 40)
    pair = PearsonPair(parse_poly(PROP41_CLOSED["R4"], ctx), parse_poly(PROP41_CLOSED["Q3"], ctx))
    return ctx, fam, u, pair


def test_prop41_pair_verifies(prop41_sym):
    ctx, fam, u, pair = prop41_sym
    assert verify_pearson(pair, u, ctx, 30).ok
    assert verify_pearson(pair.scaled(ctx.t + 5), u, ctx, 30).ok


def test_perturbed_pair_reports_first_failure(prop41_sym):
    ctx, fam, u, pair = prop41_sym
    bad = PearsonPair(pair.phi, pair.psi + 1)
    res = verify_pearson(bad, u, ctx, 30)
    assert not res.ok and res.witness["n"] == 0


def test_insufficient_depth(prop41_sym):
    ctx, fam, u, pair = prop41_sym
    with pytest.raises(InsufficientDepthError):
        verify_pearson(pair, u, ctx, 100)


def test_regularity_simple_pair(ctx):
    assert regularity_thm23(P(ctx, 1), P(ctx, 0, 1), 30, ctx).ok


def test_regularity_simple_pair_gram_schmidt():
    # phi = 1, psi = x at t = 1/2: the induced moments must be regular too
    ctx = QContext.rational(F(1, 2))
    u = moments_from_pearson(PearsonPair(P(ctx, 1), P(ctx, 0, 1)), 25, ctx)
    recurrence_from_moments(u, 12)


@pytest.mark.parametrize("n0", [3, 5])
def test_regularity_engineered_failure(ctx, n0):
    # odd n0: d_2n can never hit the rigged zero first
    phi, psi = engineered_singular_pair(ctx, n0)
    res = regularity_thm23(phi, psi, 20, ctx)
    assert not res.ok and res.witness == {"n": n0, "reason": "d_n = 0"}


def test_regularity_even_target_fails_through_d2n(rat):
    phi, psi = engineered_singular_pair(rat, 4)
    res = regularity_thm23(phi, psi, 20, rat)
    assert res.witness == {"n": 2, "reason": "d_2n = 0"}


def test_regularity_degree_guard(rat):
    with pytest.raises(ValueError):
        regularity_thm23(P(rat, 0, 0, 0, 1), P(rat, 0, 1), 3, rat)


def test_moments_from_pearson_match_family(ctx):
    # the q-Hermite form satisfies D(u) = S(psi u) with psi from its structure relation
    from semiclassical.structure import extract_band, thm31_reverse

    fam = from_registry("q-hermite", ctx).build(14)
    band = extract_band(fam, P(ctx, 1), 10, ctx)
    r = thm31_reverse(band, fam, ctx, 10)
    pair = triple_to_pearson(P(ctx, 1), r.psi, r.rho, ctx)
    u = moments_from_pearson(pair, 20, ctx)
    assert u == moments(fam, 20)


def test_admissible_degree_branch(ctx):
    assert admissible(P(ctx, 0, 1), P(ctx, 0, 1), 10, ctx).method == "degree"


def test_prop41_pair_is_admissible(prop41_sym):
    ctx, _, _, pair = prop41_sym
    psi, rho = pair.psi, pair.phi
    assert admissible(rho, psi, 10, ctx).admissible
    rat = QContext.rational(F(1, 2))
    res = admissible(rho.specialize(F(1, 2)), psi.specialize(F(1, 2)), 200, rat)
    assert res.admissible and res.scanned_to == 200


@pytest.mark.parametrize("n0", [1, 2, 5])
def test_rigged_inadmissible_pair(ctx, n0):
    # a gamma_n0 = -b alpha_{n0-1} with a = 1
    b = -ctx.gamma_n(n0) / ctx.alpha_n(n0 - 1)
    res = admissible(P(ctx, 0, 0, 1), Poly((ctx.zero, b)), 10, ctx)
    assert not res.admissible and res.n == n0


def test_power_index():
    assert _power_index(F(1, 16), F(1, 4)) == 2
    assert _power_index(F(1, 8), F(1, 4)) is None
    assert _power_index(F(81, 16), F(9, 4)) == 2
    assert _power_index(F(1), F(9, 4)) == 0


def test_triple_to_pearson_examples(ctx):
    with pytest.raises(ValueError):
        triple_to_pearson(None, Poly(), P(ctx, 1), ctx)
    U1 = structural_polys(ctx).U1
    psi = P(ctx, 1, 2)
    pair = triple_to_pearson(None, psi, U1 * psi, ctx)
    assert is_degenerate(pair)


def test_normal_form_of_simple_pair(ctx):
    # pair (1, x): Phi = alpha + (U1^2 - alpha^2 U2), Psi = alpha^2 x + U1
    U = structural_polys(ctx)
    a = ctx.alpha
    x = P(ctx, 0, 1)
    np_ = pearson_to_normal(PearsonPair(P(ctx, 1), x), ctx)
    assert np_.Phi == Poly((a,)) + U.U1 * U.U1 - U.U2 * (a * a)
    assert np_.Psi == x * (a * a) + U.U1


def test_normal_roundtrip_keeps_pearson_property(prop41_sym):
    ctx, fam, u, pair = prop41_sym
    back = normal_to_pearson(pearson_to_normal(pair, ctx), ctx)
    assert verify_pearson(back, u, ctx, 25).ok


def test_class_rule(rat):
    x = P(rat, 0, 1)
    a, b, c = x - 1, x - 2, x - 3
    assert class_from_normal(NormalPair(a * b * c, a * b), 3).verdict == "Classical"
    rep = class_from_normal(NormalPair(a * b * c, a * (x - 5)), 3)
    assert (rep.verdict, rep.cls) == ("Semiclassical", 1)
    rep = class_from_normal(NormalPair(a * b * c * (x - 7), b * c * (x - 4)), 4)
    assert (rep.verdict, rep.cls) == ("Semiclassical", 1)
    assert class_from_normal(NormalPair((x - 1) * b, b), 2).verdict == "Classical"
    assert class_from_normal(NormalPair(a * b * c, a * b * c), 3).verdict == "Inconclusive"
    assert class_from_normal(NormalPair(Poly(), a), 3).verdict == "NotRegular"
