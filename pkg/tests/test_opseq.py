from __future__ import annotations

import json
from fractions import Fraction

import pytest
import sympy

from semiclassical import linform as lf
from semiclassical.opseq import (
    NotRegularError,
    build,
    expand_in_basis,
    family_from_json,
    from_registry,
    from_tables,
    moments,
    recurrence_from_moments,
)
from semiclassical.poly import Poly
from semiclassical.scalar import QContext

F = Fraction


def hankel(u, n):
    """det [u_{i+j}]_{0 <= i, j < n} with sympy's exact rationals."""
    if n == 0:
        return F(1)
    m = sympy.Matrix(n, n, lambda i, j: sympy.Rational(u[i + j].numerator, u[i + j].denominator))
    d = m.det()
    return F(int(d.p), int(d.q))


def toy(ctx=None):
    ctx = ctx or QContext.rational(F(1, 2))
    return from_tables([0] * 12, [0] + [F(k, 7) for k in range(1, 12)], ctx, "toy")


def test_first_polynomials():
    fam = toy()
    assert fam.P(1) == Poly((0, 1))
    assert fam.P(2) == Poly((-fam.C(1), 0, 1))


def test_closed_form_coefficients(sym):
    fam = from_registry("prop41", sym)
    t = sym.t
    assert fam.C(2) == (1 - t * t) * (1 - t) / 4
    h = QContext.symbolic("hahn")
    asc = from_registry("al-salam-carlitz", h, r=2, s=-3, omega=0)
    q = h.q
    for n in range(6):
        assert asc.C(n + 1) == 6 * (1 - q ** (n + 1)) * q ** n


def test_build_rejects_zero_norm(rat):
    fam = from_tables([0, 0, 0, 0], [0, 1, 0, 1], rat)
    with pytest.raises(NotRegularError) as info:
        fam.build(3)
    assert info.value.n == 2


def test_low_moments_of_symmetric_family():
    fam = toy()
    u = moments(fam, 6)
    C1, C2 = fam.C(1), fam.C(2)
    assert u.moments[:5] == (1, 0, C1, 0, C1 * (C1 + C2))


def test_first_moment_is_B0(rat):
    fam = from_tables([F(3, 4), F(1), F(2)], [0, F(1, 2), F(1, 3)], rat)
    assert moments(fam, 1).moments == (1, F(3, 4))


def test_expand_examples():
    fam = toy()
    fam.build(4)
    assert expand_in_basis(fam.P(3), fam) == [0, 0, 0, 1]
    assert expand_in_basis(Poly((0, 0, 1)), fam) == [fam.C(1), 0, 1]


def test_expand_U2_on_prop41(sym):
    from semiclassical.awops import structural_polys

    fam = from_registry("prop41", sym).build(3)
    k = sym.alpha ** 2 - 1
    coords = expand_in_basis(structural_polys(sym).U2, fam)
    assert coords[2] == k and coords[1] == 0
    assert coords[0] == k * (fam.C(1) - 1)


def test_norms_match_hankel_determinants():
    fam = from_tables([F(1, 3), F(-1), F(2), F(0), F(5, 2), F(1), F(1, 4)],
                      [0, F(2), F(1, 2), F(3), F(-1, 3), F(1), F(2, 5)], QContext.rational(F(2)))
    N = 6
    u = moments(fam, 2 * N)
    for n in range(1, N):
        # C_n = H_{n-1} H_{n+1} / H_n^2
        assert fam.C(n) == hankel(u.moments, n - 1) * hankel(u.moments, n + 1) / hankel(u.moments, n) ** 2
        assert fam.h(n) == hankel(u.moments, n + 1) / hankel(u.moments, n)


def test_orthogonality(ctx):
    fam = from_registry("prop41", ctx).build(10)
    u = moments(fam, 20)
    for n in range(8):
        for m in range(8):
            val = lf.apply(u, fam.P(n) * fam.P(m))
            assert val == (fam.h(n) if n == m else 0)


def test_recurrence_roundtrip(ctx):
    fam = from_registry("prop41", ctx).build(12)
    u = moments(fam, 25)
    B, C = recurrence_from_moments(u, 12)
    assert B == [fam.B(n) for n in range(13)]
    assert C == [fam.C(n) for n in range(13)]


def test_recurrence_from_rational_prop41_moments():
    ctx = QContext.rational(F(1, 2))
    u = moments(from_registry("prop41", ctx), 9)
    _, C = recurrence_from_moments(u, 4)
    q = F(1, 4)
    assert C[2] == (1 - q) * (1 - F(1, 2)) / 4


def test_delta_is_not_regular():
    with pytest.raises(NotRegularError) as info:
        recurrence_from_moments(lf.delta(F(3), 9), 4)
    assert info.value.n == 1


def test_family_file_parsing(tmp_path):
    data = {"mode": "rational", "t": "1/2", "B": ["0", "0", "0"], "C": ["0", "1/4", "1/3"], "N": 2}
    ctx, fam, N = family_from_json(json.loads(json.dumps(data)))
    assert ctx.t == F(1, 2) and N == 2 and fam.C(2) == F(1, 3)
    with pytest.raises(IndexError):
        fam.C(3)
    hdata = {"mode": "symbolic", "operator": "hahn", "omega": "1/3",
             "family": {"name": "hahn-class1", "params": {"a": "2", "b": "1"}}}
    hctx, hfam, _ = family_from_json(hdata)
    assert hfam.B(0) == hctx.scalar(F(1, 3)) / (1 - hctx.t)


def test_registry_errors(sym):
    with pytest.raises(ValueError):
        from_registry("nope", sym)
    with pytest.raises(ValueError):
        from_registry("hahn-class1", sym, a=1, b=1, omega=0)


def test_specialised_family_matches_rational(sym):
    fam = build("prop41", 8, sym)
    rat = build("prop41", 8, QContext.rational(F(3, 5)))
    spec = fam.specialize(F(3, 5))
    assert [spec.P(n) for n in range(9)] == [rat.P(n) for n in range(9)]
