"""End-to-end reproductions: the class-two Askey-Wilson family and its second-order
relation, the continuous q-Hermite reference case, and the Hahn-operator examples.

Every suite returns a ``SuiteResult``.  Artifacts hold exact values (polynomials,
scalars, verdicts), so a symbolic run can be specialised and compared with a
rational run check for check (``compare_runs``).
"""

from __future__ import annotations

from semiclassical import linform as lf
from semiclassical.awops import dq, sq, structural_polys
from semiclassical.hahn import (
    HahnContext,
    asc_pearson,
    prop66_conditions,
    prop66_structure,
    thm64,
    thm65_classify,
    verify_22,
    verify_prop66_pearson,
)
from semiclassical.opseq import OPSFamily, expand_in_basis, from_registry, from_tables, moments
from semiclassical.parsing import parse_poly, parse_scalar
from semiclassical.pearson import PearsonPair, regularity_thm23, triple_to_pearson, verify_pearson
from semiclassical.poly import Poly, gcd
from semiclassical.report import Check, SuiteResult, first_mismatch
from semiclassical.scalar import QContext, specialize
from semiclassical.structure import (
    band_support_check,
    extract_band,
    fit_k1k2,
    lowest_entries_nonzero,
    sq_band,
    thm31_forward,
    thm31_reverse,
    thm32_pipeline,
)

# Closed forms of the class-two family, written with q = t^2.
PROP41_CLOSED = {
    "Q3": "(1/4)*(t^2 - 1)*t^-3*x*(4*x^2 - 3 - t^2)",
    "Q4": "(1/8)*(t^2 - 1)*t^-4*(8*x^4 - 8*x^2 + 1 - t^4)",
    "R4": "-(1/8)*(1 - t^-2)^2*(4*x^4 - (t^2 + 5)*x^2 + t^2 + 1)",
    "Phi": "-(1/16)*(t^2 - 1)^2*t^-3*(8*t^2*x^4 - 2*(t^4 + 4*t^2 + 1)*x^2 + (t^2 + 1)^2)",
    "Psi": "(1/4)*(t - 1/t)*(4*t^2*x^2 - 3*t^2 - 1)*x",
}
PROP41_C = {
    1: "(1 + t)/2",
    2: "(1 - t^2)*(1 - t)/4",
    3: "(1 + t^2)*(1 + t^3)/4",
    4: "(1 - t^4)*(1 - t^3)/4",
}


def _require(ctx: QContext, operator: str):
    if ctx.operator != operator:
        raise ValueError(f"this suite needs a {operator} context")


def coordinate_check(name: str, polys, expected, fam: OPSFamily, n_range) -> Check:
    """Compare the P-basis coordinates of polys(n) with expected(n) = {j: value}
    for every n in n_range; all unlisted coordinates must vanish."""
    lo, hi = n_range
    for n in range(lo, hi + 1):
        coords = expand_in_basis(polys(n), fam)
        want = {j: v for j, v in expected(n).items() if j >= 0}
        top = max([len(coords) - 1] + list(want))
        for j in range(top + 1):
            got = coords[j] if j < len(coords) else 0
            if got != want.get(j, 0):
                return Check(name, False, (lo, hi), {"n": n, "j": j, "got": got, "expected": want.get(j, 0)})
    return Check(name, True, (lo, hi))


# -- the class-two Askey-Wilson family --------------------------------------------------------

class Prop41Data:
    """Family B_n = 0, C_n = (1 - (-1)^n t^n)(1 - (-1)^n t^(n-1))/4 with its
    structure coefficients; negative indices give zero."""

    def __init__(self, ctx: QContext, N: int):
        _require(ctx, "askey-wilson")
        self.ctx = ctx
        self.fam = from_registry("prop41", ctx).build(N)
        k = ctx.alpha * ctx.alpha - 1
        self.k = k
        self._b, self._a, self._c, self._d = {}, {}, {}, {}

    def C(self, n):
        return self.fam.C(n) if n >= 1 else self.ctx.zero

    def b(self, n):
        if n not in self._b:
            if n < 0:
                self._b[n] = self.ctx.zero
            else:
                sign = -1 if n % 2 else 1
                t = self.ctx
                self._b[n] = -(1 - sign * t.tpow(n)) * (sign - t.tpow(-(n - 1))) / 2
        return self._b[n]

    def a(self, n):
        return self.k * self.ctx.gamma_n(n)

    def c(self, n):
        al = self.ctx.alpha
        return self.b(n + 1) * self.C(n) - al * self.b(n) * self.C(n - 1) - self.k * self.ctx.gamma_n(n) * self.C(n)

    def d(self, n):
        al = self.ctx.alpha
        return (self.b(n - 1) * self.C(n) - al * self.b(n) * self.C(n - 1)) * self.C(n - 2)


def run_prop41(N: int, ctx: QContext, forward_N: int = 20) -> SuiteResult:
    """The class-two family: both structure relations for 1 <= n <= N, the closed forms
    of Q_3, Q_4, R_4, Phi, Psi, the Pearson equation on moments and the class."""
    if N < 4:
        raise ValueError("N must be at least 4")
    res = SuiteResult("prop41")
    data = Prop41Data(ctx, N + 4)
    fam = data.fam
    closed = {k: parse_poly(v, ctx) for k, v in PROP41_CLOSED.items()}
    U2 = structural_polys(ctx).U2

    bad = [n for n, text in PROP41_C.items() if fam.C(n) != parse_scalar(text, ctx)]
    res.add(Check("C_1..C_4 closed forms", not bad, (1, 4), {"n": bad[0]} if bad else None))

    res.add(coordinate_check(
        "S_q P_n = alpha_n P_n + b_n C_{n-1} P_{n-2}",
        lambda n: sq(fam.P(n), ctx),
        lambda n: {n: ctx.alpha_n(n), n - 2: data.b(n) * data.C(n - 1)},
        fam, (1, N)))
    res.add(coordinate_check(
        "U2 D_q P_n = a_n P_{n+1} + c_n P_{n-1} + d_n P_{n-3}",
        lambda n: U2 * dq(fam.P(n), ctx),
        lambda n: {n + 1: data.a(n), n - 1: data.c(n), n - 3: data.d(n)},
        fam, (1, N)))
    res.add(_sequence_check("b_n = 2 C_n q^(-(n-1)/2)", (1, N),
                            lambda n: data.b(n), lambda n: 2 * data.C(n) * ctx.tpow(-(n - 1))))
    res.add(_sequence_check("d_n = (q - 1) q^(-n/2) C_n C_{n-1} C_{n-2}", (1, N),
                            lambda n: data.d(n),
                            lambda n: (ctx.q - 1) * ctx.tpow(-n) * data.C(n) * data.C(n - 1) * data.C(n - 2)))

    band = extract_band(fam, U2, N, ctx)
    res.add(band_support_check(band, {1, -1, -3}, "band offsets in {+1, -1, -3}"))
    res.add(lowest_entries_nonzero(band, "lowest band entry nonzero"))
    sband, sq_check = sq_band(fam, U2, N, ctx, band)
    res.add(sq_check)
    kfit = fit_k1k2(band, fam, ctx, sband)
    res.add(kfit.check)

    u = moments(fam, 2 * N + 12)
    r31 = thm31_reverse(band, fam, ctx, N, u)
    for c in r31.checks:
        res.add(c)
    res.add(_poly_check("psi = -Q_3 (R-convention)", r31.psi, -closed["Q3"]))
    fN = min(forward_N, N)
    rows, fwd = thm31_forward(fam, U2, r31.psi, r31.rho, fN, ctx, u)
    res.add(fwd)
    mism = first_mismatch([band.rows[n] for n in range(fN + 1)], [rows[n] for n in range(fN + 1)])
    res.add(Check("forward band = extracted band", mism is None, (0, fN), None if mism is None else {"n": mism}))

    r32 = thm32_pipeline(band, fam, ctx, N, u)
    for c in r32.checks:
        res.add(c)
    res.add(_poly_check("Q_3 closed form", r32.Qs, closed["Q3"]))
    res.add(_poly_check("Q_4 closed form", r32.Qs1, closed["Q4"]))
    R4 = r32.Qs1 - Poly((ctx.zero, ctx.alpha)) * r32.Qs
    res.add(_poly_check("R_4 closed form", R4, closed["R4"]))
    res.add(_poly_check("R_4 = pipeline R", r32.R, closed["R4"]))
    res.add(_poly_check("Phi closed form", r32.normal.Phi, closed["Phi"]))
    res.add(_poly_check("Psi closed form", r32.normal.Psi, closed["Psi"]))
    g = gcd(r32.normal.Phi, r32.normal.Psi)
    res.add(Check("gcd(Phi, Psi) = 1", g.degree == 0, None, None if g.degree == 0 else {"gcd": g}))
    res.add(verify_pearson(PearsonPair(closed["R4"], closed["Q3"]), u, ctx, N,
                           name="D_q(phi u) = S_q(psi u) with the closed forms"))
    res.add(Check("class = 2", r32.report.cls == 2, None, None if r32.report.cls == 2 else r32.report.to_dict()))

    res.artifacts.update({
        "s": band.s,
        "offsets": sorted(band.offsets()),
        "k1": kfit.k1,
        "k2": kfit.k2,
        "psi": r31.psi,
        "rho": r31.rho,
        "Q3": r32.Qs,
        "Q4": r32.Qs1,
        "R4": r32.R,
        "Phi": r32.normal.Phi,
        "Psi": r32.normal.Psi,
        "class": r32.report.to_dict(),
    })
    return res


def _sequence_check(name, n_range, got, want) -> Check:
    lo, hi = n_range
    for n in range(lo, hi + 1):
        g, w = got(n), want(n)
        if g != w:
            return Check(name, False, n_range, {"n": n, "got": g, "expected": w})
    return Check(name, True, n_range)


def _poly_check(name: str, got: Poly, want: Poly) -> Check:
    if got == want:
        return Check(name, True)
    return Check(name, False, None, {"got": got, "expected": want})


# -- the second-order relation ------------------------------------------------------------------

def cor43_coefficients(data: Prop41Data, n: int) -> dict:
    """Closed-form coefficients of the D_q^2 relation, keyed by P-index."""
    ctx = data.ctx
    al, k = ctx.alpha, data.k
    a, b, c, d, C = data.a, data.b, data.c, data.d, data.C
    an = ctx.alpha_n
    lead = -k * k * ctx.gamma_n(n) * ctx.gamma_n(n - 1)
    d1 = (a(n) * c(n + 1) + a(n - 1) * c(n)
          - 2 * al * k * (an(n) ** 2 - 1) * (C(n + 1) + C(n) - 1)
          - 4 * al * al * k * an(n - 1) * b(n) * C(n - 1))
    d2 = (a(n) * d(n + 1) + c(n) * c(n - 1) + a(n - 3) * d(n)
          - 2 * al * k * (an(n) ** 2 - 1) * C(n) * C(n - 1)
          - 4 * al * al * k * an(n - 1) * b(n) * C(n - 1) * (C(n - 1) + C(n - 2) - 1)
          - 2 * al * k * b(n) * b(n - 2) * C(n - 1) * C(n - 3))
    d3 = (c(n) * d(n - 1) + c(n - 3) * d(n)
          - 4 * al * al * k * an(n - 1) * b(n) * C(n - 1) * C(n - 2) * C(n - 3)
          - 2 * al * k * b(n) * b(n - 2) * C(n - 1) * C(n - 3) * (C(n - 3) + C(n - 4) - 1))
    d4 = -4 * al * al * ctx.tpow(-(n - 3))
    for j in range(6):
        d4 = d4 * C(n - j)
    return {n + 2: lead, n: d1, n - 2: d2, n - 4: d3, n - 6: d4}


def d4_simplified(data: Prop41Data, n: int):
    """-(q - 1)^2 q^(-(2n-1)/2) C_n C_{n-1} ... C_{n-5}."""
    ctx = data.ctx
    out = -(ctx.q - 1) ** 2 * ctx.tpow(-(2 * n - 1))
    for j in range(6):
        out = out * data.C(n - j)
    return out


def run_cor43(ctx: QContext, n_lo: int = 6, n_hi: int = 30) -> SuiteResult:
    """(alpha^2-1)^2 (x^2 - alpha^2)(1 - x^2) D_q^2 P_n on the band {+2, 0, -2, -4, -6}."""
    if n_lo < 6:
        raise ValueError("the relation is stated for n >= 6")
    res = SuiteResult("cor43")
    data = Prop41Data(ctx, n_hi + 2)
    fam = data.fam
    al, k = ctx.alpha, data.k
    one, zero = ctx.one, ctx.zero
    weight = Poly((-al * al, zero, one)) * Poly((one, zero, -one)) * (k * k)

    lhs_cache = {}

    def lhs(n):
        if n not in lhs_cache:
            lhs_cache[n] = expand_in_basis(weight * dq(dq(fam.P(n), ctx), ctx), fam)
        return lhs_cache[n]

    names = {2: "leading coefficient", 0: "d_{n,1}", -2: "d_{n,2}", -4: "d_{n,3}",
             -6: "d_{n,4} = -4 alpha^2 q^(-(n-3)/2) prod C_{n-j}"}
    failures = {off: None for off in names}
    support_fail = None
    for n in range(n_lo, n_hi + 1):
        coords = lhs(n)
        want = cor43_coefficients(data, n)
        for j, v in enumerate(coords):
            if v != 0 and (j - n) not in names and support_fail is None:
                support_fail = {"n": n, "offset": j - n}
        for off in names:
            j = n + off
            got = coords[j] if 0 <= j < len(coords) else 0
            if failures[off] is None and got != want[j]:
                failures[off] = {"n": n, "got": got, "expected": want[j]}
    rng = (n_lo, n_hi)
    res.add(Check("offsets in {+2, 0, -2, -4, -6}", support_fail is None, rng, support_fail))
    for off, name in names.items():
        label = name if off == -6 else f"{name} matches its closed form"
        res.add(Check(label, failures[off] is None, rng, failures[off]))

    # d_{n,4} three ways: the expansion coordinate, the elimination expression
    # d_n d_{n-3} - 2 alpha (alpha^2-1) b_n b_{n-2} C_{n-1} C_{n-3} C_{n-4} C_{n-5},
    # and the product -(q-1)^2 q^(-(2n-1)/2) prod C_{n-j} it simplifies to.
    elim_fail = simp_fail = nz_fail = None
    for n in range(n_lo, n_hi + 1):
        got = lhs(n)[n - 6]
        elim = data.d(n) * data.d(n - 3) - 2 * al * k * data.b(n) * data.b(n - 2) * \
            data.C(n - 1) * data.C(n - 3) * data.C(n - 4) * data.C(n - 5)
        if elim_fail is None and got != elim:
            elim_fail = {"n": n, "got": got, "elimination": elim}
        if simp_fail is None and got != d4_simplified(data, n):
            simp_fail = {"n": n, "got": got, "product": d4_simplified(data, n)}
        if nz_fail is None and got == 0:
            nz_fail = {"n": n}
    res.add(Check("d_{n,4} = elimination expression", elim_fail is None, rng, elim_fail))
    res.add(Check("d_{n,4} = -(q-1)^2 q^(-(2n-1)/2) prod C_{n-j}", simp_fail is None, rng, simp_fail))
    res.add(Check("d_{n,4} != 0", nz_fail is None, rng, nz_fail))
    res.artifacts["d_n4"] = {n: lhs(n)[n - 6] for n in (n_lo, n_hi)}
    res.artifacts["band_reach"] = -6
    return res


# -- the classical reference case ---------------------------------------------------------------

def engineered_singular_pair(ctx: QContext, n0: int = 3):
    """phi = x^2 + 1, psi = d x with d chosen so that d_n = gamma_n + d alpha_n vanishes at n0."""
    d = -ctx.gamma_n(n0) / ctx.alpha_n(n0)
    return Poly((ctx.one, ctx.zero, ctx.one)), Poly((ctx.zero, d))


def run_classical_reference(N: int, ctx: QContext, regularity_N: int = 50) -> SuiteResult:
    """Continuous q-Hermite (B_n = 0, C_n = (1 - q^n)/4) with phi = 1."""
    _require(ctx, "askey-wilson")
    res = SuiteResult("classical-reference")
    fam = from_registry("q-hermite", ctx).build(N + 4)
    one = Poly((ctx.one,))
    band = extract_band(fam, one, N, ctx)
    res.add(Check("s = 1", band.s == 1, None, None if band.s == 1 else {"s": band.s}))
    res.add(band_support_check(band, {-1}, "band offset -1 only"))
    res.add(lowest_entries_nonzero(band, "lowest band entry nonzero"))
    res.add(_sequence_check("D_q P_n = gamma_n P_{n-1}", (1, N),
                            lambda n: band.a(n, n - 1), lambda n: ctx.gamma_n(n)))

    u = moments(fam, 2 * N + 8)
    r31 = thm31_reverse(band, fam, ctx, N, u)
    for c in r31.checks:
        res.add(c)
    fN = min(20, N)
    rows, fwd = thm31_forward(fam, one, r31.psi, r31.rho, fN, ctx, u)
    res.add(fwd)
    mism = first_mismatch([band.rows[n] for n in range(fN + 1)], [rows[n] for n in range(fN + 1)])
    res.add(Check("forward band = extracted band", mism is None, (0, fN), None if mism is None else {"n": mism}))
    pair = triple_to_pearson(one, r31.psi, r31.rho, ctx)
    res.add(verify_pearson(pair, u, ctx, N, name="D_q(phi u) = S_q(psi u) from the triple"))
    reg = regularity_thm23(pair.phi, pair.psi, regularity_N, ctx)
    res.add(reg)

    n0 = 3
    bad_phi, bad_psi = engineered_singular_pair(ctx, n0)
    neg = regularity_thm23(bad_phi, bad_psi, regularity_N, ctx)
    hit = (not neg.ok) and neg.witness.get("n") == n0
    res.add(Check("engineered pair rejected at the predicted n", hit, (0, regularity_N),
                  {"predicted": n0, "reported": neg.witness}))

    r32 = thm32_pipeline(band, fam, ctx, N, u)
    for c in r32.checks:
        res.add(c)
    classical = r32.report.verdict == "Classical" and r32.report.r_common == band.s - 1
    res.add(Check("verdict Classical (r = s - 1)", classical, None, r32.report.to_dict()))
    res.artifacts.update({
        "s": band.s,
        "psi": r31.psi,
        "rho": r31.rho,
        "pearson_phi": pair.phi,
        "pearson_psi": pair.psi,
        "Phi": r32.normal.Phi,
        "Psi": r32.normal.Psi,
        "class": r32.report.to_dict(),
    })
    return res


# -- Hahn operator -----------------------------------------------------------------------------

def run_hahn_prop66(N: int, hctx: HahnContext, a=2, b=1) -> SuiteResult:
    """The class-one family B_n = w/(1-q), C_n = (a + (-1)^n b - (a+b) q^n) q^n."""
    ctx = hctx.ctx
    a, b = ctx.scalar(a), ctx.scalar(b)
    q, w = hctx.q, hctx.omega
    res = SuiteResult("hahn-prop66")
    cond = prop66_conditions(a, b, N + 2, hctx)
    res.add(cond)
    if not cond.ok:
        return res
    fam = from_registry("hahn-class1", ctx, a=a, b=b, omega=w).build(N + 2)
    C1 = (a - b - (a + b) * q) * q
    C2 = (a + b) * (1 - q * q) * q * q
    res.add(Check("C_1, C_2 closed forms", fam.C(1) == C1 and fam.C(2) == C2, None))
    st = prop66_structure(a, b, hctx, N)
    res.add(verify_22(fam, st, N, hctx))
    u = moments(fam, N + 4)
    cls = thm65_classify(fam, st.c, N, hctx, u)
    for c in cls.checks:
        res.add(c)
    res.add(Check("b_2 = q + 1", cls.b2 == q + 1, None, {"b2": cls.b2}))
    tv = (b - a + (a + b) * q) * q * q
    tg = (-b - a + (a + b) * q) * q * q
    res.add(Check("test value = (b - a + (a+b)q) q^2", cls.test_value == tv, None, {"got": cls.test_value}))
    res.add(Check("-C_2/b_2 = (-b - a + (a+b)q) q^2", cls.target == tg, None, {"got": cls.target}))
    res.add(Check("verdict Semiclassical, class 1", cls.verdict == "Semiclassical" and cls.cls == 1, None,
                  {"verdict": cls.verdict, "class": cls.cls}))
    res.add(verify_prop66_pearson(fam, a, b, N, hctx, u))
    res.artifacts.update({"c": st.c, "classification": cls.summary()})
    return res


def asc_closed_forms(r, s, N: int, hctx: HahnContext):
    q, w = hctx.q, hctx.omega
    B = [w / (1 - q) + (r + s) * q ** n for n in range(N + 1)]
    C = [hctx.ctx.zero] + [-r * s * (1 - q ** (n + 1)) * q ** n for n in range(N + 1)]
    return B, C


def run_hahn_asc(N: int, hctx: HahnContext, r=2, s=-3, c=0) -> SuiteResult:
    """Al-Salam-Carlitz: the classical recurrence formulas and the classifier's Classical branch."""
    ctx = hctx.ctx
    r, s, c = ctx.scalar(r), ctx.scalar(s), ctx.scalar(c)
    res = SuiteResult("hahn-asc")
    phi, psi = asc_pearson(r, s, hctx)
    out = thm64(phi, psi, N, hctx.starred())
    res.add(out.check)
    B, C = asc_closed_forms(r, s, N, hctx)
    mb = first_mismatch(out.B, B)
    mc = first_mismatch(out.C, C)
    res.add(Check("B_n closed form", out.ok and mb is None, (0, N), None if mb is None else {"n": mb}))
    res.add(Check("C_{n+1} closed form", out.ok and mc is None, (0, N), None if mc is None else {"n": mc - 1}))
    fam = from_tables(out.B + [B[-1]], out.C, ctx, "al-salam-carlitz (from thm64)")
    u = moments(fam, N + 4) if fam.limit >= N + 1 else None
    cls = thm65_classify(fam, c, min(N, fam.limit - 1), hctx, u)
    for ch in cls.checks:
        res.add(ch)
    res.add(Check("verdict Classical", cls.verdict == "Classical", None, {"verdict": cls.verdict}))
    res.artifacts.update({"B_last": out.B[-1] if out.B else None, "classification": cls.summary()})
    return res


def run_hahn_decomposition(N: int, hctx: HahnContext, r=2, s=-3, c=5) -> SuiteResult:
    """u = (x - c)^-1 v + delta_c with v the Al-Salam-Carlitz form: the classifier's
    decomposition branch must recover r + s and r s."""
    from semiclassical.opseq import recurrence_from_moments

    ctx = hctx.ctx
    r, s, c = ctx.scalar(r), ctx.scalar(s), ctx.scalar(c)
    res = SuiteResult("hahn-decomposition")
    asc = from_registry("al-salam-carlitz", ctx, r=r, s=s, omega=hctx.omega)
    v = moments(asc, 2 * N + 4)
    u = lf.div_linear(c, v) + lf.delta(c, v.valid_degree + 1)
    B, C = recurrence_from_moments(u, N)
    fam = from_tables(B, C, ctx, "perturbed al-salam-carlitz")
    cls = thm65_classify(fam, c, N - 2, hctx, u)
    for ch in cls.checks:
        res.add(ch)
    res.add(Check("decomposition branch taken", cls.r_plus_s is not None, None))
    res.add(Check("r + s recovered", cls.r_plus_s == r + s, None, {"got": cls.r_plus_s}))
    res.add(Check("r s recovered", cls.r_times_s == r * s, None, {"got": cls.r_times_s}))
    res.artifacts.update({"classification": cls.summary()})
    return res


# -- symbolic versus rational ------------------------------------------------------------------

def specialize_value(value, t0):
    if isinstance(value, Poly):
        return value.specialize(t0)
    if isinstance(value, dict):
        return {k: specialize_value(v, t0) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [specialize_value(v, t0) for v in value]
    if isinstance(value, (str, bool)) or value is None:
        return value
    return specialize(value, t0)


def compare_runs(symbolic: SuiteResult, rational: SuiteResult, t0) -> Check:
    """Same checks with the same statuses, and symbolic artifacts specialised at t0
    equal to the rational ones."""
    sym = [(c.name, c.ok) for c in symbolic.checks]
    rat = [(c.name, c.ok) for c in rational.checks]
    if sym != rat:
        i = first_mismatch(sym, rat)
        return Check(f"{symbolic.suite}: symbolic vs rational", False, None,
                     {"index": i, "symbolic": sym[i:i + 1], "rational": rat[i:i + 1]} if i is not None
                     else {"reason": "different number of checks"})
    for key, value in symbolic.artifacts.items():
        if specialize_value(value, t0) != specialize_value(rational.artifacts.get(key), t0):
            return Check(f"{symbolic.suite}: symbolic vs rational", False, None, {"artifact": key})
    return Check(f"{symbolic.suite}: symbolic vs rational", True, None)


SUITES = {
    "prop41": run_prop41,
    "cor43": run_cor43,
    "classical": run_classical_reference,
    "hahn-prop66": run_hahn_prop66,
    "hahn-asc": run_hahn_asc,
    "hahn-decomposition": run_hahn_decomposition,
}
