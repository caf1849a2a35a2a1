"""Structure relations phi D_q P_n = sum_j a_{n,j} P_j and what they imply.

Two sign conventions coexist for the polynomials built from the band:

* ``R``-convention: D_q(phi P_n u) = R_{n+s} u with
  R_{n+s} = -h_n sum_j (a_{j,n}/h_j) P_j;
* ``Q``-convention: D_q(phi P_n u) = -Q_{n+s} u, i.e. Q = -R.

``thm31_reverse`` works with R, ``thm32_pipeline`` with Q.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from semiclassical import linform as lf
from semiclassical.awops import dq, sq, structural_polys
from semiclassical.opseq import OPSFamily, expand_in_basis, moments
from semiclassical.pearson import (
    ClassReport,
    NormalPair,
    PearsonPair,
    admissible,
    class_from_normal,
    pearson_to_normal,
    verify_normal,
    verify_pearson,
)
from semiclassical.poly import Poly
from semiclassical.report import Check
from semiclassical.scalar import QContext


@dataclass
class BandRelation:
    """Nonzero coefficients a_{n,j} of phi D_q P_n (or phi S_q P_n) for n in ``n_range``."""

    phi: Poly
    s: int
    rows: dict = field(default_factory=dict)  # n -> {j: a_{n,j}} (nonzero only)
    n_range: tuple = (0, -1)

    def a(self, n: int, j: int):
        if not (self.n_range[0] <= n <= self.n_range[1]):
            raise KeyError(f"row {n} was not extracted (range {self.n_range})")
        return self.rows[n].get(j, 0)

    def offsets(self) -> set:
        return {j - n for n, row in self.rows.items() for j in row}

    def rows_json(self) -> list:
        from semiclassical.scalar import format_scalar

        return [
            {"n": n, "offset": j - n, "value": format_scalar(v)}
            for n in sorted(self.rows)
            for j, v in sorted(self.rows[n].items())
        ]


def _expand_rows(fam: OPSFamily, polys) -> dict:
    rows = {}
    for n, f in polys:
        coords = expand_in_basis(f, fam)
        rows[n] = {j: c for j, c in enumerate(coords) if c != 0}
    return rows


def _lowest_offset(rows: dict) -> int:
    s = 0
    for n, row in rows.items():
        for j in row:
            s = max(s, n - j)
    return s


def extract_band(fam: OPSFamily, phi: Poly, N: int, ctx: QContext) -> BandRelation:
    """Expand phi D_q P_n in the P-basis for n = 0..N."""
    fam.build(N + max(phi.degree, 0))
    rows = _expand_rows(fam, ((n, phi * dq(fam.P(n), ctx)) for n in range(N + 1)))
    return BandRelation(phi, _lowest_offset(rows), rows, (0, N))


def sq_band(fam: OPSFamily, phi: Poly, N: int, ctx: QContext, band: BandRelation | None = None):
    """Expand phi S_q P_n and check its lowest entry against the D_q band.

    Returns (sq_rows BandRelation, Check) where the check verifies, for
    s+1 <= n <= N, that entries below n-s-1 vanish and
    a~_{n,n-s-1} = -alpha a_{n,n-s} C_{n-s} + a_{n-1,n-s-1} C_n.
    """
    if band is None:
        band = extract_band(fam, phi, N, ctx)
    fam.build(N + phi.degree + 1)
    rows = _expand_rows(fam, ((n, phi * sq(fam.P(n), ctx)) for n in range(N + 1)))
    srel = BandRelation(phi, _lowest_offset(rows), rows, (0, N))
    s = band.s
    alpha = ctx.alpha
    for n in range(s + 1, N + 1):
        low = n - s - 1
        if any(j < low for j in rows[n]):
            return srel, Check("sq-band", False, (s + 1, N), {"n": n, "reason": "entry below n-s-1"})
        expected = -alpha * band.a(n, n - s) * fam.C(n - s) + band.a(n - 1, low) * fam.C(n)
        if srel.a(n, low) != expected:
            return srel, Check("sq-band", False, (s + 1, N),
                               {"n": n, "got": srel.a(n, low), "expected": expected})
    return srel, Check("sq-band", True, (s + 1, N))


def band_support_check(band: BandRelation, allowed: set, name: str = "band-support") -> Check:
    """Every nonzero entry lies on one of the ``allowed`` offsets."""
    for n in sorted(band.rows):
        for j in band.rows[n]:
            if j - n not in allowed:
                return Check(name, False, band.n_range, {"n": n, "offset": j - n})
    return Check(name, True, band.n_range)


def lowest_entries_nonzero(band: BandRelation, name: str = "band-exact") -> Check:
    """a_{n,n-s} != 0 for s <= n within the extracted range."""
    s = band.s
    for n in range(s, band.n_range[1] + 1):
        if band.a(n, n - s) == 0:
            return Check(name, False, (s, band.n_range[1]), {"n": n})
    return Check(name, True, (s, band.n_range[1]))


# -- k1, k2 -------------------------------------------------------------------------

@dataclass
class KFit:
    k1: object
    k2: object
    check: Check


def fit_k_sequence(y: dict, s: int, ctx: QContext, N: int) -> KFit:
    """Fit y(n) = k1 t^n + k2 t^-n from n = s, s+1 and check it for s <= n <= N,
    together with y(n) - 2 alpha y(n-1) + y(n-2) = 0."""
    t = ctx.t
    ts, ts1 = ctx.tpow(s), ctx.tpow(s + 1)
    its, its1 = ctx.tpow(-s), ctx.tpow(-s - 1)
    det = ts * its1 - its * ts1  # = 1/t - t
    if det == 0:
        return KFit(None, None, Check("k-fit", False, (s, N), {"reason": "singular 2x2 system"}))
    y0, y1 = y[s], y[s + 1]
    k1 = (y0 * its1 - its * y1) / det
    k2 = (ts * y1 - ts1 * y0) / det
    for n in range(s, N + 1):
        if y[n] != k1 * ctx.tpow(n) + k2 * ctx.tpow(-n):
            return KFit(k1, k2, Check("k-fit", False, (s, N), {"n": n, "reason": "closed form"}))
        if n >= s + 2 and y[n] - 2 * ctx.alpha * y[n - 1] + y[n - 2] != 0:
            return KFit(k1, k2, Check("k-fit", False, (s, N), {"n": n, "reason": "difference equation"}))
    return KFit(k1, k2, Check("k-fit", True, (s, N)))


def normalized_lowest(band: BandRelation, fam: OPSFamily) -> dict:
    """y(n) = a_{n,n-s} / (C_{n-s+1} ... C_n)."""
    s = band.s
    out = {}
    for n in range(s, band.n_range[1] + 1):
        prod = fam.C(n) * 0 + 1
        for j in range(n - s + 1, n + 1):
            prod = prod * fam.C(j)
        out[n] = band.a(n, n - s) / prod
    return out


def fit_k1k2(band: BandRelation, fam: OPSFamily, ctx: QContext, sband: BandRelation | None = None) -> KFit:
    """Constants k1, k2 with a_{n,n-s} = (k1 t^n + k2 t^-n) prod_{j=n-s+1}^n C_j.

    When the S_q band is supplied, also checks
    2 a~_{n,n-s-1} = -(t - 1/t)(k1 t^n - k2 t^-n) prod_{j=n-s}^n C_j.
    """
    s, N = band.s, band.n_range[1]
    if N < s + 2:
        raise ValueError("need at least s + 3 rows to fit and test k1, k2")
    fit = fit_k_sequence(normalized_lowest(band, fam), s, ctx, N)
    if not fit.check.ok or sband is None:
        return fit
    t = ctx.t
    for n in range(s + 1, N + 1):
        prod = ctx.one
        for j in range(n - s, n + 1):
            prod = prod * fam.C(j)
        rhs = -(t - 1 / t) * (fit.k1 * ctx.tpow(n) - fit.k2 * ctx.tpow(-n)) * prod
        if 2 * sband.a(n, n - s - 1) != rhs:
            return KFit(fit.k1, fit.k2, Check("k-fit", False, (s, N), {"n": n, "reason": "S_q band closed form"}))
    return fit


# -- band <-> Pearson triple -------------------------------------------------------------

def band_from_moments(fam: OPSFamily, phi: Poly, N: int, ctx: QContext, u: lf.LinearForm | None = None) -> dict:
    """a_{n,j} = <u, phi P_j D_q P_n> / h_j for 0 <= n <= N, computed from moments."""
    top = N + max(phi.degree, 0)
    fam.build(top)
    depth = 2 * top
    if u is None or u.valid_degree < depth:
        u = moments(fam, depth)
    rows = {}
    for n in range(N + 1):
        w = phi * dq(fam.P(n), ctx)
        if w.is_zero():
            rows[n] = {}
            continue
        wu = lf.mul_poly(w, u)
        row = {}
        for j in range(w.degree + 1):
            val = lf.apply(wu, fam.P(j))
            if val != 0:
                row[j] = val / fam.h(j)
        rows[n] = row
    return rows


def thm31_forward(fam: OPSFamily, phi: Poly, psi: Poly, rho: Poly, N: int, ctx: QContext,
                  u: lf.LinearForm | None = None):
    """From D_q(phi u) = psi u, S_q(phi u) = rho u: band entries via moments and their lowest value.

    With s = max(deg psi, deg rho - 1) and m = n - s the lowest entry obeys
    -alpha h_m a_{n,m} = (b alpha_{m-1} + a gamma_m) h_n, where b is the
    leading coefficient of psi if deg psi = s (else 0) and a that of rho if
    deg rho - 1 = s (else 0).  Returns (rows, Check).
    """
    s = max(psi.degree, rho.degree - 1)
    b = psi.lc if psi.degree == s else 0
    a = rho.lc if rho.degree - 1 == s else 0
    rows = band_from_moments(fam, phi, N, ctx, u)
    alpha = ctx.alpha
    for n in range(N + 1):
        for j in rows[n]:
            if j < n - s:
                return rows, Check("thm31-forward", False, (0, N), {"n": n, "j": j, "reason": "entry below n-s"})
        if n >= s:
            m = n - s
            expected = -(b * ctx.alpha_n(m - 1) + a * ctx.gamma_n(m)) * fam.h(n) / (alpha * fam.h(m))
            got = rows[n].get(m, 0)
            if got != expected:
                return rows, Check("thm31-forward", False, (0, N),
                                   {"n": n, "got": got, "expected": expected})
    return rows, Check("thm31-forward", True, (0, N))


def _combination(fam: OPSFamily, band: BandRelation, n: int, sign: int):
    """sign * h_n * sum_{j} (a_{j,n}/h_j) P_j over the rows that reach column n."""
    s = band.s
    lo = max(0, n - band.phi.degree + 1)
    out = Poly()
    for j in range(lo, n + s + 1):
        a = band.a(j, n)
        if a != 0:
            out = out + fam.P(j) * (a / fam.h(j))
    return out * (fam.h(n) * sign)


def r_poly(fam: OPSFamily, band: BandRelation, n: int) -> Poly:
    """R_{n+s} = -h_n sum_j (a_{j,n}/h_j) P_j."""
    return _combination(fam, band, n, -1)


def q_poly(fam: OPSFamily, band: BandRelation, n: int) -> Poly:
    """Q_{n+s} = h_n sum_j (a_{j,n}/h_j) P_j."""
    return _combination(fam, band, n, 1)


@dataclass
class Thm31Result:
    psi: Poly
    rho: Poly
    checks: list

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def thm31_reverse(band: BandRelation, fam: OPSFamily, ctx: QContext, N: int = 40,
                  u: lf.LinearForm | None = None) -> Thm31Result:
    """psi = R_s, rho = alpha R_{s+1} - (x - alpha B_0) R_s, then verify on moments:
    D_q(phi u) = psi u and S_q(phi u) = rho u for n <= N, and admissibility of (psi, rho)."""
    s = band.s
    if band.n_range[1] < s + 1:
        raise ValueError("the band must contain rows up to s + 1")
    psi = r_poly(fam, band, 0)
    if psi.is_zero():
        raise ArithmeticError("R_s vanishes, contradicting an exact band")
    R1 = r_poly(fam, band, 1)
    x = Poly((ctx.zero, ctx.one))
    rho = R1 * ctx.alpha - (x - fam.B(0) * ctx.alpha) * psi
    depth = N + max(band.phi.degree, psi.degree, rho.degree)
    if u is None or u.valid_degree < depth:
        u = moments(fam, depth)
    phiu = lf.mul_poly(band.phi, u)
    checks = []
    lhs, rhs = lf.common(lf.dq_form(phiu, ctx), lf.mul_poly(psi, u))
    checks.append(_moment_check("D(phi u) = psi u", lhs, rhs, N))
    lhs, rhs = lf.common(lf.sq_form(phiu, ctx), lf.mul_poly(rho, u))
    checks.append(_moment_check("S(phi u) = rho u", lhs, rhs, N))
    adm = admissible(rho, psi, N, ctx)
    checks.append(Check("admissible(psi, rho)", adm.admissible, (0, N),
                        None if adm.admissible else {"n": adm.n}, adm.method))
    return Thm31Result(psi, rho, checks)


def _moment_check(name: str, lhs: lf.LinearForm, rhs: lf.LinearForm, N: int) -> Check:
    if lhs.valid_degree < N:
        raise ValueError(f"{name}: moments only reach degree {lhs.valid_degree}")
    for n in range(N + 1):
        if lhs.moments[n] != rhs.moments[n]:
            return Check(name, False, (0, N), {"n": n, "lhs": lhs.moments[n], "rhs": rhs.moments[n]})
    return Check(name, True, (0, N))


# -- normal pair and class -------------------------------------------------------------

@dataclass
class Thm32Result:
    Qs: Poly
    Qs1: Poly
    R: Poly  # Q_{s+1} - (alpha x - B_0) Q_s
    normal: NormalPair
    report: ClassReport
    checks: list

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def thm32_pipeline(band: BandRelation, fam: OPSFamily, ctx: QContext, N: int = 40,
                   u: lf.LinearForm | None = None) -> Thm32Result:
    """Q_s, Q_{s+1}, the Pearson pair (Q_{s+1} - (alpha x - B_0) Q_s, Q_s), its normal form and the class."""
    s = band.s
    Qs = q_poly(fam, band, 0)
    Qs1 = q_poly(fam, band, 1)
    x = Poly((ctx.zero, ctx.one))
    R = Qs1 - (x * ctx.alpha - fam.B(0)) * Qs
    normal = pearson_to_normal(PearsonPair(R, Qs), ctx)
    depth = N + max(R.degree, normal.Phi.degree, normal.Psi.degree) + 1
    if u is None or u.valid_degree < depth:
        u = moments(fam, depth)
    checks = [verify_pearson(PearsonPair(R, Qs), u, ctx, N, name="D(R u) = S(Q_s u)")]
    if normal.Phi.is_zero() or normal.Psi.is_zero():
        report = ClassReport(s, -1, None, "NotRegular", "regularity contradiction: a normal-form member vanishes")
        checks.append(Check("normal-form", False, None, detail=report.diagnostic))
    else:
        checks.append(verify_normal(normal, u, ctx, N, name="Phi D(u) = Psi S(u)"))
        report = class_from_normal(normal, s)
    return Thm32Result(Qs, Qs1, R, normal, report, checks)
