"""Pearson equations D_q(phi u) = S_q(psi u) and their normal form Phi D_q u = Psi S_q u."""

from __future__ import annotations

from dataclasses import dataclass

from semiclassical import linform as lf
from semiclassical.awops import dq, dq_monomial, sq, sq_monomial, structural_polys
from semiclassical.poly import Poly, gcd
from semiclassical.report import Check
from semiclassical.scalar import QContext, RatFunc


@dataclass(frozen=True)
class PearsonPair:
    """(phi, psi) standing for D_q(phi u) = S_q(psi u)."""

    phi: Poly
    psi: Poly

    def __post_init__(self):
        if self.phi.is_zero() and self.psi.is_zero():
            raise ValueError("a Pearson pair needs a nonzero member")

    @property
    def naive_class(self) -> int:
        return max(self.phi.degree - 2, self.psi.degree - 1)

    def scaled(self, c) -> "PearsonPair":
        return PearsonPair(self.phi * c, self.psi * c)


@dataclass(frozen=True)
class NormalPair:
    """(Phi, Psi) standing for Phi D_q u = Psi S_q u."""

    Phi: Poly
    Psi: Poly


@dataclass
class ClassReport:
    s_naive: int
    r_common: int
    cls: int | None
    verdict: str  # "Classical", "Semiclassical", "NotRegular", "Inconclusive"
    diagnostic: str = ""

    def to_dict(self) -> dict:
        out = {"s": self.s_naive, "r_common": self.r_common, "class": self.cls, "verdict": self.verdict}
        if self.diagnostic:
            out["diagnostic"] = self.diagnostic
        return out


class InsufficientDepthError(ValueError):
    pass


# -- verification on moments -------------------------------------------------------------

def pearson_residuals(pair: PearsonPair, u: lf.LinearForm, ctx: QContext) -> lf.LinearForm:
    """Moments of D_q(phi u) - S_q(psi u) over the range both sides are determined."""
    lhs = lf.dq_form(lf.mul_poly(pair.phi, u), ctx)
    rhs = lf.sq_form(lf.mul_poly(pair.psi, u), ctx)
    return lhs - rhs


def verify_pearson(pair: PearsonPair, u: lf.LinearForm, ctx: QContext, N: int | None = None,
                   name: str = "pearson") -> Check:
    """Check -<u, phi D_q x^n> = <u, psi S_q x^n> for n = 0..N (default: as deep as u allows)."""
    res = pearson_residuals(pair, u, ctx)
    depth = res.valid_degree
    if N is None:
        N = depth
    elif N > depth:
        raise InsufficientDepthError(f"moments support n <= {depth}, asked for {N}")
    for n in range(N + 1):
        if res.moments[n] != 0:
            return Check(name, False, (0, N), {"n": n, "residual": res.moments[n]})
    return Check(name, True, (0, N))


def verify_normal(np_: NormalPair, u: lf.LinearForm, ctx: QContext, N: int | None = None,
                  name: str = "normal-form") -> Check:
    """Check <Phi D_q u - Psi S_q u, x^n> = 0."""
    lhs = lf.mul_poly(np_.Phi, lf.dq_form(u, ctx))
    rhs = lf.mul_poly(np_.Psi, lf.sq_form(u, ctx))
    res = lhs - rhs
    depth = res.valid_degree
    if N is None:
        N = depth
    elif N > depth:
        raise InsufficientDepthError(f"moments support n <= {depth}, asked for {N}")
    for n in range(N + 1):
        if res.moments[n] != 0:
            return Check(name, False, (0, N), {"n": n, "residual": res.moments[n]})
    return Check(name, True, (0, N))


def moments_from_pearson(pair: PearsonPair, N: int, ctx: QContext) -> lf.LinearForm:
    """Moments (u_0 = 1) of the solution of a Pearson equation with deg phi <= 2, deg psi = 1.

    The n-th equation <u, phi D_q x^n + psi S_q x^n> = 0 has degree n + 1 and
    leading coefficient a gamma_n + d alpha_n, so it fixes u_{n+1}.
    """
    if pair.phi.degree > 2 or pair.psi.degree != 1:
        raise ValueError("the moment recursion needs deg phi <= 2 and deg psi = 1")
    moments = [ctx.one]
    for n in range(N):
        poly = pair.phi * dq_monomial(n, ctx) + pair.psi * sq_monomial(n, ctx)
        lead = poly.coeff(n + 1)
        if lead == 0:
            raise ZeroDivisionError(f"moment recursion breaks down at n = {n}")
        acc = ctx.zero
        for k in range(n + 1):
            acc = acc + poly.coeff(k) * moments[k]
        moments.append(-acc / lead)
    return lf.LinearForm(moments)


# -- regularity criterion for classical pairs -----------------------------------------------

def regularity_thm23(phi: Poly, psi: Poly, N: int, ctx: QContext) -> Check:
    """Regularity test for D_q(phi u) = S_q(psi u), phi = ax^2+bx+c, psi = dx+e.

    With d_n = a gamma_n + d alpha_n, e_n = b gamma_n + e alpha_n and
    phi^[n](x) = (d(alpha^2-1)gamma_2n + a alpha_2n)(x^2 - 1/2)
                 + (b alpha_n + e(alpha^2-1)gamma_n) x + c + a/2,
    the form is regular iff d_n != 0 and phi^[n](-e_n/d_2n) != 0 for every n.
    Checks n = 0..N and reports the first failure.
    """
    if phi.degree > 2 or psi.degree > 1:
        raise ValueError("the criterion applies to deg phi <= 2, deg psi <= 1")
    a, b, c = phi.coeff(2), phi.coeff(1), phi.coeff(0)
    d, e = psi.coeff(1), psi.coeff(0)
    k = ctx.alpha * ctx.alpha - 1
    for n in range(N + 1):
        an, gn = ctx.alpha_n(n), ctx.gamma_n(n)
        dn = a * gn + d * an
        if dn == 0:
            return Check("regularity", False, (0, N), {"n": n, "reason": "d_n = 0"})
        d2n = a * ctx.gamma_n(2 * n) + d * ctx.alpha_n(2 * n)
        if d2n == 0:
            return Check("regularity", False, (0, N), {"n": n, "reason": "d_2n = 0"})
        en = b * gn + e * an
        x0 = -en / d2n
        quad = d * k * ctx.gamma_n(2 * n) + a * ctx.alpha_n(2 * n)
        lin = b * an + e * k * gn
        value = quad * (x0 * x0 - ctx.one / 2) + lin * x0 + c + a / 2
        if value == 0:
            return Check("regularity", False, (0, N), {"n": n, "reason": "phi^[n](-e_n/d_2n) = 0"})
    return Check("regularity", True, (0, N))


# -- admissibility ------------------------------------------------------------------------

@dataclass
class Admissibility:
    admissible: bool
    n: int | None = None
    method: str = ""
    scanned_to: int | None = None

    def to_dict(self) -> dict:
        return {"admissible": self.admissible, "n": self.n, "method": self.method, "scanned_to": self.scanned_to}

    def __bool__(self):
        return self.admissible


def _power_index(r, base):
    """Smallest n >= 0 with base^n == r for a rational base with |base| != 1, else None."""
    if r == 0:
        return None
    p = base * 0 + 1
    n = 0
    growing = abs(base) > 1
    while True:
        if p == r:
            return n
        if (growing and abs(p) > abs(r)) or (not growing and abs(p) < abs(r)):
            return None
        p = p * base
        n += 1


def admissible(phi: Poly, psi: Poly, N: int, ctx: QContext) -> Admissibility:
    """Admissibility of (phi, psi): deg phi - 1 != deg psi, or
    lc(phi) gamma_n + lc(psi) alpha_{n-1} never vanishes.

    That combination equals A t^n + B t^-n with
    A = a/(t - 1/t) + b/(2t) and B = -a/(t - 1/t) + b t/2, so it vanishes at n
    exactly when t^(2n) = -B/A.  This is decided exactly in both modes (for
    rational t the powers of t^2 are strictly monotone in size); a direct scan
    of n <= N is run as a cross-check.
    """
    if psi.is_zero():
        raise ValueError("admissibility needs psi != 0")
    p, q = phi.degree, psi.degree
    if p - 1 != q:
        return Admissibility(True, method="degree")
    a, b = phi.lc, psi.lc
    t = ctx.t
    A = a / (t - 1 / t) + b / (2 * t)
    B = -a / (t - 1 / t) + b * t / 2
    witness = None
    if A == 0:
        witness = 0 if B == 0 else None
    else:
        r = -B / A
        if ctx.mode == "symbolic":
            mono = r.as_monomial() if isinstance(r, RatFunc) else None
            if r == 1:
                witness = 0
            elif mono is not None and mono[0] == 1 and mono[1] > 0 and mono[1] % 2 == 0:
                witness = mono[1] // 2
        else:
            witness = _power_index(r, t * t)
    # direct scan as a cross-check
    for n in range(N + 1):
        if a * ctx.gamma_n(n) + b * ctx.alpha_n(n - 1) == 0:
            if witness is None or n < witness:
                raise AssertionError(f"admissibility decision disagrees with the scan at n = {n}")
            break
    if witness is not None:
        return Admissibility(False, witness, method="exact", scanned_to=N)
    return Admissibility(True, method="exact", scanned_to=N)


# -- conversions ------------------------------------------------------------------------------

def triple_to_pearson(phi: Poly | None, psi: Poly, rho: Poly, ctx: QContext) -> PearsonPair:
    """From D_q(phi u) = psi u and S_q(phi u) = rho u to D_q((rho - U1 psi) u) = S_q(alpha psi u)."""
    if psi.is_zero():
        raise ValueError("psi must be nonzero")
    U1 = structural_polys(ctx).U1
    first = rho - U1 * psi
    return PearsonPair(first, psi * ctx.alpha)


def is_degenerate(pair: PearsonPair) -> bool:
    return pair.phi.is_zero() or pair.psi.is_zero()


def pearson_to_normal(pair: PearsonPair, ctx: QContext) -> NormalPair:
    """Phi = alpha S phi - U1 D phi + (U1^2 - alpha^2 U2) D psi,
    Psi = alpha S psi + U1 D psi - D phi."""
    U = structural_polys(ctx)
    al = ctx.alpha
    phi, psi = pair.phi, pair.psi
    Dphi, Sphi, Dpsi, Spsi = dq(phi, ctx), sq(phi, ctx), dq(psi, ctx), sq(psi, ctx)
    Phi = Sphi * al - U.U1 * Dphi + (U.U1 * U.U1 - U.U2 * (al * al)) * Dpsi
    Psi = Spsi * al + U.U1 * Dpsi - Dphi
    return NormalPair(Phi, Psi)


def normal_to_pearson(np_: NormalPair, ctx: QContext) -> PearsonPair:
    """phi = S Phi + U2 D Psi, psi = S Psi + D Phi."""
    U = structural_polys(ctx)
    Phi, Psi = np_.Phi, np_.Psi
    return PearsonPair(sq(Phi, ctx) + U.U2 * dq(Psi, ctx), sq(Psi, ctx) + dq(Phi, ctx))


def class_from_normal(np_: NormalPair, s: int) -> ClassReport:
    """Class s - 1 - r with r = deg gcd(Phi, Psi) (common zeros with multiplicity)."""
    if np_.Phi.is_zero() or np_.Psi.is_zero():
        return ClassReport(s, -1, None, "NotRegular", "a member of the normal pair vanishes")
    r = gcd(np_.Phi, np_.Psi).degree
    if r > s - 1:
        return ClassReport(s, r, None, "Inconclusive",
                           f"bound violated: {r} common zeros exceed s - 1 = {s - 1}")
    cls = s - 1 - r
    if cls == 0:
        return ClassReport(s, r, 0, "Classical")
    return ClassReport(s, r, cls, "Semiclassical")
