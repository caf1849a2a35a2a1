"""Askey-Wilson divided-difference and averaging operators on polynomials.

With x = (z + 1/z)/2 and t = q^(1/2),

    D_q f = (f(tz) - f(z/t)) / (x(tz) - x(z/t)),      S_q f = (f(tz) + f(z/t)) / 2,

where f(tz) means the symmetric Laurent form of f evaluated at tz.  Both are
computed through :mod:`semiclassical.poly`'s Laurent helpers; images of x^n are
cached per context and reused by the linear extensions ``dq`` and ``sq``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from semiclassical.poly import (
    AntiLaurent,
    Poly,
    divide_antisym,
    from_symlaurent,
    shift_z,
    to_symlaurent,
)
from semiclassical.scalar import QContext, format_scalar


def _require_aw(ctx: QContext):
    if ctx.operator != "askey-wilson":
        raise ValueError("Askey-Wilson operators need a context with q = t^2")


def dq_laurent(f: Poly, ctx: QContext) -> Poly:
    """D_q f straight through the Laurent route (no caching)."""
    _require_aw(ctx)
    if f.degree <= 0:
        return Poly()
    g = to_symlaurent(f)
    t = ctx.t
    _, up = shift_z(g, t)
    _, down = shift_z(g, 1 / t)
    quotient = divide_antisym(up - down)
    # x(tz) - x(z/t) = (t - 1/t)(z - 1/z)/2
    factor = 2 / (t - 1 / t)
    return from_symlaurent(type(quotient)(tuple(c * factor for c in quotient.coeffs)))


def sq_laurent(f: Poly, ctx: QContext) -> Poly:
    """S_q f straight through the Laurent route (no caching)."""
    _require_aw(ctx)
    if f.degree <= 0:
        return f
    g = to_symlaurent(f)
    t = ctx.t
    up, _ = shift_z(g, t)
    down, _ = shift_z(g, 1 / t)
    n = max(len(up.coeffs), len(down.coeffs))
    zero = ctx.zero
    summed = [
        ((up.coeffs[k] if k < len(up.coeffs) else zero) + (down.coeffs[k] if k < len(down.coeffs) else zero)) / 2
        for k in range(n)
    ]
    return from_symlaurent(type(up)(summed))


def _monomial_images(ctx: QContext, n: int):
    """(D_q x^n, S_q x^n), built once per context."""
    cache = ctx.cache.setdefault("aw-monomials", {})
    hit = cache.get(n)
    if hit is None:
        xn = Poly.monomial(ctx.one, n)
        hit = (dq_laurent(xn, ctx), sq_laurent(xn, ctx))
        cache[n] = hit
    return hit


def dq_monomial(n: int, ctx: QContext) -> Poly:
    return _monomial_images(ctx, n)[0]


def sq_monomial(n: int, ctx: QContext) -> Poly:
    return _monomial_images(ctx, n)[1]


def _combine(f: Poly, images, ctx: QContext) -> Poly:
    size = max((len(img.coeffs) for img in images), default=0)
    out = [None] * size
    for fk, img in zip(f.coeffs, images):
        if fk == 0:
            continue
        for j, c in enumerate(img.coeffs):
            if c == 0:
                continue
            term = fk * c
            out[j] = term if out[j] is None else out[j] + term
    zero = ctx.zero
    return Poly(zero if c is None else c for c in out)


def dq(f: Poly, ctx: QContext) -> Poly:
    """Askey-Wilson divided difference of a polynomial."""
    _require_aw(ctx)
    return _combine(f, [dq_monomial(k, ctx) for k in range(len(f.coeffs))], ctx)


def sq(f: Poly, ctx: QContext) -> Poly:
    """Askey-Wilson average of a polynomial."""
    _require_aw(ctx)
    return _combine(f, [sq_monomial(k, ctx) for k in range(len(f.coeffs))], ctx)


def dq_power(f: Poly, n: int, ctx: QContext) -> Poly:
    for _ in range(n):
        f = dq(f, ctx)
    return f


@dataclass(frozen=True)
class StructuralPolys:
    U1: Poly
    U2: Poly


def structural_polys(ctx: QContext) -> StructuralPolys:
    """U1 = (alpha^2 - 1) x and U2 = (alpha^2 - 1)(x^2 - 1)."""
    k = ctx.alpha * ctx.alpha - 1
    zero = ctx.zero
    return StructuralPolys(Poly((zero, k)), Poly((-k, zero, k)))


# -- identity checker -----------------------------------------------------------

@dataclass
class IdentityCheck:
    name: str
    passed: int = 0
    failed: int = 0
    counterexample: dict | None = None

    @property
    def status(self) -> str:
        return "pass" if self.failed == 0 else "fail"

    def to_dict(self) -> dict:
        out = {"name": self.name, "status": self.status, "trials": self.passed + self.failed}
        if self.counterexample is not None:
            out["witness"] = self.counterexample
        return out


@dataclass
class Lemma25Report:
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def to_dict(self) -> dict:
        return {"pass": self.ok, "checks": [c.to_dict() for c in self.checks]}


def random_scalar(rng: random.Random, ctx: QContext):
    """Small random field element: a short Laurent polynomial in t in symbolic mode."""
    if ctx.mode == "symbolic":
        value = ctx.zero
        for k in range(-1, 2):
            c = rng.randint(-3, 3)
            if c:
                value = value + ctx.tpow(k) * c
        return value
    return ctx.scalar(rng.randint(-5, 5)) / rng.randint(1, 4)


def random_poly(rng: random.Random, degree: int, ctx: QContext) -> Poly:
    coeffs = [random_scalar(rng, ctx) for _ in range(degree + 1)]
    if coeffs and coeffs[-1] == 0:
        coeffs[-1] = ctx.one
    return Poly(coeffs)


LEMMA25_NAMES = (
    "D(fg)",
    "S(fg)",
    "f*D(g)",
    "D(fu)",
    "S(fu)",
    "f*D(u)",
    "f*S(u)",
    "D^n S(u)",
)


def verify_lemma25(deg_bound: int, trials: int, seed: int, ctx: QContext) -> Lemma25Report:
    """Check the eight product/commutation rules on seeded random data.

    Polynomial rules are compared coefficientwise; rules between forms are
    compared on every moment inside the common valid degree.
    """
    from semiclassical import linform as lf

    if deg_bound < 1:
        raise ValueError("deg_bound must be at least 1")
    _require_aw(ctx)
    rng = random.Random(seed)
    U = structural_polys(ctx)
    U1, U2 = U.U1, U.U2
    alpha = ctx.alpha
    inv_alpha = 1 / alpha
    checks = {name: IdentityCheck(name) for name in LEMMA25_NAMES}
    depth = 2 * deg_bound + 8

    def record(name, lhs, rhs, payload):
        check = checks[name]
        if lhs == rhs:
            check.passed += 1
        else:
            check.failed += 1
            if check.counterexample is None:
                check.counterexample = payload()

    for trial in range(trials):
        f = random_poly(rng, rng.randint(0, deg_bound), ctx)
        g = random_poly(rng, rng.randint(0, deg_bound), ctx)
        u = lf.LinearForm([random_scalar(rng, ctx) for _ in range(depth + 1)])

        def payload(f=f, g=g, u=u, trial=trial):
            return {"trial": trial, "f": str(f), "g": str(g), "u": [format_scalar(m) for m in u.moments]}

        Df, Sf, Dg, Sg = dq(f, ctx), sq(f, ctx), dq(g, ctx), sq(g, ctx)
        record("D(fg)", dq(f * g, ctx), Df * Sg + Sf * Dg, payload)
        record("S(fg)", sq(f * g, ctx), Df * Dg * U2 + Sf * Sg, payload)
        rhs = dq((Sf - U1 * Df * inv_alpha) * g, ctx) - sq(g * Df, ctx) * inv_alpha
        record("f*D(g)", f * Dg, rhs, payload)

        Du, Su = lf.dq_form(u, ctx), lf.sq_form(u, ctx)
        lhs = lf.dq_form(lf.mul_poly(f, u), ctx).scale(alpha)
        rhs = lf.mul_poly(Sf * alpha - U1 * Df, Du) + lf.mul_poly(Df, Su)
        record("D(fu)", *lf.common(lhs, rhs), payload)
        lhs = lf.sq_form(lf.mul_poly(f, u), ctx).scale(alpha)
        rhs = lf.mul_poly((U2 * (alpha * alpha) - U1 * U1) * Df, Du) + lf.mul_poly(Sf * alpha + U1 * Df, Su)
        record("S(fu)", *lf.common(lhs, rhs), payload)
        lhs = lf.mul_poly(f, Du)
        rhs = lf.dq_form(lf.mul_poly(Sf, u), ctx) - lf.sq_form(lf.mul_poly(Df, u), ctx)
        record("f*D(u)", *lf.common(lhs, rhs), payload)
        lhs = lf.mul_poly(f, Su)
        rhs = lf.sq_form(lf.mul_poly(Sf, u), ctx) - lf.dq_form(lf.mul_poly(U2 * Df, u), ctx)
        record("f*S(u)", *lf.common(lhs, rhs), payload)

        Dn = u
        ok = True
        for n in range(0, 4):
            # Dn = D^n u here
            lhs = lf.dq_power(Su, n, ctx).scale(alpha)
            rhs = lf.sq_form(Dn, ctx).scale(ctx.alpha_n(n + 1)) + lf.mul_poly(U1 * ctx.gamma_n(n), lf.dq_form(Dn, ctx))
            a, b = lf.common(lhs, rhs)
            ok = ok and a == b
            Dn = lf.dq_form(Dn, ctx)
        record("D^n S(u)", ok, True, payload)

    return Lemma25Report([checks[name] for name in LEMMA25_NAMES])
