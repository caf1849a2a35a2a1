"""Hahn's operator D_{q,w} f = (f(qx + w) - f(x)) / ((q - 1)x + w) and its form calculus.

Symbolic mode uses the field generator t as q itself.  The dual operator is
<D_{q,w} u, f> = -q^{-1} <u, D_{1/q,-w/q} f>; ``HahnContext.starred`` gives the
parameters (1/q, -w/q).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from semiclassical import linform as lf
from semiclassical.opseq import OPSFamily, expand_in_basis, moments
from semiclassical.poly import Poly, compose_linear, exact_div
from semiclassical.report import Check
from semiclassical.scalar import QContext, RatFunc


@dataclass(eq=False)
class HahnContext:
    """Parameters (q, w) of Hahn's operator over the field of ``ctx``."""

    ctx: QContext
    q: object
    omega: object
    _qint: dict = field(default_factory=dict, repr=False)
    _images: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.q = self.ctx.scalar(self.q)
        self.omega = self.ctx.scalar(self.omega)
        if self.q == 0:
            raise ValueError("q must be nonzero")
        if self.q == 1 and self.omega == 0:
            raise ValueError("q = 1 needs w != 0")
        if self.ctx.mode == "rational" and self.q == -1:
            raise ValueError("q = -1 is a root of unity")

    @classmethod
    def symbolic(cls, omega=0) -> "HahnContext":
        ctx = QContext.symbolic("hahn")
        return cls(ctx, ctx.t, omega)

    @classmethod
    def rational(cls, q, omega=0) -> "HahnContext":
        ctx = QContext.rational(q, "hahn")
        return cls(ctx, ctx.t, omega)

    def starred(self) -> "HahnContext":
        """Parameters (1/q, -w/q) of the operator paired with D_{q,w} by duality."""
        key = "hahn-starred"
        cached = self.ctx.cache.get(key)
        if cached is None or cached[0] is not self:
            star = HahnContext(self.ctx, 1 / self.q, -self.omega / self.q)
            self.ctx.cache[key] = (self, star)
            return star
        return cached[1]

    def qint(self, n: int):
        """[n]_q = (q^n - 1)/(q - 1), any integer n; n at q = 1."""
        if n not in self._qint:
            q = self.q
            if q == 1:
                self._qint[n] = self.ctx.scalar(n)
            else:
                self._qint[n] = (q ** n - 1) / (q - 1)
        return self._qint[n]


def dqw_direct(f: Poly, hctx: HahnContext) -> Poly:
    """D_{q,w} f by composing and dividing; the numerator always vanishes where the denominator does."""
    if f.degree <= 0:
        return Poly()
    num = compose_linear(f, hctx.q, hctx.omega) - f
    den = Poly((hctx.omega, hctx.q - 1))
    return exact_div(num, den)


def dqw_monomial(n: int, hctx: HahnContext) -> Poly:
    img = hctx._images.get(n)
    if img is None:
        img = dqw_direct(Poly.monomial(hctx.ctx.one, n), hctx)
        hctx._images[n] = img
    return img


def dqw(f: Poly, hctx: HahnContext) -> Poly:
    """Hahn's operator, extended linearly from cached images of x^n."""
    if f.degree <= 0:
        return Poly()
    out = [None] * f.degree
    for k, fk in enumerate(f.coeffs):
        if k == 0 or fk == 0:
            continue
        for j, c in enumerate(dqw_monomial(k, hctx).coeffs):
            if c != 0:
                term = fk * c
                out[j] = term if out[j] is None else out[j] + term
    zero = hctx.ctx.zero
    return Poly(zero if c is None else c for c in out)


def dqw_dual(u: lf.LinearForm, hctx: HahnContext) -> lf.LinearForm:
    """<D_{q,w} u, x^n> = -q^{-1} <u, D_{1/q,-w/q} x^n>; valid to N + 1."""
    star = hctx.starred()
    k = -1 / hctx.q
    out = [u.moments[0] * 0]
    for n in range(1, u.valid_degree + 2):
        out.append(lf.apply(u, dqw_monomial(n, star)) * k)
    return lf.LinearForm(out)


def dqw_star_dual(u: lf.LinearForm, hctx: HahnContext) -> lf.LinearForm:
    """The transposed operator with parameters (1/q, -w/q): <., x^n> = -q <u, D_{q,w} x^n>."""
    return dqw_dual(u, hctx.starred())


# -- classical Pearson data ----------------------------------------------------------------

@dataclass
class Thm64Result:
    check: Check
    B: list
    C: list  # C[0] = 0, C[n+1] from the formula

    @property
    def ok(self) -> bool:
        return self.check.ok


def thm64(phi: Poly, psi: Poly, N: int, hctx: HahnContext) -> Thm64Result:
    """Regularity and recurrence coefficients for D_{q,w}(phi u) = psi u,
    phi = ax^2 + bx + c, psi = dx + e.

    d_n = d q^n + a [n]_q, e_n = e q^n + (w d_n + b)[n]_q; regular iff
    d_n != 0 and phi(-e_n/d_2n) != 0.  Then
    B_n = w[n] + [n] e_{n-1}/d_{2n-2} - [n+1] e_n/d_{2n} and
    C_{n+1} = -q^n [n+1] d_{n-1} phi(-e_n/d_2n) / (d_{2n-1} d_{2n+1}).
    Returns B_0..B_N and C_0..C_{N+1}.
    """
    if phi.degree > 2 or psi.degree > 1:
        raise ValueError("needs deg phi <= 2 and deg psi <= 1")
    q, w = hctx.q, hctx.omega
    a, b = phi.coeff(2), phi.coeff(1)
    d, e = psi.coeff(1), psi.coeff(0)
    zero = hctx.ctx.zero

    dn_cache = {}

    def dn(n):
        if n not in dn_cache:
            dn_cache[n] = d * q ** n + a * hctx.qint(n)
        return dn_cache[n]

    def en(n):
        return e * q ** n + (w * dn(n) + b) * hctx.qint(n)

    B, C = [], [zero]
    for n in range(N + 1):
        for m in (n, 2 * n, 2 * n + 1):
            if dn(m) == 0:
                return Thm64Result(Check("thm64-regularity", False, (0, N), {"n": n, "reason": f"d_{m} = 0"}), B, C)
        x0 = -en(n) / dn(2 * n)
        value = phi(x0)
        if value == 0:
            return Thm64Result(Check("thm64-regularity", False, (0, N), {"n": n, "reason": "phi(-e_n/d_2n) = 0"}), B, C)
        Bn = w * hctx.qint(n) - hctx.qint(n + 1) * en(n) / dn(2 * n)
        if n >= 1:
            Bn = Bn + hctx.qint(n) * en(n - 1) / dn(2 * n - 2)
        B.append(Bn)
        if n == 0:
            C.append(-hctx.qint(1) * value / dn(1))
        else:
            C.append(-q ** n * hctx.qint(n + 1) * dn(n - 1) * value / (dn(2 * n - 1) * dn(2 * n + 1)))
    return Thm64Result(Check("thm64-regularity", True, (0, N)), B, C)


def asc_pearson(r, s, hctx: HahnContext):
    """The classical pair (1, psi) of the Al-Salam-Carlitz form, written for the
    operator with parameters (1/q, -w/q) where (q, w) are ``hctx``'s."""
    q, w = hctx.q, hctx.omega
    k = 1 / ((1 / q - 1) * r * s)
    one = hctx.ctx.one
    return Poly((one,)), Poly((-(r + s + w / (1 - q)) * k, k))


# -- relation (x - c) D P_n = a_n P_n + (b_n x + c_n) P_{n-1} ---------------------------------------

@dataclass
class HahnStructure22:
    c: object
    a: dict
    b: dict
    cc: dict


def prop66_structure(a, b, hctx: HahnContext, N: int) -> HahnStructure22:
    """c = w/(1-q), a_n = (1 + (-1)^(n+1)) b/((1-q)(a+b)), b_n = [n]_q - a_n, c_n = -c b_n."""
    q, w = hctx.q, hctx.omega
    c = w / (1 - q)
    A, Bd, Cd = {}, {}, {}
    for n in range(N + 1):
        an = (1 + (-1) ** (n + 1)) * b / ((1 - q) * (a + b))
        A[n] = an
        Bd[n] = hctx.qint(n) - an
        Cd[n] = -c * Bd[n]
    return HahnStructure22(c, A, Bd, Cd)


def verify_22(fam: OPSFamily, st: HahnStructure22, N: int, hctx: HahnContext, start: int = 1) -> Check:
    """(x - c) D_{q,w} P_n = a_n P_n + (b_n x + c_n) P_{n-1} for start <= n <= N."""
    fam.build(N)
    zero = hctx.ctx.zero
    xc = Poly((-st.c, hctx.ctx.one))
    for n in range(start, N + 1):
        if st.b[n] == 0:
            return Check("structure-22", False, (start, N), {"n": n, "reason": "b_n = 0"})
        lhs = xc * dqw(fam.P(n), hctx)
        rhs = fam.P(n) * st.a[n] + Poly((st.cc[n], st.b[n])) * fam.P(n - 1)
        if lhs != rhs:
            return Check("structure-22", False, (start, N), {"n": n})
    return Check("structure-22", True, (start, N))


def extract_22(fam: OPSFamily, c, N: int, hctx: HahnContext):
    """Read a_n, b_n, c_n off the P-expansion of (x - c) D P_n for 2 <= n <= N.

    Returns (HahnStructure22, Check); the check fails when an expansion reaches
    below P_{n-2} or some b_n vanishes.
    """
    fam.build(N)
    c = hctx.ctx.scalar(c)
    xc = Poly((-c, hctx.ctx.one))
    A, Bd, Cd = {}, {}, {}
    for n in range(2, N + 1):
        coords = expand_in_basis(xc * dqw(fam.P(n), hctx), fam)
        if any(v != 0 for v in coords[: n - 2]):
            return HahnStructure22(c, A, Bd, Cd), Check("structure-22-extract", False, (2, N),
                                                        {"n": n, "reason": "expansion reaches below P_{n-2}"})
        e = lambda k: coords[k] if k < len(coords) else 0  # noqa: E731
        bn = e(n - 2) / fam.C(n - 1)
        if bn == 0:
            return HahnStructure22(c, A, Bd, Cd), Check("structure-22-extract", False, (2, N), {"n": n, "reason": "b_n = 0"})
        Bd[n] = bn
        A[n] = e(n) - bn
        Cd[n] = e(n - 1) - bn * fam.B(n - 1)
    return HahnStructure22(c, A, Bd, Cd), Check("structure-22-extract", True, (2, N))


# -- classifier ------------------------------------------------------------------------------

@dataclass
class Thm65Result:
    verdict: str  # "Classical" or "Semiclassical"
    cls: int
    b2: object
    lam_sum: object
    lam_prod: object
    test_value: object  # q (w + qc - lambda+)(w + qc - lambda-)
    target: object  # -C_2/b_2
    checks: list
    r_plus_s: object = None
    r_times_s: object = None

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def summary(self) -> dict:
        return {
            "verdict": self.verdict,
            "class": self.cls,
            "b2": self.b2,
            "lambda_sum": self.lam_sum,
            "lambda_product": self.lam_prod,
            "test_value": self.test_value,
            "minus_C2_over_b2": self.target,
            "r_plus_s": self.r_plus_s,
            "r_times_s": self.r_times_s,
        }


def thm65_classify(fam: OPSFamily, c, N: int, hctx: HahnContext, u: lf.LinearForm | None = None) -> Thm65Result:
    """Classify a family satisfying (x - c) D_{q,w} P_n = a_n P_n + (b_n x + c_n) P_{n-1}.

    lambda+- enter only through lambda+ + lambda- and lambda+ lambda-, so the
    decision stays inside the coefficient field.
    """
    ctx = hctx.ctx
    q, w = hctx.q, hctx.omega
    c = ctx.scalar(c)
    B0, B1, C1, C2 = fam.B(0), fam.B(1), fam.C(1), fam.C(2)
    if C1 == 0:
        raise ValueError("C_1 = 0: degenerate input")
    st, ext = extract_22(fam, c, N, hctx)
    checks = [ext]
    if not ext.ok:
        raise ValueError(f"the family does not satisfy the structure relation with c = {c}: {ext.witness}")
    b2 = st.b[2]
    if b2 == 0:
        raise ValueError("b_2 = 0: degenerate input")
    b2_formula = q + 1 + (B0 - c) * (q * B0 - B1 + w) / C1
    checks.append(Check("b2-formula", b2 == b2_formula, None,
                        None if b2 == b2_formula else {"b2": b2, "formula": b2_formula}))
    shift = (c - B0) * C2 / (b2 * C1)
    S = B0 + B1 + shift
    Delta = (B0 - B1 - shift) ** 2 + 4 * C1
    P = (S * S - Delta) / 4
    wc = w + q * c
    test_value = q * (wc * wc - S * wc + P)
    target = -C2 / b2

    # D_{1/q,-w/q}((x - c) u) = -(q b_2/C_2)(x^2 - S x + P) u on moments
    depth = N + 3
    if u is None or u.valid_degree < depth:
        u = moments(fam, depth)
    xc = Poly((-c, ctx.one))
    lhs = dqw_star_dual(lf.mul_poly(xc, u), hctx)
    quad = Poly((P, -S, ctx.one)) * (-q * b2 / C2)
    rhs = lf.mul_poly(quad, u)
    checks.append(_moments_equal("D*((x-c)u) = varphi u", lhs, rhs, N))

    classical = test_value == target
    result = Thm65Result("Classical" if classical else "Semiclassical", 0 if classical else 1,
                         b2, S, P, test_value, target, checks)

    condt = b2 * C1 * C1 == (B0 - c) * (b2 * (B1 - c) * C1 - (B0 - c) * C2)
    if condt:
        # lambda+ = c, so Delta^(1/2) = c - lambda- = 2c - S lies in the field
        root = 2 * c - S
        checks.append(Check("condt: lambda+ = c", root * root == Delta, None))
        rps = S - c - w / (1 - q)
        rts = C2 / ((q - 1) * b2)
        result.r_plus_s, result.r_times_s = rps, rts
        v = lf.mul_poly(xc, u)
        k = 1 / ((1 / q - 1) * rts)
        lin = Poly((-(rps + w / (1 - q)) * k, k))
        checks.append(_moments_equal("D*(v) = psi v", dqw_star_dual(v, hctx), lf.mul_poly(lin, v), N))
        rebuilt = lf.div_linear(c, v) + lf.delta(c, v.valid_degree + 1).scale(u.moments[0])
        checks.append(_moments_equal("u = (x-c)^-1 v + delta_c", rebuilt, u, N))
    return result


def _moments_equal(name: str, lhs: lf.LinearForm, rhs: lf.LinearForm, N: int) -> Check:
    a, b = lf.common(lhs, rhs)
    top = min(N, a.valid_degree)
    for n in range(top + 1):
        if a.moments[n] != b.moments[n]:
            return Check(name, False, (0, top), {"n": n, "lhs": a.moments[n], "rhs": b.moments[n]})
    return Check(name, True, (0, top))


# -- the class-one example ---------------------------------------------------------------------

def prop66_conditions(a, b, N: int, hctx: HahnContext) -> Check:
    """a + b != 0, b != 0 and a + (-1)^n b - (a + b) q^n != 0 for 1 <= n <= N.

    In symbolic mode with rational a, b the last condition holds for every
    n >= 1 because (a + (-1)^n b)/(a + b) is a constant and q^n is not.
    """
    q = hctx.q
    if a + b == 0:
        return Check("prop66-parameters", False, None, {"reason": "a + b = 0"})
    if b == 0:
        return Check("prop66-parameters", False, None, {"reason": "b = 0"})
    for n in range(1, N + 1):
        if a + (-1) ** n * b - (a + b) * q ** n == 0:
            return Check("prop66-parameters", False, (1, N), {"n": n})
    return Check("prop66-parameters", True, (1, N))


def verify_prop66_pearson(fam: OPSFamily, a, b, N: int, hctx: HahnContext,
                          u: lf.LinearForm | None = None) -> Check:
    """D_{1/q,-w/q}((x - c) u) = ((x - c)^2/q + b - a + (a + b) q) u / ((a + b)(q - 1)), c = w/(1 - q)."""
    cond = prop66_conditions(a, b, N, hctx)
    if not cond.ok:
        raise ValueError(f"parameter condition violated: {cond.witness}")
    ctx = hctx.ctx
    q, w = hctx.q, hctx.omega
    c = w / (1 - q)
    depth = N + 3
    if u is None or u.valid_degree < depth:
        u = moments(fam, depth)
    xc = Poly((-c, ctx.one))
    lhs = dqw_star_dual(lf.mul_poly(xc, u), hctx)
    g = (xc * xc / q + (b - a + (a + b) * q)) / ((a + b) * (q - 1))
    rhs = lf.mul_poly(g, u)
    return _moments_equal("prop66-pearson", lhs, rhs, N)


def is_symbolic_scalar(x) -> bool:
    return isinstance(x, RatFunc)
