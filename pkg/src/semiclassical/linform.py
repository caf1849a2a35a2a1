"""Linear forms on polynomials, kept as truncated moment vectors.

A form u is known through u_n = <u, x^n> for 0 <= n <= valid_degree.  Every
operation reports how far its output is trustworthy: multiplying by a
polynomial of degree d loses d moments, the transposed divided difference and
division by (x - c) gain one.
"""

from __future__ import annotations

from semiclassical.poly import Poly
from semiclassical.scalar import QContext, format_scalar


class DegreeOverflowError(ValueError):
    """A form was evaluated beyond the degree its moments determine."""

    def __init__(self, needed: int, valid: int):
        super().__init__(f"needs moments up to degree {needed}, form is valid to {valid} (short by {needed - valid})")
        self.needed = needed
        self.valid = valid


class LinearForm:
    """Moments u_0..u_N; ``valid_degree`` is N."""

    __slots__ = ("moments",)

    def __init__(self, moments):
        moments = tuple(moments)
        if not moments:
            raise ValueError("a linear form needs at least u_0")
        self.moments = moments

    @property
    def valid_degree(self) -> int:
        return len(self.moments) - 1

    def __getitem__(self, n: int):
        if n > self.valid_degree:
            raise DegreeOverflowError(n, self.valid_degree)
        return self.moments[n]

    def truncate(self, n: int) -> "LinearForm":
        if n > self.valid_degree:
            raise DegreeOverflowError(n, self.valid_degree)
        return LinearForm(self.moments[: n + 1])

    def scale(self, c) -> "LinearForm":
        return LinearForm(m * c for m in self.moments)

    def __add__(self, other: "LinearForm") -> "LinearForm":
        n = min(self.valid_degree, other.valid_degree)
        return LinearForm(a + b for a, b in zip(self.moments[: n + 1], other.moments[: n + 1]))

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        n = min(self.valid_degree, other.valid_degree)
        return LinearForm(a - b for a, b in zip(self.moments[: n + 1], other.moments[: n + 1]))

    def __neg__(self):
        return LinearForm(-m for m in self.moments)

    def __eq__(self, other):
        return isinstance(other, LinearForm) and self.moments == other.moments

    def __hash__(self):
        return hash(self.moments)

    def specialize(self, t0) -> "LinearForm":
        from semiclassical.scalar import specialize

        return LinearForm(specialize(m, t0) for m in self.moments)

    def to_json(self) -> dict:
        return {"valid_degree": self.valid_degree, "moments": [format_scalar(m) for m in self.moments]}

    def __repr__(self):
        shown = ", ".join(format_scalar(m) for m in self.moments[:6])
        more = ", ..." if len(self.moments) > 6 else ""
        return f"LinearForm([{shown}{more}], valid_degree={self.valid_degree})"


def common(u: LinearForm, v: LinearForm):
    """Both forms cut to their common valid degree (for equality checks)."""
    n = min(u.valid_degree, v.valid_degree)
    return u.truncate(n), v.truncate(n)


def apply(u: LinearForm, f: Poly):
    """<u, f>."""
    if f.degree > u.valid_degree:
        raise DegreeOverflowError(f.degree, u.valid_degree)
    acc = None
    for fk, uk in zip(f.coeffs, u.moments):
        if fk == 0 or uk == 0:
            continue
        term = fk * uk
        acc = term if acc is None else acc + term
    if acc is None:
        return u.moments[0] * 0
    return acc


def mul_poly(f: Poly, u: LinearForm) -> LinearForm:
    """(f u)_n = <u, f x^n>; valid to N - deg f."""
    if f.is_zero():
        return LinearForm([u.moments[0] * 0] * (u.valid_degree + 1))
    d = f.degree
    if d > u.valid_degree:
        raise DegreeOverflowError(d, u.valid_degree)
    out = []
    for n in range(u.valid_degree - d + 1):
        acc = None
        for k, fk in enumerate(f.coeffs):
            if fk == 0:
                continue
            m = u.moments[n + k]
            if m == 0:
                continue
            term = fk * m
            acc = term if acc is None else acc + term
        out.append(u.moments[0] * 0 if acc is None else acc)
    return LinearForm(out)


def div_linear(c, u: LinearForm) -> LinearForm:
    """(x - c)^{-1} u: <., f> = <u, (f(x) - f(c))/(x - c)>; valid to N + 1."""
    zero = u.moments[0] * 0
    out = [zero]
    # ((x-c)^{-1}u)_{n+1} = c * ((x-c)^{-1}u)_n + u_n
    acc = zero
    for m in u.moments:
        acc = acc * c + m
        out.append(acc)
    return LinearForm(out)


def delta(c, N: int) -> LinearForm:
    """Point evaluation at c: moments c^n, n <= N."""
    out = []
    p = c * 0 + 1
    for _ in range(N + 1):
        out.append(p)
        p = p * c
    return LinearForm(out)


def dq_form(u: LinearForm, ctx: QContext) -> LinearForm:
    """<D_q u, f> = -<u, D_q f>; valid to N + 1."""
    from semiclassical.awops import dq_monomial

    out = [u.moments[0] * 0]
    for n in range(1, u.valid_degree + 2):
        out.append(-apply(u, dq_monomial(n, ctx)))
    return LinearForm(out)


def sq_form(u: LinearForm, ctx: QContext) -> LinearForm:
    """<S_q u, f> = <u, S_q f>; valid to N."""
    from semiclassical.awops import sq_monomial

    return LinearForm(apply(u, sq_monomial(n, ctx)) for n in range(u.valid_degree + 1))


def dq_power(u: LinearForm, n: int, ctx: QContext) -> LinearForm:
    for _ in range(n):
        u = dq_form(u, ctx)
    return u


def form_from_json(data: dict, ctx: QContext) -> LinearForm:
    return LinearForm(ctx.scalar(m) for m in data["moments"])
