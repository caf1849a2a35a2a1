"""Dense polynomials in x over an exact field, and symmetric Laurent polynomials in z.

The Laurent picture is x = (z + 1/z)/2: a polynomial f(x) becomes a Laurent
polynomial invariant under z -> 1/z, stored by its coefficients on the basis
1, z + 1/z, z^2 + 1/z^2, ... .  Antisymmetric Laurent polynomials are stored on
the basis z - 1/z, z^2 - 1/z^2, ... .
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from semiclassical.scalar import RatFunc, format_scalar, specialize


class InexactDivisionError(ArithmeticError):
    """Polynomial division left a nonzero remainder (kept on ``.remainder``)."""

    def __init__(self, remainder: "Poly"):
        super().__init__(f"division is not exact; remainder {remainder}")
        self.remainder = remainder


def _trim(coeffs) -> tuple:
    coeffs = [Fraction(c) if type(c) is int else c for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """Immutable polynomial sum c_k x^k; ``coeffs[k]`` is c_k, zero polynomial is ()."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(coeffs)

    @classmethod
    def x(cls, one=1) -> "Poly":
        return cls((one * 0, one))

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, c, k: int) -> "Poly":
        return cls((c * 0,) * k + (c,))

    # -- structure ----------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly((other,))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if other == 0:
                return Poly()
            return Poly(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [None] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y == 0:
                    continue
                p = x * y
                k = i + j
                out[k] = p if out[k] is None else out[k] + p
        zero = a[0] * 0
        return Poly(zero if c is None else c for c in out)

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        if isinstance(other, Poly):
            return exact_div(self, other)
        return Poly(tuple(c / other for c in self.coeffs))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly((self.coeffs[0] * 0 + 1,)) if self.coeffs else Poly((1,))
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if other == 0:
            return not self.coeffs
        return self.coeffs == _trim((other,))

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift_degree(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        zero = self.coeffs[0] * 0
        return Poly((zero,) * k + self.coeffs)

    def map(self, fn) -> "Poly":
        return Poly(tuple(fn(c) for c in self.coeffs))

    def monic(self) -> "Poly":
        return self / self.lc if self.coeffs else self

    def specialize(self, t0) -> "Poly":
        """Evaluate every coefficient at t = t0."""
        return self.map(lambda c: specialize(c, t0))

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def poly_arith(f: Poly, g: Poly, op: str) -> Poly:
    if op == "+":
        return f + g
    if op in ("-", "−"):
        return f - g
    if op in ("*", "×"):
        return f * g
    raise ValueError(f"unknown polynomial operator {op!r}")


def compose_linear(f: Poly, a, b) -> Poly:
    """f(a*x + b), by Horner's rule."""
    lin = Poly((b, a))
    acc = Poly()
    for c in reversed(f.coeffs):
        acc = acc * lin + c
    return acc


def poly_divmod(f: Poly, g: Poly):
    """Quotient and remainder over the coefficient field."""
    if not g.coeffs:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f.coeffs)
    dg = g.degree
    if len(rem) - 1 < dg:
        return Poly(), f
    inv = 1 / g.lc
    quot = [g.lc * 0] * (len(rem) - dg)
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        k = c * inv
        quot[i - dg] = k
        for j, gj in enumerate(g.coeffs):
            if gj != 0:
                rem[i - dg + j] = rem[i - dg + j] - k * gj
    return Poly(quot), Poly(rem[:dg])


def exact_div(f: Poly, g: Poly) -> Poly:
    """h with f = g*h; raises InexactDivisionError carrying the remainder otherwise."""
    q, r = poly_divmod(f, g)
    if r.coeffs:
        raise InexactDivisionError(r)
    return q


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd over the coefficient field."""
    if not f.coeffs and not g.coeffs:
        raise ValueError("gcd of two zero polynomials")
    a, b = f, g
    while b.coeffs:
        a, b = b, poly_divmod(a, b)[1]
        if b.coeffs:
            b = b.monic()
    return a.monic()


# -- symmetric / antisymmetric Laurent polynomials ------------------------------

class SymLaurent:
    """c_0 + sum_{k>=1} c_k (z^k + z^-k)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(coeffs)

    def __eq__(self, other):
        return isinstance(other, SymLaurent) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("sym", self.coeffs))

    def __repr__(self):
        return "SymLaurent(" + ", ".join(f"c{k}={format_scalar(c)}" for k, c in enumerate(self.coeffs) if c != 0) + ")"


class AntiLaurent:
    """sum_{k>=1} d_k (z^k - z^-k); ``coeffs[0]`` is always 0."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = _trim(coeffs)
        if coeffs and coeffs[0] != 0:
            raise ValueError("antisymmetric Laurent polynomials have no constant term")
        self.coeffs = coeffs

    def __eq__(self, other):
        return isinstance(other, AntiLaurent) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("anti", self.coeffs))

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            a[i] = a[i] - c
        return AntiLaurent(a)

    def __repr__(self):
        return "AntiLaurent(" + ", ".join(f"d{k}={format_scalar(c)}" for k, c in enumerate(self.coeffs) if c != 0) + ")"


@lru_cache(maxsize=None)
def _power_to_sym(k: int) -> tuple:
    """Coefficients of x^k on the symmetric Laurent basis (exact rationals)."""
    out = [Fraction(0)] * (k + 1)
    scale = Fraction(1, 2 ** k)
    for m in range(k % 2, k + 1, 2):
        out[m] = comb(k, (k - m) // 2) * scale
    return tuple(out)


@lru_cache(maxsize=None)
def _chebyshev(k: int) -> tuple:
    """Integer coefficients of T_k(x)."""
    if k == 0:
        return (1,)
    if k == 1:
        return (0, 1)
    a, b = _chebyshev(k - 2), _chebyshev(k - 1)
    out = [0] * (k + 1)
    for i, c in enumerate(b):
        out[i + 1] += 2 * c
    for i, c in enumerate(a):
        out[i] -= c
    return tuple(out)


def _accumulate(out: list, k: int, c):
    out[k] = c if out[k] is None else out[k] + c


def _finalize(out: list, zero) -> tuple:
    return tuple(zero if c is None else c for c in out)


def to_symlaurent(f: Poly) -> SymLaurent:
    if not f.coeffs:
        return SymLaurent()
    zero = f.coeffs[0] * 0
    out = [None] * len(f.coeffs)
    for k, fk in enumerate(f.coeffs):
        if fk == 0:
            continue
        for m, w in enumerate(_power_to_sym(k)):
            if w:
                _accumulate(out, m, fk * w)
    return SymLaurent(_finalize(out, zero))


def from_symlaurent(g: SymLaurent) -> Poly:
    """Back to x using z^k + z^-k = 2 T_k(x)."""
    if not g.coeffs:
        return Poly()
    zero = g.coeffs[0] * 0
    out = [None] * len(g.coeffs)
    _accumulate(out, 0, g.coeffs[0])
    for k in range(1, len(g.coeffs)):
        ck = g.coeffs[k]
        if ck == 0:
            continue
        for i, w in enumerate(_chebyshev(k)):
            if w:
                _accumulate(out, i, ck * (2 * w))
    return Poly(_finalize(out, zero))


def shift_z(g: SymLaurent, a):
    """Split g(a*z) into its symmetric and antisymmetric parts under z -> 1/z."""
    if not g.coeffs:
        return SymLaurent(), AntiLaurent()
    if isinstance(a, int):
        a = Fraction(a)
    sym = [g.coeffs[0]]
    anti = [g.coeffs[0] * 0]
    ak = 1
    inv = 1 / a
    aik = 1
    for k in range(1, len(g.coeffs)):
        ak = ak * a
        aik = aik * inv
        ck = g.coeffs[k]
        sym.append(ck * ((ak + aik) / 2))
        anti.append(ck * ((ak - aik) / 2))
    return SymLaurent(sym), AntiLaurent(anti)


def divide_antisym(g: AntiLaurent) -> SymLaurent:
    """g / (z - 1/z), using (z^k - z^-k)/(z - 1/z) = z^(k-1) + z^(k-3) + ... + z^-(k-1)."""
    if not g.coeffs:
        return SymLaurent()
    n = len(g.coeffs)
    zero = g.coeffs[0] * 0
    out = [None] * max(n - 1, 1)
    for k in range(1, n):
        dk = g.coeffs[k]
        if dk == 0:
            continue
        for m in range(k - 1, -1, -2):
            _accumulate(out, m, dk)
    return SymLaurent(_finalize(out, zero))


def times_antifactor(g: SymLaurent) -> AntiLaurent:
    """g * (z - 1/z)."""
    if not g.coeffs:
        return AntiLaurent()
    zero = g.coeffs[0] * 0
    out = [None] * (len(g.coeffs) + 1)
    out[0] = zero
    _accumulate(out, 1, g.coeffs[0])
    for k in range(1, len(g.coeffs)):
        ck = g.coeffs[k]
        _accumulate(out, k + 1, ck)
        if k >= 2:
            _accumulate(out, k - 1, -ck)
    return AntiLaurent(_finalize(out, zero))


# -- text -----------------------------------------------------------------------

def _needs_parens(text: str) -> bool:
    return " " in text or "/" in text


def format_poly(f: Poly, var: str = "x") -> str:
    """Decreasing-degree text; compound coefficients are parenthesised."""
    if not f.coeffs:
        return "0"
    parts = []
    for k in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[k]
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        ctext = format_scalar(c)
        wrapped = f"({ctext})" if _needs_parens(ctext) else ctext
        if not mono:
            term = wrapped
        elif c == 1:
            term = mono
        elif c == -1:
            term = "-" + mono
        else:
            term = f"{wrapped}*{mono}"
        parts.append(term)
    out = parts[0]
    for p in parts[1:]:
        if p.startswith("-"):
            out += " - " + p[1:]
        else:
            out += " + " + p
    return out


def is_ratfunc_poly(f: Poly) -> bool:
    return any(isinstance(c, RatFunc) for c in f.coeffs)
