"""Exact coefficient fields.

Two modes share one duck-typed interface:

* rational mode: values are :class:`fractions.Fraction`;
* symbolic mode: values are :class:`RatFunc`, reduced rational functions in a
  transcendental ``t`` with integer-coefficient numerator and denominator.

In Askey-Wilson work ``t`` stands for q^(1/2); in Hahn work it stands for q.
Rational constants embed into Q(t), so ``RatFunc`` accepts ints and
Fractions as operands. Anything inexact (floats, complex) is rejected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Union

from semiclassical import _zpoly as zp


class ModeMismatchError(TypeError):
    """Operands from different coefficient fields were combined."""


class PoleError(ZeroDivisionError):
    """A rational function was specialized at one of its poles."""


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


class RatFunc:
    """Element of Q(t) in canonical form.

    ``num`` and ``den`` are integer polynomials (tuples, lowest degree first)
    with gcd 1 over Z[t] and a positive leading coefficient on ``den``.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=(), den=(1,), *, _canonical=False):
        if _canonical:
            self.num = num
            self.den = den
            self._hash = None
            return
        num = zp.norm(num)
        den = zp.norm(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        n, d = _reduce(num, den)
        self.num = n
        self.den = d
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def gen(cls) -> "RatFunc":
        """The transcendental t."""
        return cls((0, 1), (1,), _canonical=True)

    @classmethod
    def const(cls, value) -> "RatFunc":
        value = Fraction(value)
        if value == 0:
            return _ZERO
        return cls((value.numerator,), (value.denominator,), _canonical=True)

    @classmethod
    def monomial(cls, coeff, k: int) -> "RatFunc":
        """coeff * t^k for any integer k."""
        coeff = Fraction(coeff)
        if coeff == 0:
            return _ZERO
        p, q = coeff.numerator, coeff.denominator
        if k >= 0:
            return cls((0,) * k + (p,), (q,), _canonical=True)
        return cls((p,), (0,) * (-k) + (q,), _canonical=True)

    # -- structure ----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        if not self.num:
            return Fraction(0)
        return Fraction(self.num[0], self.den[0])

    def as_monomial(self):
        """Return (c, k) when self == c*t^k, else None."""
        if not self.num or not zp.is_monomial(self.num) or not zp.is_monomial(self.den):
            return None
        kn, kd = len(self.num) - 1, len(self.den) - 1
        return Fraction(self.num[-1], self.den[-1]), kn - kd

    def evaluate(self, x):
        """Specialize t -> x (an exact rational)."""
        x = Fraction(x)
        d = zp.evaluate_fraction(self.den, x)
        if d == 0:
            raise PoleError(f"{self} has a pole at t = {x}")
        return zp.evaluate_fraction(self.num, x) / d

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return _add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return _add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return _add(other, -self)

    def __neg__(self):
        return RatFunc(zp.neg(self.num), self.den, _canonical=True)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return _scale(self, Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return _mul(self, other)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("division by zero in Q(t)")
        num, den = self.den, self.num
        if den[-1] < 0:
            num, den = zp.neg(num), zp.neg(den)
        return RatFunc(num, den, _canonical=True)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(t)")
            return _scale(self, 1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return _mul(self, other.inverse())

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return _mul(other, self.inverse())

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        base = self
        out = _ONE
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    # -- comparison ---------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            if not self.is_constant():
                return False
            return self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        return f"RatFunc({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def _is_simple(p) -> bool:
    """A constant or a single term c*t^k."""
    return len(p) == 1 or zp.is_monomial(p)


def _finish(num, den):
    """Normalize content, t-powers and sign; num and den must already be coprime
    apart from constants and powers of t."""
    if not num:
        return _ZERO
    v = min(zp.valuation(num), zp.valuation(den))
    if v:
        num, den = num[v:], den[v:]
    g = gcd(zp.content(num), zp.content(den))
    if den[-1] < 0:
        g = -g
    if g != 1:
        num = zp.exact_scale_div(num, g)
        den = zp.exact_scale_div(den, g)
    return RatFunc(num, den, _canonical=True)


def _reduce(num, den):
    if not num:
        return (), (1,)
    if not _is_simple(den):
        g = zp.gcd_poly(num, den)
        if len(g) > 1:
            num = zp.divmod_exact(num, g)
            den = zp.divmod_exact(den, g)
    r = _finish(num, den)
    return r.num, r.den


def _simple_parts(p):
    """Split c*t^k into (c, k)."""
    k = len(p) - 1
    return p[-1], k


def _add(x: RatFunc, y: RatFunc) -> RatFunc:
    if not x.num:
        return y
    if not y.num:
        return x
    a, b, c, d = x.num, x.den, y.num, y.den
    if b == d:
        num = zp.add(a, c)
        if not num:
            return _ZERO
        if _is_simple(b):
            return _finish(num, b)
        g = zp.gcd_poly(num, b)
        if len(g) > 1:
            num = zp.divmod_exact(num, g)
            b = zp.divmod_exact(b, g)
        return _finish(num, b)
    if _is_simple(b) and _is_simple(d):
        cb, kb = _simple_parts(b)
        cd, kd = _simple_parts(d)
        L = _lcm(cb, cd)
        K = max(kb, kd)
        num = zp.add(zp.shift(zp.scale(a, L // cb), K - kb), zp.shift(zp.scale(c, L // cd), K - kd))
        if not num:
            return _ZERO
        return _finish(num, (0,) * K + (L,))
    g = zp.gcd_poly(b, d)
    if len(g) > 1:
        b1 = zp.divmod_exact(b, g)
        d1 = zp.divmod_exact(d, g)
    else:
        b1, d1 = b, d
    num = zp.add(zp.mul(a, d1), zp.mul(c, b1))
    if not num:
        return _ZERO
    den = zp.mul(b1, d)
    if len(g) > 1:
        h = zp.gcd_poly(num, g)
        if len(h) > 1:
            num = zp.divmod_exact(num, h)
            den = zp.divmod_exact(den, h)
    return _finish(num, den)


def _mul(x: RatFunc, y: RatFunc) -> RatFunc:
    if not x.num or not y.num:
        return _ZERO
    a, b, c, d = x.num, x.den, y.num, y.den
    if not _is_simple(d):
        g = zp.gcd_poly(a, d)
        if len(g) > 1:
            a = zp.divmod_exact(a, g)
            d = zp.divmod_exact(d, g)
    if not _is_simple(b):
        g = zp.gcd_poly(c, b)
        if len(g) > 1:
            c = zp.divmod_exact(c, g)
            b = zp.divmod_exact(b, g)
    return _finish(zp.mul(a, c), zp.mul(b, d))


def _scale(x: RatFunc, k: Fraction) -> RatFunc:
    if k == 0 or not x.num:
        return _ZERO
    if k == 1:
        return x
    p, q = k.numerator, k.denominator
    cn = zp.content(x.num)
    cd = zp.content(x.den)
    g1 = gcd(p, cd)
    g2 = gcd(q, cn)
    p //= g1
    q //= g2
    num = zp.scale(x.num if g2 == 1 else zp.exact_scale_div(x.num, g2), p)
    den = zp.scale(x.den if g1 == 1 else zp.exact_scale_div(x.den, g1), q)
    if den[-1] < 0:
        num, den = zp.neg(num), zp.neg(den)
    return RatFunc(num, den, _canonical=True)


_ZERO = RatFunc((), (1,), _canonical=True)
_ONE = RatFunc((1,), (1,), _canonical=True)

Scalar = Union[Fraction, RatFunc]


def scalar_mode(x) -> str:
    if isinstance(x, RatFunc):
        return "symbolic"
    if isinstance(x, (int, Fraction)):
        return "rational"
    raise ModeMismatchError(f"not an exact scalar: {x!r}")


def arith(a, b, op: str):
    """Strict binary operation: both operands must come from the same mode."""
    ma, mb = scalar_mode(a), scalar_mode(b)
    if ma != mb:
        raise ModeMismatchError(f"cannot combine {ma} and {mb} scalars")
    if ma == "rational":
        a, b = Fraction(a), Fraction(b)
    if op == "+":
        return a + b
    if op in ("-", "−"):
        return a - b
    if op in ("*", "×"):
        return a * b
    if op in ("/", "÷"):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b
    raise ValueError(f"unknown operator {op!r}")


def specialize(x, t):
    """Image of x under t -> t0. Rationals are left alone."""
    if isinstance(x, RatFunc):
        return x.evaluate(t)
    return Fraction(x)


def is_zero(x) -> bool:
    return x == 0


# -- formatting ---------------------------------------------------------

def _format_zpoly(p, var: str = "t") -> str:
    terms = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not terms:
            terms.append(("-" if c < 0 else "") + body)
        else:
            terms.append((" - " if c < 0 else " + ") + body)
    return "".join(terms) if terms else "0"


def format_scalar(x) -> str:
    """Canonical text: expanded numerator and denominator, decreasing degree."""
    if isinstance(x, (int, Fraction)):
        return str(Fraction(x))
    if not x.num:
        return "0"
    num = _format_zpoly(x.num)
    if x.den == (1,):
        return num
    if not zp.is_monomial(x.num):
        num = f"({num})"
    den = _format_zpoly(x.den)
    if not (den.isdigit() or den == "t" or (den.startswith("t^") and den[2:].isdigit())):
        den = f"({den})"
    return f"{num}/{den}"


# -- q-context ------------------------------------------------------------

@dataclass(eq=False)
class QContext:
    """Field plus the q-constants derived from t.

    ``operator`` is ``"askey-wilson"`` (q = t^2) or ``"hahn"`` (q = t).
    """

    t: Scalar
    mode: str
    operator: str = "askey-wilson"
    _alpha: dict = field(default_factory=dict, repr=False)
    _gamma: dict = field(default_factory=dict, repr=False)
    _qint: dict = field(default_factory=dict, repr=False)
    cache: dict = field(default_factory=dict, repr=False)

    @classmethod
    def symbolic(cls, operator: str = "askey-wilson") -> "QContext":
        return cls(RatFunc.gen(), "symbolic", operator)

    @classmethod
    def rational(cls, t, operator: str = "askey-wilson") -> "QContext":
        t = Fraction(t)
        if operator == "askey-wilson" and t in (0, 1, -1):
            raise ValueError("t must avoid 0 and ±1 so that q = t^2 is not 0 or 1")
        if operator == "hahn" and t in (0, -1):
            raise ValueError("q must avoid 0 and -1")
        return cls(t, "rational", operator)

    @property
    def q(self):
        return self.t * self.t if self.operator == "askey-wilson" else self.t

    @property
    def one(self):
        return RatFunc.const(1) if self.mode == "symbolic" else Fraction(1)

    @property
    def zero(self):
        return RatFunc.const(0) if self.mode == "symbolic" else Fraction(0)

    def scalar(self, value):
        """Coerce an int, Fraction, RatFunc or literal string into this field."""
        if isinstance(value, str):
            from semiclassical.parsing import parse_scalar

            return parse_scalar(value, self)
        if isinstance(value, RatFunc):
            if self.mode != "symbolic":
                raise ModeMismatchError("symbolic scalar passed to a rational context")
            return value
        if isinstance(value, (int, Fraction)):
            return RatFunc.const(value) if self.mode == "symbolic" else Fraction(value)
        raise ModeMismatchError(f"not an exact scalar: {value!r}")

    def tpow(self, k: int):
        """t^k for any integer k."""
        if self.mode == "symbolic":
            return RatFunc.monomial(1, k)
        return self.t ** k

    @property
    def alpha(self):
        return self.alpha_n(1)

    def alpha_n(self, n: int):
        """(t^n + t^-n)/2."""
        if n not in self._alpha:
            self._alpha[n] = (self.tpow(n) + self.tpow(-n)) / 2
        return self._alpha[n]

    def gamma_n(self, n: int):
        """(t^n - t^-n)/(t - t^-1), kept as the Laurent sum t^(n-1) + t^(n-3) + ... ."""
        if n not in self._gamma:
            if n < 0:
                self._gamma[n] = -self.gamma_n(-n)
            else:
                acc = self.zero
                for k in range(n):
                    acc = acc + self.tpow(n - 1 - 2 * k)
                self._gamma[n] = acc
        return self._gamma[n]

    def qint(self, n: int):
        """[n]_q = (q^n - 1)/(q - 1)."""
        if n not in self._qint:
            q = self.q
            if q == 1:
                self._qint[n] = self.scalar(n)
            else:
                self._qint[n] = (q ** n - 1) / (q - 1)
        return self._qint[n]

    def specialize(self, t0) -> "QContext":
        """The rational context obtained by t -> t0."""
        return QContext.rational(t0, self.operator)


def coeff_symbols(ctx: QContext, n: int):
    """(alpha_n, gamma_n, [n]_q); alpha_{-1} = alpha and gamma_{-1} = -1 fall out of the formulas."""
    if n < -1:
        raise ValueError("n must be >= -1")
    qn = ctx.qint(n) if n >= 0 else None
    return ctx.alpha_n(n), ctx.gamma_n(n), qn
