"""Dense univariate polynomials over Z, stored as tuples of ints (lowest degree first).

The zero polynomial is the empty tuple. These kernels back the rational
function field in :mod:`semiclassical.scalar`; nothing here knows about
fractions.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

ZPoly = tuple  # tuple[int, ...]

# Products whose schoolbook cost exceeds this go through Kronecker substitution.
_KRONECKER_CUTOFF = 600


def norm(a) -> ZPoly:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def degree(a: ZPoly) -> int:
    return len(a) - 1


def valuation(a: ZPoly) -> int:
    """Index of the lowest nonzero coefficient (0 for the zero polynomial)."""
    for i, c in enumerate(a):
        if c:
            return i
    return 0


def content(a: ZPoly) -> int:
    return gcd(*a) if a else 0


def is_monomial(a: ZPoly) -> bool:
    """True for c*t^k (c != 0)."""
    if not a:
        return False
    v = valuation(a)
    return v == len(a) - 1


def add(a: ZPoly, b: ZPoly) -> ZPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    if len(a) == len(b):
        return norm(out)
    return tuple(out)


def sub(a: ZPoly, b: ZPoly) -> ZPoly:
    n = max(len(a), len(b))
    out = list(a) + [0] * (n - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return norm(out)


def neg(a: ZPoly) -> ZPoly:
    return tuple(-c for c in a)


def scale(a: ZPoly, k: int) -> ZPoly:
    if k == 0:
        return ()
    if k == 1:
        return a
    return tuple(c * k for c in a)


def exact_scale_div(a: ZPoly, k: int) -> ZPoly:
    if k == 1:
        return a
    return tuple(c // k for c in a)


def shift(a: ZPoly, k: int) -> ZPoly:
    """Multiply by t^k (k >= 0) or divide by t^-k when that is exact."""
    if not a or k == 0:
        return a
    if k > 0:
        return (0,) * k + a
    return a[-k:]


def mul(a: ZPoly, b: ZPoly) -> ZPoly:
    if not a or not b:
        return ()
    la, lb = len(a), len(b)
    if la == 1:
        return scale(b, a[0])
    if lb == 1:
        return scale(a, b[0])
    if la * lb > _KRONECKER_CUTOFF:
        return _kronecker_mul(a, b)
    out = [0] * (la + lb - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return norm(out)


def _pack(a: ZPoly, width: int, offset: int) -> int:
    """Evaluate at 2^(8*width), with every coefficient biased by ``offset``."""
    blob = b"".join((c + offset).to_bytes(width, "little") for c in a)
    return int.from_bytes(blob, "little")


def _bias(n: int, width: int, offset: int) -> int:
    """The packed value of n copies of ``offset``."""
    return int.from_bytes(offset.to_bytes(width, "little") * n, "little")


def _pack_signed(a: ZPoly, width: int) -> int:
    """a evaluated at 2^(8*width); coefficients must fit in width-1 bytes (signed)."""
    offset = 1 << (8 * width - 1)
    return _pack(a, width, offset) - _bias(len(a), width, offset)


def _unpack_signed(value: int, width: int) -> ZPoly:
    """Inverse of _pack_signed for a value whose digits lie in [-2^(8w-1), 2^(8w-1))."""
    if value == 0:
        return ()
    offset = 1 << (8 * width - 1)
    n = (abs(value).bit_length() + 8 * width - 1) // (8 * width) + 1
    blob = (value + _bias(n, width, offset)).to_bytes(n * width, "little")
    return norm(
        int.from_bytes(blob[i * width:(i + 1) * width], "little") - offset
        for i in range(n)
    )


def _kronecker_mul(a: ZPoly, b: ZPoly) -> ZPoly:
    ba = max(abs(c) for c in a).bit_length()
    bb = max(abs(c) for c in b).bit_length()
    bits = ba + bb + min(len(a), len(b)).bit_length() + 2
    width = (bits + 7) // 8
    offset = 1 << (8 * width - 1)
    A = _pack(a, width, offset) - _bias(len(a), width, offset)
    B = _pack(b, width, offset) - _bias(len(b), width, offset)
    n = len(a) + len(b) - 1
    C = A * B + _bias(n, width, offset)
    blob = C.to_bytes(n * width, "little")
    out = [
        int.from_bytes(blob[i * width:(i + 1) * width], "little") - offset
        for i in range(n)
    ]
    return norm(out)


def divmod_exact(a: ZPoly, b: ZPoly):
    """Quotient of a by b in Z[t] when b divides a there, otherwise None."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    db = len(b) - 1
    if len(a) - 1 < db:
        return None
    if db == 0:
        k = b[0]
        if any(c % k for c in a):
            return None
        return tuple(c // k for c in a)
    lc = b[-1]
    rem = list(a)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        f, r = divmod(c, lc)
        if r:
            return None
        q[i - db] = f
        base = i - db
        for j in range(db + 1):
            rem[base + j] -= f * b[j]
    if any(rem[:db]):
        return None
    return tuple(q)


def pseudo_rem(a: ZPoly, b: ZPoly) -> ZPoly:
    """lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions."""
    db = len(b) - 1
    lc = b[-1]
    rem = list(a)
    steps = len(a) - 1 - db + 1
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        rem = [x * lc for x in rem]
        if c:
            base = i - db
            for j in range(db + 1):
                rem[base + j] -= c * b[j]
        rem.pop()
        steps -= 1
    if steps > 0:
        rem = [x * lc ** steps for x in rem]
    return norm(rem)


def primitive(a: ZPoly) -> ZPoly:
    """Primitive part with a positive leading coefficient."""
    if not a:
        return a
    c = content(a)
    if a[-1] < 0:
        c = -c
    return exact_scale_div(a, c)


def _gcd_prs(a: ZPoly, b: ZPoly) -> ZPoly:
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return (1,)
        q = divmod_exact(a, b)
        if q is not None:
            return b
        a, b = b, primitive(pseudo_rem(a, b))
    return a


def _heuristic_gcd(a: ZPoly, b: ZPoly):
    """Heuristic gcd by evaluation at a large power of two; None when it gives up.

    The candidate read back from gcd(a(X), b(X)) is the true gcd as soon as it
    divides both inputs, provided X exceeds twice the largest coefficient.
    """
    bound = max(max(abs(c) for c in a), max(abs(c) for c in b))
    bits = (2 * bound + 29).bit_length() + 1
    for _ in range(6):
        width = (bits + 7) // 8
        h = gcd(_pack_signed(a, width), _pack_signed(b, width))
        cand = primitive(_unpack_signed(h, width))
        if cand and divmod_exact(a, cand) is not None and divmod_exact(b, cand) is not None:
            return cand
        bits = bits * 3 // 2 + 8
    return None


def gcd_poly(a: ZPoly, b: ZPoly) -> ZPoly:
    """Primitive gcd of two integer polynomials (positive leading coefficient)."""
    if not a:
        return primitive(b)
    if not b:
        return primitive(a)
    va, vb = valuation(a), valuation(b)
    v = min(va, vb)
    a = primitive(a[va:])
    b = primitive(b[vb:])
    if len(a) == 1 or len(b) == 1:
        g = (1,)
    elif a == b:
        g = a
    else:
        g = None
        if len(a) + len(b) > 40:
            g = _heuristic_gcd(a, b)
        if g is None:
            g = primitive(_gcd_prs(a, b))
    return shift(g, v)


def evaluate(a: ZPoly, x):
    v = 0
    for c in reversed(a):
        v = v * x + c
    return v


def evaluate_fraction(a: ZPoly, x: Fraction) -> Fraction:
    """a(p/q) computed as an integer sum over q^deg to avoid Fraction overhead."""
    if not a:
        return Fraction(0)
    p, q = x.numerator, x.denominator
    d = len(a) - 1
    total = 0
    pp = 1
    qpows = [1] * (d + 1)
    for i in range(1, d + 1):
        qpows[i] = qpows[i - 1] * q
    for i, c in enumerate(a):
        if c:
            total += c * pp * qpows[d - i]
        pp *= p
    return Fraction(total, qpows[d])
