"""Monic orthogonal polynomial sequences given by their recurrence coefficients.

    x P_n = P_{n+1} + B_n P_n + C_n P_{n-1},   P_{-1} = 0, P_0 = 1.

The associated form is normalised by u_0 = 1, so the norms are
h_n = <u, P_n^2> = C_1 ... C_n.
"""

from __future__ import annotations

from typing import Callable

from semiclassical.linform import LinearForm
from semiclassical.poly import Poly
from semiclassical.scalar import QContext


class NotRegularError(ArithmeticError):
    """A norm vanished: the recurrence or form is not regular at index ``n``."""

    def __init__(self, message: str, n: int):
        super().__init__(f"{message} (n = {n})")
        self.n = n


class OPSFamily:
    """Recurrence coefficients plus lazily extended caches of P_n and h_n."""

    def __init__(self, name: str, ctx: QContext, B: Callable[[int], object], C: Callable[[int], object],
                 limit: int | None = None):
        self.name = name
        self.ctx = ctx
        self._B_fn = B
        self._C_fn = C
        self.limit = limit  # largest index with known coefficients (tables), None = unbounded
        self._B: dict[int, object] = {}
        self._C: dict[int, object] = {0: ctx.zero}
        self._P: list[Poly] = [Poly((ctx.one,))]
        self._h: list = [ctx.one]

    def _check_index(self, n: int):
        if self.limit is not None and n > self.limit:
            raise IndexError(f"family {self.name!r} has coefficients only up to index {self.limit}")

    def B(self, n: int):
        if n not in self._B:
            self._check_index(n)
            self._B[n] = self.ctx.scalar(self._B_fn(n))
        return self._B[n]

    def C(self, n: int):
        if n not in self._C:
            self._check_index(n)
            self._C[n] = self.ctx.scalar(self._C_fn(n))
        return self._C[n]

    def build(self, N: int) -> "OPSFamily":
        """Make P_0..P_N available; fails on the first vanishing C_n."""
        x = Poly((self.ctx.zero, self.ctx.one))
        while len(self._P) <= N:
            n = len(self._P) - 1
            Cn = self.C(n)
            if n >= 1 and Cn == 0:
                raise NotRegularError(f"C_{n} vanishes in family {self.name!r}", n)
            Pn = self._P[n]
            nxt = x * Pn - Pn * self.B(n)
            if n >= 1:
                nxt = nxt - self._P[n - 1] * Cn
            self._P.append(nxt)
            nn = n + 1
            Cnn = self.C(nn)
            if Cnn == 0:
                raise NotRegularError(f"C_{nn} vanishes in family {self.name!r}", nn)
            self._h.append(self._h[-1] * Cnn)
        return self

    def P(self, n: int) -> Poly:
        if n < 0:
            return Poly()
        self.build(n)
        return self._P[n]

    def h(self, n: int):
        self.build(n)
        return self._h[n]

    @property
    def size(self) -> int:
        return len(self._P) - 1

    def specialize(self, t0) -> "OPSFamily":
        """The same family with t fixed to t0 (coefficients evaluated one by one)."""
        from semiclassical.scalar import specialize

        return OPSFamily(self.name, self.ctx.specialize(t0),
                         lambda n: specialize(self.B(n), t0),
                         lambda n: specialize(self.C(n), t0), self.limit)

    def __repr__(self):
        return f"OPSFamily({self.name!r}, mode={self.ctx.mode}, built_to={self.size})"


# -- built-in families ---------------------------------------------------------------

def _prop41(ctx: QContext, params: dict):
    t = ctx.t

    def C(n):
        if n == 0:
            return ctx.zero
        s = -1 if n % 2 else 1
        return (1 - s * ctx.tpow(n)) * (1 - s * ctx.tpow(n - 1)) / 4

    return (lambda n: ctx.zero), C


def _q_hermite(ctx: QContext, params: dict):
    q = ctx.q

    def C(n):
        return ctx.zero if n == 0 else (1 - q ** n) / 4

    return (lambda n: ctx.zero), C


def _al_salam_carlitz(ctx: QContext, params: dict):
    q = ctx.q
    r, s, w = (ctx.scalar(params[k]) for k in ("r", "s", "omega"))

    def B(n):
        return w / (1 - q) + (r + s) * q ** n

    def C(n):
        return ctx.zero if n == 0 else -r * s * (1 - q ** n) * q ** (n - 1)

    return B, C


def _hahn_class_one(ctx: QContext, params: dict):
    q = ctx.q
    a, b, w = (ctx.scalar(params[k]) for k in ("a", "b", "omega"))

    def B(n):
        return w / (1 - q)

    def C(n):
        if n == 0:
            return ctx.zero
        sign = -1 if n % 2 else 1
        return (a + sign * b - (a + b) * q ** n) * q ** n

    return B, C


REGISTRY = {
    "prop41": (_prop41, "askey-wilson"),
    "q-hermite": (_q_hermite, "askey-wilson"),
    "al-salam-carlitz": (_al_salam_carlitz, "hahn"),
    "hahn-class1": (_hahn_class_one, "hahn"),
}


def from_registry(name: str, ctx: QContext, **params) -> OPSFamily:
    try:
        maker, operator = REGISTRY[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; known: {', '.join(sorted(REGISTRY))}") from None
    if ctx.operator != operator:
        raise ValueError(f"family {name!r} lives in {operator} mode")
    B, C = maker(ctx, params)
    return OPSFamily(name, ctx, B, C)


def from_tables(B: list, C: list, ctx: QContext, name: str = "table") -> OPSFamily:
    """Explicit coefficient lists; ``C[0]`` is ignored (C_0 = 0)."""
    Bs = [ctx.scalar(b) for b in B]
    Cs = [ctx.scalar(c) for c in C]
    limit = min(len(Bs) - 1, len(Cs) - 1)
    return OPSFamily(name, ctx, lambda n: Bs[n], lambda n: ctx.zero if n == 0 else Cs[n], limit)


def build(spec, N: int, ctx: QContext) -> OPSFamily:
    """Build a family from a registry name, ``{"name": ..., "params": {...}}``, or ``{"B": [...], "C": [...]}``."""
    if isinstance(spec, str):
        fam = from_registry(spec, ctx)
    elif "B" in spec or "C" in spec:
        fam = from_tables(spec["B"], spec["C"], ctx, spec.get("name", "table"))
    else:
        fam = from_registry(spec["name"], ctx, **spec.get("params", {}))
    return fam.build(N)


def family_from_json(data: dict):
    """Parse a family file; returns (ctx, family, N)."""
    from semiclassical.scalar import QContext as Q

    mode = data.get("mode", "symbolic")
    operator = data.get("operator", "askey-wilson")
    if mode == "symbolic":
        ctx = Q.symbolic(operator)
    elif mode == "rational":
        key = "t" if operator == "askey-wilson" else "q"
        if key not in data:
            raise ValueError(f"rational {operator} family files need a {key!r} entry")
        probe = Q(None, "rational", operator)
        from semiclassical.parsing import parse_scalar

        ctx = Q.rational(parse_scalar(str(data[key]), probe), operator)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    N = int(data.get("N", 40))
    spec = data.get("family")
    if spec is None:
        spec = {k: data[k] for k in ("B", "C") if k in data}
    elif isinstance(spec, dict) and "params" in spec:
        spec = dict(spec)
        params = dict(spec["params"])
        if operator == "hahn" and "omega" not in params and "omega" in data:
            params["omega"] = data["omega"]
        spec["params"] = params
    elif isinstance(spec, str) and operator == "hahn":
        spec = {"name": spec, "params": {k: data[k] for k in ("a", "b", "r", "s", "omega") if k in data}}
    fam = build(spec, 0, ctx)
    return ctx, fam, N


# -- moments, expansions, recovery ----------------------------------------------------

def moments(fam: OPSFamily, N: int) -> LinearForm:
    """u_0..u_N with u_0 = 1 and <u, P_k> = 0 for k >= 1.

    u_n is the P_0-coordinate of x^n, obtained by applying x to the P-basis
    coordinate vector n times: (x v)_j = v_{j-1} + B_j v_j + C_{j+1} v_{j+1}.
    """
    zero = fam.ctx.zero
    out = [fam.ctx.one]
    v = [fam.ctx.one]
    for n in range(1, N + 1):
        # only coordinates j <= N - n can still reach P_0
        top = min(n, N - n)
        new = []
        for j in range(top + 1):
            acc = zero
            if j >= 1 and j - 1 < len(v):
                acc = acc + v[j - 1]
            if j < len(v) and v[j] != 0:
                acc = acc + fam.B(j) * v[j]
            if j + 1 < len(v) and v[j + 1] != 0:
                acc = acc + fam.C(j + 1) * v[j + 1]
            new.append(acc)
        v = new
        out.append(v[0])
    return LinearForm(out)


def expand_in_basis(f: Poly, fam: OPSFamily) -> list:
    """Coordinates v with f = sum v_k P_k, by peeling off leading terms."""
    d = f.degree
    zero = fam.ctx.zero
    if d < 0:
        return []
    fam.build(d)
    rem = list(f.coeffs)
    out = [zero] * (d + 1)
    for k in range(d, -1, -1):
        c = rem[k]
        if c == 0:
            continue
        out[k] = c
        for i, p in enumerate(fam.P(k).coeffs[:k]):
            if p != 0:
                rem[i] = rem[i] - c * p
    return out


def recurrence_from_moments(u: LinearForm, N: int):
    """Recover B_0..B_N and C_1..C_N from moments (Chebyshev's algorithm).

    Works with sigma_n(k) = <u, P_n x^k>; needs u valid to degree 2N + 1.
    Returns (B, C) with C[0] = 0.
    """
    if u.valid_degree < 2 * N + 1:
        from semiclassical.linform import DegreeOverflowError

        raise DegreeOverflowError(2 * N + 1, u.valid_degree)
    M = 2 * N + 1
    zero = u.moments[0] * 0
    prev = [zero] * (M + 1)
    cur = list(u.moments[: M + 1])
    B, C = [], [zero]
    if cur[0] == 0:
        raise NotRegularError("form not regular to requested depth", 0)
    for n in range(N + 1):
        hn = cur[n]
        if hn == 0:
            raise NotRegularError("form not regular to requested depth", n)
        Bn = cur[n + 1] / hn
        if n >= 1:
            Bn = Bn - prev[n] / prev[n - 1]
            C.append(hn / prev[n - 1])
        B.append(Bn)
        if n == N:
            break
        Cn = C[n]
        nxt = [zero] * (M + 1)
        for k in range(n + 1, M - n):
            val = cur[k + 1] - Bn * cur[k]
            if n >= 1:
                val = val - Cn * prev[k]
            nxt[k] = val
        prev, cur = cur, nxt
    return B, C
