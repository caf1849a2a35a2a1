"""Plain result records shared by the verification layers and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field

from semiclassical.scalar import format_scalar


def show(value):
    """JSON-friendly rendering of scalars, polynomials, forms and containers."""
    from semiclassical.linform import LinearForm
    from semiclassical.poly import Poly

    if isinstance(value, (Poly, LinearForm)):
        return str(value) if isinstance(value, Poly) else value.to_json()
    if isinstance(value, dict):
        return {str(k): show(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [show(v) for v in value]
    if isinstance(value, (bool, str)) or value is None:
        return value
    if isinstance(value, int):
        return value
    return format_scalar(value)


@dataclass
class Check:
    """One named verification with the index range it covered."""

    name: str
    ok: bool
    n_range: tuple | None = None
    witness: dict | None = None
    detail: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"

    def to_dict(self) -> dict:
        out = {"name": self.name, "status": self.status}
        out["n_range"] = list(self.n_range) if self.n_range is not None else None
        if self.witness is not None:
            out["witness"] = show(self.witness)
        if self.detail:
            out["detail"] = self.detail
        return out

    def __bool__(self):
        return self.ok


@dataclass
class SuiteResult:
    suite: str
    checks: list = field(default_factory=list)
    artifacts: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return bool(self.checks) and all(c.ok for c in self.checks)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checks": [c.to_dict() for c in self.checks],
            "artifacts": show(self.artifacts),
            "pass": self.ok,
        }


def first_mismatch(lhs, rhs, start: int = 0):
    """Index of the first differing entry of two equal-length sequences, or None."""
    for i, (a, b) in enumerate(zip(lhs, rhs)):
        if a != b:
            return start + i
    return None
