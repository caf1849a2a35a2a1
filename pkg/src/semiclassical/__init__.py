"""Exact verification of semiclassical orthogonal polynomial sequences for the
Askey-Wilson and Hahn operators."""

from semiclassical.scalar import QContext, RatFunc
from semiclassical.poly import Poly
from semiclassical.linform import LinearForm
from semiclassical.opseq import OPSFamily, from_registry, moments

__all__ = ["QContext", "RatFunc", "Poly", "LinearForm", "OPSFamily", "from_registry", "moments"]
