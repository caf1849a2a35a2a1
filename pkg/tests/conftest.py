from __future__ import annotations

from fractions import Fraction

import pytest

from semiclassical.hahn import HahnContext
from semiclassical.scalar import QContext


@pytest.fixture(scope="session")
def sym():
    return QContext.symbolic()


@pytest.fixture(scope="session")
def rat():
    return QContext.rational(Fraction(1, 2))


@pytest.fixture(scope="session", params=["symbolic", "rational"])
def ctx(request):
    if request.param == "symbolic":
        return QContext.symbolic()
    return QContext.rational(Fraction(1, 2))


@pytest.fixture(scope="session")
def hsym():
    return HahnContext.symbolic(Fraction(1, 3))


@pytest.fixture(scope="session")
def hrat():
    return HahnContext.rational(Fraction(1, 2), Fraction(1, 3))
