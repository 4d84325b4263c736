import os

import pytest

from qwitt.src.kernel.laurent import LaurentPoly
from qwitt.src.kernel.twist import TwistContext

S_GRID = (-3, -2, -1, 0, 2, 3, 4)


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Runs must not pick up QWITT_* settings from the developer's shell"""
    for key in list(os.environ):
        if key.startswith("QWITT_"):
            monkeypatch.delenv(key)


@pytest.fixture
def t():
    return LaurentPoly.monomial(1)


@pytest.fixture
def ctx2():
    return TwistContext.create(2)


def poly(terms):
    return LaurentPoly(terms)
