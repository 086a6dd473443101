import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dzv.numerics import PrecisionCtx


@pytest.fixture(scope="session")
def ctx128() -> PrecisionCtx:
    return PrecisionCtx(128, Fraction(1, 10**30))


@pytest.fixture(scope="session")
def ctx192() -> PrecisionCtx:
    return PrecisionCtx(192, Fraction(1, 10**40))


@pytest.fixture(scope="session")
def ctx64() -> PrecisionCtx:
    return PrecisionCtx(64, Fraction(1, 10**10))
