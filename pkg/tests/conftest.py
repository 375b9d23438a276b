import pytest

from nbtower.artin_schreier import build_tower
from nbtower.fields import FieldCtx, PrimeModulus


@pytest.fixture(scope="session")
def f2():
    return PrimeModulus(2)


@pytest.fixture(scope="session")
def f7():
    return PrimeModulus(7)


@pytest.fixture(scope="session")
def f4(f2):
    """GF(4) as an x^2 - x - 1 extension of GF(2)."""
    return FieldCtx.artin_schreier(f2, 1)


@pytest.fixture(scope="session")
def tower2():
    """GF(2) tower of degrees 2, 4, 8."""
    return build_tower(2, 3)


@pytest.fixture(scope="session")
def tower3():
    """GF(3) tower of degrees 3, 9."""
    return build_tower(3, 2)


@pytest.fixture(scope="session")
def tower5():
    """GF(5) tower of degrees 5, 25."""
    return build_tower(5, 2)
