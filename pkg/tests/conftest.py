import pytest

from gentle_ext.formats import fixture_algebra
from gentle_ext.modules import module_from_text


@pytest.fixture(scope="session")
def c4():
    return fixture_algebra("C4")


@pytest.fixture(scope="session")
def lin():
    return fixture_algebra("LIN")


@pytest.fixture(scope="session")
def tri3():
    return fixture_algebra("TRI3")


@pytest.fixture(scope="session")
def a3():
    return fixture_algebra("A3")


@pytest.fixture(scope="session")
def band_alg():
    return fixture_algebra("BAND")


@pytest.fixture
def mod():
    return module_from_text
