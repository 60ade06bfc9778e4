import pytest

from ajsdual.fracring import get_ring
from ajsdual.rootsys import build_root_datum


@pytest.fixture(scope="session")
def a1():
    return get_ring(build_root_datum("A1"))


@pytest.fixture(scope="session")
def a2():
    return get_ring(build_root_datum("A2"))


@pytest.fixture(scope="session")
def b2():
    return get_ring(build_root_datum("B2"))
