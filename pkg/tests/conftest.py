import pytest

from rmspectrum.enumeration import enumerate_construction2


@pytest.fixture(scope="session")
def hist_m4():
    """Full single-threaded enumeration at m = 4, shared across modules (about 10 s)."""
    return enumerate_construction2(4, mode="full", threads=1)


@pytest.fixture(scope="session")
def hist_m3():
    return enumerate_construction2(3, mode="full", threads=1)
