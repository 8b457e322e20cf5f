import pytest

from monopole_algebra import build_grid


@pytest.fixture(scope="session")
def grid64():
    return build_grid(64, 64)


@pytest.fixture(scope="session")
def grid32():
    return build_grid(32, 32)
