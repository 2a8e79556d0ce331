import pytest

from perichain.lattice.rootdata import dual_data


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: runs a canonical basis search or a verification suite end to end")


@pytest.fixture
def data_c2():
    """d=2, p=3, c=(2)."""
    return dual_data(3, (2,))


@pytest.fixture
def data_c11():
    """d=2, p=3, c=(1,1)."""
    return dual_data(3, (1, 1))
