import pytest

import inlslab as il


@pytest.fixture(scope="session")
def ref_params():
    """Reference parameter set used across suites."""
    return il.derive_params(3, 1.0, 3.5, 3.0)


@pytest.fixture(scope="session")
def wide5_params():
    """Dimension-5 set whose profiles decay fast at both window ends."""
    return il.derive_params(5, 1.0, 2.5, 2.25)


@pytest.fixture(scope="session")
def wide5_grid():
    return il.make_grid(1e-6, 1e6, 1025, 5)
