import numpy as np
import pytest

from qutritbraid import (braid_from_tl, build_parafermions, build_topological_basis,
                         tl_nearest)


@pytest.fixture(scope="session")
def ps2():
    return build_parafermions(2)


@pytest.fixture(scope="session")
def b12(ps2):
    return braid_from_tl(tl_nearest(ps2, 1))


@pytest.fixture(scope="session")
def b23(ps2):
    return braid_from_tl(tl_nearest(ps2, 2))


@pytest.fixture(scope="session")
def topo_basis():
    return build_topological_basis()


@pytest.fixture
def rng():
    return np.random.default_rng(20260823)
