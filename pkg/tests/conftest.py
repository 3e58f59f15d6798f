import matplotlib

matplotlib.use("Agg")

import pytest

from drgibbs import families


@pytest.fixture
def j2():
    """Grassmann graph of 2-spaces in F_2^4 (35 vertices)."""
    return families.q_johnson(2, 4, 2)


@pytest.fixture
def octahedron():
    return families.octahedron()


@pytest.fixture
def hamming33():
    return families.hamming(3, 3)


@pytest.fixture
def gamma33():
    H, constants = families.gamma_ab(3, 3)
    return H
