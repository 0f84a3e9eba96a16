import numpy as np
import pytest

from squeezecat.hamiltonians import default_params, deep_squeeze_params
from squeezecat.hilbert import HilbertDims


@pytest.fixture
def params():
    return default_params()


@pytest.fixture
def deep_params():
    return deep_squeeze_params()


@pytest.fixture
def check_dims():
    """Identity-check truncation: N=40 with a 10-level guard band."""
    return HilbertDims(n_fock=40, guard=10)


@pytest.fixture
def run_dims():
    """Dynamics truncation: N=80 with a 12-level guard band."""
    return HilbertDims(n_fock=80, guard=12)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_hermitian(rng, n):
    m = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (m + m.conj().T) / 2.0
