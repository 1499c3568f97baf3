import numpy as np
import pytest

from eframes.verify import crandn


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_hermitian(rng, n):
    A = crandn(rng, n, n)
    return 0.5 * (A + A.conj().T)


def assert_close(a, b, tol):
    diff = np.max(np.abs(np.asarray(a) - np.asarray(b))) if np.size(a) else 0.0
    assert diff <= tol, f"max deviation {diff:.3e} > {tol:.1e}"
