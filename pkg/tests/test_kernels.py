"""Both kernel backends against numpy."""
import os
import subprocess
import sys

import numpy as np
import pytest

from eframes._backend import BACKEND, available_backends
from eframes.verify import crandn

from conftest import assert_close, random_hermitian

BACKENDS = available_backends()


@pytest.fixture(params=sorted(BACKENDS))
def k(request):
    return BACKENDS[request.param]


def test_python_backend_always_present():
    assert "python" in BACKENDS
    assert BACKEND in BACKENDS


@pytest.mark.parametrize("n", [1, 2, 5, 16])
def test_jacobi_matches_numpy(k, rng, n):
    A = random_hermitian(rng, n)
    w, V, sweeps = k.jacobi_eigh(np.ascontiguousarray(A), 1e-13, 100)
    assert sweeps >= 0
    assert_close(np.sort(w), np.linalg.eigvalsh(A), 1e-12)
    assert_close(V.conj().T @ V, np.eye(n), 1e-12)
    assert_close(V @ np.diag(w) @ V.conj().T, A, 1e-12)


def test_jacobi_reports_non_convergence(k, rng):
    A = random_hermitian(rng, 6)
    _, _, sweeps = k.jacobi_eigh(np.ascontiguousarray(A), 0.0, 0)
    assert sweeps == -1


@pytest.mark.parametrize("n", [1, 3, 12])
def test_gauss_jordan_matches_numpy(k, rng, n):
    A = crandn(rng, n, n) + 2 * np.eye(n)
    X, bad = k.gauss_jordan_inverse(np.ascontiguousarray(A), 1e-14)
    assert bad == -1
    assert_close(X, np.linalg.inv(A), 1e-12)


def test_gauss_jordan_flags_singular(k):
    A = np.array([[1, 2, 3], [2, 4, 6], [0, 0, 1]], dtype=np.complex128)
    _, bad = k.gauss_jordan_inverse(A, 1e-14)
    assert bad >= 0


def test_etransform_matches_matmul(k, rng):
    E, T = crandn(rng, 9, 9), crandn(rng, 4, 9)
    assert_close(k.etransform_direct(E, T), T @ E.T, 1e-13)


def test_multiplier_matches_composition(k, rng):
    N, d1, d2 = 7, 5, 3
    m = crandn(rng, N)
    E1, E2 = crandn(rng, N, N), crandn(rng, N, N)
    Phi, Psi = crandn(rng, d1, N), crandn(rng, d2, N)
    f = crandn(rng, d1)
    got = k.multiplier_direct(m, E1, Phi, E2, Psi, f)
    ref = (Psi @ E2.T) @ (m * ((Phi @ E1.T).conj().T @ f))
    assert_close(got, ref, 1e-12)


def test_backends_agree(rng):
    if len(BACKENDS) < 2:
        pytest.skip("compiled backend not built")
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    A = random_hermitian(rng, 10)
    assert_close(np.sort(py.jacobi_eigh(A, 1e-13, 100)[0]), np.sort(cy.jacobi_eigh(A, 1e-13, 100)[0]), 1e-13)
    B = crandn(rng, 10, 10) + 3 * np.eye(10)
    assert_close(py.gauss_jordan_inverse(B, 1e-14)[0], cy.gauss_jordan_inverse(B, 1e-14)[0], 1e-13)


def test_env_var_forces_pure_python():
    code = "import eframes; print(eframes.BACKEND)"
    env = dict(os.environ, EFRAMES_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@pytest.mark.parametrize("suite", ["paper-example-1", "paper-example-2", "multiplier-inverse"])
def test_pure_python_backend_end_to_end(suite):
    env = dict(os.environ, EFRAMES_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-m", "eframes.cli", "verify", suite], env=env,
                         capture_output=True, text=True)
    assert out.returncode == 0, out.stderr
