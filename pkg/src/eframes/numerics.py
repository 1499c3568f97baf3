"""Complex dense linear algebra.

Matrices and vectors are plain ``numpy`` arrays of dtype ``complex128``.
Products go through numpy; Hermitian diagonalisation and inversion run on
the package's own kernels (see :mod:`eframes._backend`).
"""
from __future__ import annotations

from typing import Literal

import numpy as np

from ._backend import kernels
from .errors import (
    ConvergenceError,
    DimensionError,
    InputError,
    NonFiniteError,
    NotHermitianError,
    SingularMatrixError,
)

REL_TOL = 1e-10
ABS_TOL = 1e-14
HERMITIAN_TOL = 1e-12
PIVOT_TOL = 1e-14
MAX_SWEEPS = 100


def hybrid_tol(scale: float, rel: float = REL_TOL, abs_: float = ABS_TOL) -> float:
    """Absolute-relative tolerance ``rel * scale + abs_``."""
    return rel * scale + abs_


def as_vector(x) -> np.ndarray:
    v = np.asarray(x, dtype=np.complex128)
    if v.ndim != 1 or v.size == 0:
        raise DimensionError(f"expected a nonempty vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise NonFiniteError("vector contains NaN or Inf")
    return v


def as_matrix(a) -> np.ndarray:
    A = np.asarray(a, dtype=np.complex128)
    if A.ndim != 2 or 0 in A.shape:
        raise DimensionError(f"expected a nonempty 2-D matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise NonFiniteError("matrix contains NaN or Inf")
    return A


def max_norm(A) -> float:
    """Largest entry modulus."""
    A = np.asarray(A)
    return float(np.max(np.abs(A))) if A.size else 0.0


def matvec(A, x) -> np.ndarray:
    A = as_matrix(A)
    x = as_vector(x)
    if A.shape[1] != x.shape[0]:
        raise DimensionError(f"matvec: A has {A.shape[1]} columns, x has dim {x.shape[0]}")
    return A @ x


def matmul(A, B) -> np.ndarray:
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape[1] != B.shape[0]:
        raise DimensionError(f"matmul: inner dimensions {A.shape[1]} != {B.shape[0]}")
    return A @ B


def conjugate_transpose_family(A, mode: Literal["adjoint", "transpose", "conjugate"]) -> np.ndarray:
    """Return the adjoint, transpose or entrywise conjugate of ``A``."""
    A = as_matrix(A)
    if mode == "adjoint":
        return A.conj().T.copy()
    if mode == "transpose":
        return A.T.copy()
    if mode == "conjugate":
        return A.conj()
    raise InputError(f"unknown mode {mode!r}")


def adjoint(A) -> np.ndarray:
    return conjugate_transpose_family(A, "adjoint")


def _check_hermitian(A: np.ndarray, hermitian_tol: float | None) -> np.ndarray:
    if A.shape[0] != A.shape[1]:
        raise DimensionError(f"square matrix required, got {A.shape}")
    scale = max_norm(A)
    tol = HERMITIAN_TOL * scale if hermitian_tol is None else hermitian_tol
    dev = max_norm(A - A.conj().T)
    if dev > tol:
        raise NotHermitianError(f"|A - A*|_max = {dev:.3e} exceeds tolerance {tol:.3e}")
    return 0.5 * (A + A.conj().T)


def hermitian_eigh(A, hermitian_tol: float | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi rotations.

    Returns ``(w, V)`` with ``w`` nondecreasing and ``A @ V[:, j] ~= w[j] * V[:, j]``.
    """
    H = _check_hermitian(as_matrix(A), hermitian_tol)
    fro = float(np.linalg.norm(H))
    if fro == 0.0:
        n = H.shape[0]
        return np.zeros(n), np.eye(n, dtype=np.complex128)
    # Off-diagonal mass cannot drop much below n * eps * |H|_F in floating point.
    tol = (1e-14 + H.shape[0] * np.finfo(float).eps) * fro
    w, V, sweeps = kernels.jacobi_eigh(np.ascontiguousarray(H), tol, MAX_SWEEPS)
    if sweeps < 0:
        raise ConvergenceError(f"Jacobi iteration did not converge in {MAX_SWEEPS} sweeps")
    order = np.argsort(w, kind="stable")
    return w[order], V[:, order]


def hermitian_eigenvalues(A, hermitian_tol: float | None = None) -> np.ndarray:
    return hermitian_eigh(A, hermitian_tol)[0]


def operator_norm(A) -> float:
    """Largest singular value, from the top eigenvalue of ``A* A``."""
    A = as_matrix(A)
    # Work with the smaller Gram matrix; both share the nonzero spectrum.
    G = A.conj().T @ A if A.shape[1] <= A.shape[0] else A @ A.conj().T
    G = 0.5 * (G + G.conj().T)
    lam = hermitian_eigenvalues(G)[-1]
    return float(np.sqrt(max(lam, 0.0)))


def invert(A) -> np.ndarray:
    """Inverse by Gauss-Jordan elimination with partial pivoting.

    Raises :class:`SingularMatrixError` when the best available pivot drops
    below ``1e-14 * |A|_max``.
    """
    A = as_matrix(A)
    if A.shape[0] != A.shape[1]:
        raise DimensionError(f"square matrix required, got {A.shape}")
    thresh = PIVOT_TOL * max_norm(A)
    if thresh == 0.0:
        raise SingularMatrixError("zero matrix")
    X, bad = kernels.gauss_jordan_inverse(np.ascontiguousarray(A), thresh)
    if bad >= 0:
        raise SingularMatrixError(f"matrix is singular to working precision (column {bad + 1})")
    return X


def condition_number(A) -> float:
    """2-norm condition number ``|A| |A^-1|``."""
    return operator_norm(A) * operator_norm(invert(A))
