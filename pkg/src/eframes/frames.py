"""Classical frame machinery on materialised sequences.

A materialised sequence is a ``d x N`` array ``T`` whose columns are the
vectors ``psi_k``; ``T`` is therefore the synthesis operator.  The inner
product is linear in its first argument and conjugate-linear in the second,
so the analysis operator is ``T^*``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, PreconditionError
from .model import as_sequence_at, materialize_sequence
from .numerics import as_vector, hermitian_eigenvalues, invert, max_norm

DEFAULT_RESIDUAL_TOL = 1e-9


@dataclass(frozen=True)
class FrameBounds:
    lower: float
    upper: float

    @property
    def A(self) -> float:
        return self.lower

    @property
    def B(self) -> float:
        return self.upper


def inner(f, g) -> complex:
    """``<f, g> = sum_i f_i conj(g_i)``."""
    return complex(np.vdot(g, f))


def analysis(Psi, f) -> np.ndarray:
    """Coefficients ``<f, psi_k>``."""
    T = as_sequence_at(Psi)
    f = as_vector(f)
    if f.shape[0] != T.shape[0]:
        raise DimensionError(f"vector of dimension {f.shape[0]} against a sequence in C^{T.shape[0]}")
    return T.conj().T @ f


def synthesis(Psi, c) -> np.ndarray:
    """``sum_k c_k psi_k``."""
    T = as_sequence_at(Psi)
    c = as_vector(c)
    if c.shape[0] != T.shape[1]:
        raise DimensionError(f"{c.shape[0]} coefficients for a sequence of length {T.shape[1]}")
    return T @ c


def frame_operator(Psi) -> np.ndarray:
    """``S = sum_k psi_k psi_k^*``."""
    T = as_sequence_at(Psi)
    S = T @ T.conj().T
    return 0.5 * (S + S.conj().T)


def frame_bounds(Psi) -> FrameBounds:
    """Optimal frame bounds at this truncation: the extreme eigenvalues of ``S``."""
    w = hermitian_eigenvalues(frame_operator(Psi))
    # S is PSD; clip roundoff below zero.
    return FrameBounds(max(float(w[0]), 0.0), max(float(w[-1]), 0.0))


def is_frame(Psi, residual_tol: float = DEFAULT_RESIDUAL_TOL) -> bool:
    return frame_bounds(Psi).lower > residual_tol


@dataclass(frozen=True)
class BesselStatus:
    bessel: bool
    upper: float
    truncation_caveat: str = "finite truncation: every finite sequence is Bessel"


def is_bessel(Psi) -> BesselStatus:
    """Always true at finite truncation; the finite bound is returned with a caveat.

    Use :func:`bessel_ladder` to see whether the bound grows with ``N``.
    """
    return BesselStatus(True, frame_bounds(Psi).upper)


@dataclass(frozen=True)
class BesselLadder:
    sizes: tuple[int, ...]
    uppers: tuple[float, ...]
    grows: bool

    @property
    def flag(self) -> str:
        return "bound grows with N" if self.grows else "bound stable across truncations"


def bessel_ladder(seq, N: int, rungs: int = 3, growth: float = 1.1, transform=None) -> BesselLadder:
    """Upper frame bound of ``seq`` at ``N, 2N, 4N, ...`` with ``d = N`` at each rung.

    ``grows`` is set when every rung raises the bound by more than the
    factor ``growth``.  ``transform`` maps a materialised ``(T, n)`` to the
    sequence whose bound is wanted (e.g. an E-transform).
    """
    sizes, uppers = [], []
    n = N
    for _ in range(rungs):
        T = materialize_sequence(seq, n, n)
        if transform is not None:
            T = transform(T, n)
        sizes.append(n)
        uppers.append(frame_bounds(T).upper)
        n *= 2
    grows = all(b > growth * a for a, b in zip(uppers, uppers[1:]))
    return BesselLadder(tuple(sizes), tuple(uppers), grows)


def canonical_dual(Psi, residual_tol: float = DEFAULT_RESIDUAL_TOL) -> np.ndarray:
    """``{S^-1 psi_k}``; raises if ``Psi`` is not a frame at this truncation."""
    T = as_sequence_at(Psi)
    bounds = frame_bounds(T)
    if not bounds.lower > residual_tol:
        raise PreconditionError(
            f"not a frame at this truncation: lower bound {bounds.lower:.3e} <= {residual_tol:.3e}"
        )
    return invert(frame_operator(T)) @ T


def duality_residual(Psi, Phi) -> float:
    """``max |T_Psi T_Phi^* - I|``: zero when ``sum <f, phi_k> psi_k = f`` for all ``f``."""
    T = as_sequence_at(Psi)
    D = as_sequence_at(Phi)
    if T.shape != D.shape:
        raise DimensionError(f"sequence shapes differ: {T.shape} vs {D.shape}")
    return max_norm(T @ D.conj().T - np.eye(T.shape[0]))
