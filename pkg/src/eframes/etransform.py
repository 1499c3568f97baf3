"""E-transforms of sequences and the associated E-frame operators.

The E-transform of ``Psi`` is the sequence ``(E Psi)_n = sum_k E_nk psi_k``.
All sums run over ``k <= N``; nothing here estimates the tail beyond the
truncation, but :class:`ETransformed` records ``|psi_N|`` and the last column
of ``E`` so the size of the neglected terms can be judged.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._backend import kernels
from .errors import DimensionError, PreconditionError
from .frames import FrameBounds, analysis, frame_bounds, frame_operator, synthesis
from .model import as_matrix_at, as_sequence_at, as_symbol_at, classify_symbol, hs_partial_sum
from .numerics import as_vector, invert, max_norm, operator_norm


@dataclass(frozen=True, eq=False)
class ETransformed:
    terms: np.ndarray
    matrix: object = field(default=None, repr=False)
    source: object = field(default=None, repr=False)
    last_vector_norm: float = 0.0
    last_column_max: float = 0.0

    @property
    def N(self) -> int:
        return self.terms.shape[1]

    @property
    def d(self) -> int:
        return self.terms.shape[0]


def materialize_pair(E, Psi, N: int | None = None, d: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Materialise ``(E, Psi)`` at a common truncation.

    With arrays, ``N`` is read off the sequence.
    """
    T = as_sequence_at(Psi, N, d)
    Em = as_matrix_at(E, T.shape[1])
    return Em, T


def e_transform(E, Psi, N: int | None = None, d: int | None = None) -> ETransformed:
    Em, T = materialize_pair(E, Psi, N, d)
    terms = kernels.etransform_direct(np.ascontiguousarray(Em), np.ascontiguousarray(T))
    return ETransformed(
        terms=terms,
        matrix=E,
        source=Psi,
        last_vector_norm=float(np.linalg.norm(T[:, -1])),
        last_column_max=float(np.max(np.abs(Em[:, -1]))),
    )


def _terms(E, Psi, N=None, d=None) -> np.ndarray:
    if isinstance(Psi, ETransformed):
        return Psi.terms
    return e_transform(E, Psi, N, d).terms


def e_analysis(E, Psi, f, N=None, d=None) -> np.ndarray:
    """``T_E^* f = {<f, (E Psi)_n>}``."""
    return analysis(_terms(E, Psi, N, d), f)


def e_synthesis(E, Psi, c, N=None, d=None) -> np.ndarray:
    """``T_E c = sum_n c_n (E Psi)_n``."""
    return synthesis(_terms(E, Psi, N, d), c)


def e_frame_operator(E, Psi, N=None, d=None) -> np.ndarray:
    return frame_operator(_terms(E, Psi, N, d))


def e_frame_bounds(E, Psi, N=None, d=None) -> FrameBounds:
    return frame_bounds(_terms(E, Psi, N, d))


def verify_synthesis_factorization(E, Psi, c, N=None, d=None) -> float:
    """``|T_E c - T(E^t c)|_2``."""
    Em, T = materialize_pair(E, Psi, N, d)
    c = as_vector(c)
    lhs = e_synthesis(Em, T, c)
    rhs = synthesis(T, Em.T @ c)
    return float(np.linalg.norm(lhs - rhs))


def verify_analysis_factorization(E, Psi, f, N=None, d=None) -> float:
    """``|T_E^* f - conj(E) T^* f|_2``."""
    Em, T = materialize_pair(E, Psi, N, d)
    lhs = e_analysis(Em, T, f)
    rhs = Em.conj() @ analysis(T, f)
    return float(np.linalg.norm(lhs - rhs))


@dataclass(frozen=True)
class ScaledBounds:
    bounds: FrameBounds
    base: FrameBounds
    predicted_lo: float
    predicted_hi: float
    within: bool


def scaled_sequence_bounds(E, Psi, m, N=None, d=None, tol: float = 1e-9) -> ScaledBounds:
    """E-frame bounds of ``{|m_k| psi_k}`` against ``[inf|m|^2 A, sup|m|^2 B]``.

    ``(A, B)`` are the E-frame bounds of ``Psi`` itself.  ``tol`` is applied
    relative to ``max(1, predicted_hi)``.
    """
    Em, T = materialize_pair(E, Psi, N, d)
    n = T.shape[1]
    cls = classify_symbol(m, n)
    if not cls.semi_normalized_on_window:
        raise PreconditionError("symbol vanishes somewhere on the window")
    mags = np.abs(as_symbol_at(m, n))
    base = e_frame_bounds(Em, T)
    scaled = e_frame_bounds(Em, T * mags[None, :])
    lo = cls.window_inf**2 * base.lower
    hi = cls.window_sup**2 * base.upper
    slack = tol * max(1.0, hi)
    within = scaled.lower >= lo - slack and scaled.upper <= hi + slack
    return ScaledBounds(scaled, base, lo, hi, within)


def scaling_counterexample_search(E, Psi, rng: np.random.Generator, trials: int = 200,
                                  low: float = 0.5, high: float = 2.0, tol: float = 1e-9):
    """Look for semi-normalized symbols that break the scaled-bounds containment.

    Symbols are drawn with ``|m_k|`` uniform in ``[low, high]``.  Returns the
    list of ``(symbol, ScaledBounds)`` pairs that violate it; for general
    (non-diagonal) ``E`` this list can be nonempty.
    """
    Em, T = materialize_pair(E, Psi)
    found = []
    for _ in range(trials):
        m = rng.uniform(low, high, size=T.shape[1])
        res = scaled_sequence_bounds(Em, T, m, tol=tol)
        if not res.within:
            found.append((m, res))
    return found


@dataclass(frozen=True)
class MultipliedBessel:
    upper: float
    bound: float
    within: bool


def multiplied_bessel_bound(E, Psi, m, N=None, d=None, tol: float = 1e-9) -> MultipliedBessel:
    """Upper E-frame bound of ``{m_k psi_k}`` against ``|E|^2 B_{m Psi}``."""
    Em, T = materialize_pair(E, Psi, N, d)
    mv = as_symbol_at(m, T.shape[1])
    mT = T * mv[None, :]
    upper = e_frame_bounds(Em, mT).upper
    nrm = operator_norm(Em)
    bound = nrm * nrm * frame_bounds(mT).upper
    return MultipliedBessel(upper, bound, upper <= bound + tol * max(1.0, bound))


@dataclass(frozen=True)
class AbsConvergence:
    partial: float
    bound: float
    within: bool


def absolute_convergence_bound(E, Psi, c, N=None, d=None, tol: float = 1e-12) -> AbsConvergence:
    """``sum_{n,k} |c_n E_nk| |psi_k|`` against ``|c|_2 (sum_k |psi_k|^2)^(1/2) (sum |E_nk|^2)^(1/2)``."""
    Em, T = materialize_pair(E, Psi, N, d)
    c = as_vector(c)
    if c.shape[0] != Em.shape[0]:
        raise DimensionError(f"{c.shape[0]} coefficients for an {Em.shape[0]}-row matrix")
    norms = np.linalg.norm(T, axis=0)
    partial = float(np.abs(c) @ np.abs(Em) @ norms)
    hs = hs_partial_sum(Em, Em.shape[0]).partial
    bound = float(np.linalg.norm(c) * np.sqrt(np.sum(norms**2)) * np.sqrt(hs))
    return AbsConvergence(partial, bound, partial <= bound * (1 + tol) + tol)


def riesz_sequence(U, E, N: int | None = None) -> np.ndarray:
    """``psi_k = U (E^-1 {e_j})_k``, materialised with ``d = N``."""
    Um = as_matrix_at(U)
    n = Um.shape[0] if N is None else N
    if Um.shape != (n, n):
        raise DimensionError(f"U has shape {Um.shape}, expected ({n}, {n})")
    Einv = invert(as_matrix_at(E, n))
    basis_inv = kernels.etransform_direct(np.ascontiguousarray(Einv), np.eye(n, dtype=np.complex128))
    return Um @ basis_inv


def riesz_etransform_check(U, E, N: int | None = None) -> float:
    """``max_n |(E Psi)_n - U e_n|_2`` for the sequence built by :func:`riesz_sequence`."""
    Um = as_matrix_at(U)
    Psi = riesz_sequence(Um, E, N)
    n = Psi.shape[1]
    # U must be a bijection for the construction to describe a Riesz basis.
    invert(Um)
    terms = e_transform(as_matrix_at(E, n), Psi).terms
    return float(np.max(np.linalg.norm(terms - Um, axis=0)))


def linearity_residual(E, Psi, Phi, alpha: complex, beta: complex) -> float:
    """``max |E(a Psi + b Phi) - (a E Psi + b E Phi)|``."""
    Em, T = materialize_pair(E, Psi)
    _, D = materialize_pair(Em, Phi)
    lhs = e_transform(Em, alpha * T + beta * D).terms
    rhs = alpha * e_transform(Em, T).terms + beta * e_transform(Em, D).terms
    return max_norm(lhs - rhs)
