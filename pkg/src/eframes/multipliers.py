"""(E1, E2)-multipliers.

For a symbol ``m``, sequences ``Psi`` (synthesis side) and ``Phi`` (analysis
side) and matrices ``E1``, ``E2``::

    M f = sum_n m_n <f, (E1 Phi)_n> (E2 Psi)_n

Two independent construction paths exist: :func:`multiplier_apply` runs the
triple sum directly in the kernel, :func:`multiplier_matrix` composes
``T_{E2 Psi} diag(m) T_{E1 Phi}^*`` from dense products.  The composed path
is the one used for norms and inverses.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._backend import kernels
from .errors import DimensionError, InputError, PreconditionError
from .etransform import e_frame_bounds, e_frame_operator, e_transform
from .frames import duality_residual
from .model import (
    Explicit,
    ScalarSequence,
    TruncationConfig,
    as_matrix_at,
    as_sequence_at,
    as_symbol_at,
    classify_symbol,
)
from .numerics import as_vector, condition_number, invert, max_norm, operator_norm


@dataclass(frozen=True, eq=False)
class MultiplierSpec:
    """Everything needed to build ``M^{(E1,E2)}_{m,Psi,Phi}``.

    Components may be declarative specs or arrays.  ``E1``/``E2`` default to
    the identity.  ``d1``/``d2`` default to ``truncation.ambient_dim``.
    """

    m: object
    Psi: object
    Phi: object
    E1: object = None
    E2: object = None
    truncation: TruncationConfig | None = None
    d1: int | None = None
    d2: int | None = None

    def materialize(self) -> "Materialized":
        cfg = self.truncation
        N = cfg.seq_len if cfg else None
        d1 = self.d1 or (cfg.ambient_dim if cfg else None)
        d2 = self.d2 or (cfg.ambient_dim if cfg else None)
        Phi = as_sequence_at(self.Phi, N, d1)
        Psi = as_sequence_at(self.Psi, N, d2)
        N = Phi.shape[1]
        if Psi.shape[1] != N:
            raise DimensionError(f"Psi has {Psi.shape[1]} terms, Phi has {N}")
        eye = np.eye(N, dtype=np.complex128)
        E1 = eye if self.E1 is None else as_matrix_at(self.E1, N)
        E2 = eye if self.E2 is None else as_matrix_at(self.E2, N)
        return Materialized(as_symbol_at(self.m, N), Psi, Phi, E1, E2)


@dataclass(frozen=True, eq=False)
class Materialized:
    m: np.ndarray
    Psi: np.ndarray
    Phi: np.ndarray
    E1: np.ndarray
    E2: np.ndarray

    @property
    def N(self) -> int:
        return self.m.shape[0]


def _mat(spec) -> Materialized:
    if isinstance(spec, Materialized):
        return spec
    return spec.materialize()


def multiplier_apply(spec, f) -> np.ndarray:
    """``M f`` by direct summation over ``n`` and ``k``."""
    z = _mat(spec)
    f = as_vector(f)
    if f.shape[0] != z.Phi.shape[0]:
        raise DimensionError(f"f has dimension {f.shape[0]}, expected {z.Phi.shape[0]}")
    return kernels.multiplier_direct(
        np.ascontiguousarray(z.m),
        np.ascontiguousarray(z.E1),
        np.ascontiguousarray(z.Phi),
        np.ascontiguousarray(z.E2),
        np.ascontiguousarray(z.Psi),
        np.ascontiguousarray(f),
    )


def multiplier_matrix(spec) -> np.ndarray:
    """``T_{E2 Psi} diag(m) T_{E1 Phi}^*`` as a ``d2 x d1`` matrix."""
    z = _mat(spec)
    left = z.Psi @ z.E2.T
    right = z.Phi @ z.E1.T
    return (left * z.m[None, :]) @ right.conj().T


def multiplier_matrix_direct(spec) -> np.ndarray:
    """The same matrix, assembled column by column from :func:`multiplier_apply`."""
    z = _mat(spec)
    d1 = z.Phi.shape[0]
    cols = [multiplier_apply(z, np.eye(d1, dtype=np.complex128)[:, j]) for j in range(d1)]
    return np.stack(cols, axis=1)


def plain_multiplier(m, Psi, Phi) -> np.ndarray:
    """Classical ``M_{m,Psi,Phi}`` (both matrices the identity)."""
    return multiplier_matrix(MultiplierSpec(m, as_sequence_at(Psi), as_sequence_at(Phi)))


@dataclass(frozen=True)
class NormBound:
    norm: float
    bound: float
    within: bool
    B1: float = 0.0
    B2: float = 0.0
    sup_m: float = 0.0


def multiplier_norm_bound(spec, tol: float = 1e-9) -> NormBound:
    """``|M|`` against ``sqrt(B B') |m|_inf``.

    ``B`` is the upper E1-frame bound of ``Phi``, ``B'`` the upper E2-frame
    bound of ``Psi``.
    """
    z = _mat(spec)
    nrm = operator_norm(multiplier_matrix(z))
    B1 = e_frame_bounds(z.E1, z.Phi).upper
    B2 = e_frame_bounds(z.E2, z.Psi).upper
    sup_m = float(np.max(np.abs(z.m)))
    bound = float(np.sqrt(B1 * B2) * sup_m)
    return NormBound(nrm, bound, nrm <= bound + tol, B1, B2, sup_m)


def check_symbol_matrix_commutation(m, E, N: int | None = None, tol: float | None = None) -> list[tuple[int, int, float]]:
    """All ``(n, k, |m_n E_nk - E_nk m_k|)`` above ``tol``, with 1-based indices.

    An empty list means ``m (E Psi) = E (m Psi)`` termwise for every ``Psi``.
    ``tol`` defaults to ``1e-14 * |m|_inf * |E|_max``.
    """
    Em = as_matrix_at(E, N)
    mv = as_symbol_at(m, Em.shape[0])
    gap = np.abs(mv[:, None] * Em - Em * mv[None, :])
    if tol is None:
        tol = 1e-14 * float(np.max(np.abs(mv))) * max_norm(Em)
    return [(int(n) + 1, int(k) + 1, float(gap[n, k])) for n, k in zip(*np.nonzero(gap > tol))]


def _one_signed(m, N: int) -> tuple[np.ndarray, int]:
    cls = classify_symbol(m, N)
    if cls.sign not in ("positive", "negative"):
        raise PreconditionError(f"symbol must be real and one-signed, got {cls.sign}")
    if not cls.semi_normalized_on_window:
        raise PreconditionError("symbol is not semi-normalized on the window")
    mv = as_symbol_at(m, N).real
    return mv, 1 if cls.sign == "positive" else -1


def _require_commutation(m, Em, tol: float | None):
    bad = check_symbol_matrix_commutation(m, Em, tol=tol)
    if bad:
        n, k, g = bad[0]
        raise PreconditionError(
            f"symbol does not commute with E: {len(bad)} violations, first at ({n}, {k}) with gap {g:.3e}"
        )


@dataclass(frozen=True)
class FrameOperatorCheck:
    residual: float
    sign: int


def multiplier_as_frame_operator(m, Psi, E, N=None, d=None, commute_tol: float | None = None) -> FrameOperatorCheck:
    """``|M^E_{m,Psi,Psi} - sign S_{E{sqrt|m_k| psi_k}}|_max`` for one-signed ``m``."""
    T = as_sequence_at(Psi, N, d)
    n = T.shape[1]
    Em = as_matrix_at(E, n)
    mv, sign = _one_signed(m, n)
    _require_commutation(mv, Em, commute_tol)
    M = multiplier_matrix(Materialized(mv.astype(np.complex128), T, T, Em, Em))
    S = e_frame_operator(Em, T * np.sqrt(np.abs(mv))[None, :])
    return FrameOperatorCheck(max_norm(M - sign * S), sign)


@dataclass(frozen=True, eq=False)
class InverseCheck:
    formula_inverse: np.ndarray
    direct_inverse: np.ndarray
    residual: float
    variant: str
    literal_residual: float | None = field(default=None)


def multiplier_inverse(m, Phi, U, E, variant: str = "PsiPhi", N=None, d=None,
                       residual_tol: float = 1e-9, max_cond: float = 1e4,
                       commute_tol: float | None = None) -> InverseCheck:
    """Closed-form inverse of ``M^E_{m,Psi,Phi}`` or ``M^E_{m,Phi,Psi}`` with ``Psi = U Phi``.

    ``variant="PsiPhi"``: ``sign S^-1_{E{sqrt|m| phi}} U^-1``.
    ``variant="PhiPsi"``: ``sign (U^-1)^* S^-1_{E{sqrt|m| phi}}``.  The frame
    operator here is built from ``Phi``; the same expression with ``Psi``
    in its place is reported as ``literal_residual`` and does not hold in
    general.  ``residual`` is measured against the directly inverted matrix,
    relative to ``|direct|_max``.
    """
    if variant not in ("PsiPhi", "PhiPsi"):
        raise InputError(f"variant must be 'PsiPhi' or 'PhiPsi', got {variant!r}")
    Tphi = as_sequence_at(Phi, N, d)
    n = Tphi.shape[1]
    Em = as_matrix_at(E, n)
    Um = as_matrix_at(U)
    if Um.shape != (Tphi.shape[0],) * 2:
        raise DimensionError(f"U has shape {Um.shape}, expected {(Tphi.shape[0],) * 2}")
    mv, sign = _one_signed(m, n)
    _require_commutation(mv, Em, commute_tol)
    if not e_frame_bounds(Em, Tphi).lower > residual_tol:
        raise PreconditionError("Phi is not an E-frame at this truncation")
    cond = condition_number(Um)
    if cond > max_cond:
        raise PreconditionError(f"U is ill-conditioned: cond = {cond:.3e} > {max_cond:.1e}")

    Tpsi = Um @ Tphi
    root = np.sqrt(np.abs(mv))[None, :]
    Uinv = invert(Um)
    S_phi_inv = invert(e_frame_operator(Em, Tphi * root))
    mc = mv.astype(np.complex128)
    literal = None
    if variant == "PsiPhi":
        M = multiplier_matrix(Materialized(mc, Tpsi, Tphi, Em, Em))
        formula = sign * S_phi_inv @ Uinv
    else:
        M = multiplier_matrix(Materialized(mc, Tphi, Tpsi, Em, Em))
        formula = sign * Uinv.conj().T @ S_phi_inv
    direct = invert(M)
    scale = max_norm(direct)
    if variant == "PhiPsi":
        S_psi_inv = invert(e_frame_operator(Em, Tpsi * root))
        literal = max_norm(sign * Uinv.conj().T @ S_psi_inv - direct) / scale
    return InverseCheck(formula, direct, max_norm(formula - direct) / scale, variant, literal)


@dataclass(frozen=True)
class DiagonalReduction:
    reduced_symbol: ScalarSequence
    residual: float


def _diagonal(E, N: int) -> np.ndarray:
    Em = as_matrix_at(E, N)
    lam = np.diag(Em).copy()
    if max_norm(Em - np.diag(lam)) != 0.0:
        raise InputError("E must be diagonal")
    return lam


def diagonal_reduction(m, Psi, Phi, E, N=None, d=None) -> DiagonalReduction:
    """Rewrite ``M^E_{m,Psi,Phi}`` as the plain multiplier with symbol ``|E_nn|^2 m_n``."""
    T = as_sequence_at(Psi, N, d)
    D = as_sequence_at(Phi, N, d)
    n = T.shape[1]
    lam = _diagonal(E, n)
    mv = as_symbol_at(m, n)
    reduced = np.abs(lam) ** 2 * mv
    Em = np.diag(lam)
    ME = multiplier_matrix(Materialized(mv, T, D, Em, Em))
    M = plain_multiplier(reduced, T, D)
    return DiagonalReduction(ScalarSequence(Explicit(tuple(reduced)), "finite_support"), max_norm(ME - M))


def _require_dual(T, D, residual_tol: float, what: str):
    r = duality_residual(T, D)
    if r > residual_tol:
        raise PreconditionError(f"{what} are not dual at this truncation (residual {r:.3e})")


def dual_identity_check(Psi, Phi, E, N=None, d=None, residual_tol: float = 1e-9) -> dict[str, float]:
    """``|M - I|_max`` for the four multipliers built from ``conj(E)`` and ``E^-1``.

    Keys name the (analysis matrix, synthesis matrix, left, right) choice,
    e.g. ``"conjE,Einv,Psi,Phi"`` is ``M^{(conj E, E^-1)}_{1,Psi,Phi}``.
    """
    T = as_sequence_at(Psi, N, d)
    D = as_sequence_at(Phi, N, d)
    n = T.shape[1]
    lam = _diagonal(E, n)
    if np.any(lam == 0):
        raise PreconditionError("E has a zero diagonal entry")
    _require_dual(T, D, residual_tol, "Psi and Phi")
    Ebar = np.diag(lam.conj())
    Einv = invert(np.diag(lam))
    one = np.ones(n, dtype=np.complex128)
    I = np.eye(T.shape[0])
    out = {}
    for a_name, A, s_name, S in (("conjE", Ebar, "Einv", Einv), ("Einv", Einv, "conjE", Ebar)):
        for l_name, L, r_name, R in (("Psi", T, "Phi", D), ("Phi", D, "Psi", T)):
            M = multiplier_matrix(Materialized(one, L, R, A, S))
            out[f"{a_name},{s_name},{l_name},{r_name}"] = max_norm(M - I)
    return out


def dual_eframe_identity(Psi, Phi, E, N=None, d=None, residual_tol: float = 1e-9) -> dict[str, float]:
    """``|M_{|E_nn|^2,Psi,Phi} - I|`` and ``|M_{|E_nn|^2,Phi,Psi} - I|`` for dual E-frames."""
    T = as_sequence_at(Psi, N, d)
    D = as_sequence_at(Phi, N, d)
    n = T.shape[1]
    lam = _diagonal(E, n)
    Em = np.diag(lam)
    _require_dual(e_transform(Em, T).terms, e_transform(Em, D).terms, residual_tol, "E Psi and E Phi")
    m = np.abs(lam) ** 2
    I = np.eye(T.shape[0])
    return {
        "Psi,Phi": max_norm(plain_multiplier(m, T, D) - I),
        "Phi,Psi": max_norm(plain_multiplier(m, D, T) - I),
    }
