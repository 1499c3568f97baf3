"""Declarative, truncatable descriptions of infinite objects.

An infinite matrix ``E``, a vector sequence ``Psi = {psi_k}`` or a symbol
``m = {m_k}`` only ever exists here as a rule that can be materialised at a
chosen truncation ``(N, d)``.  Indices in rules are 1-based, matching the
mathematical convention; arrays returned are 0-based as usual.

Materialised objects:

* a matrix spec becomes an ``N x N`` complex array;
* a vector sequence becomes a ``d x N`` array whose column ``k-1`` is ``psi_k``;
* a scalar sequence becomes a length-``N`` complex array.

Basis vectors ``e_k`` with ``k > d`` have no counterpart in ``C^d`` and are
materialised as zero, i.e. sequences are orthogonally projected onto the
span of ``e_1 .. e_d``.  Explicit vectors shorter than ``d`` are read as
their leading coordinates and zero-padded.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Mapping, Union

import numpy as np

from .errors import DimensionError, InputError
from .numerics import as_matrix, operator_norm


@dataclass(frozen=True)
class TruncationConfig:
    ambient_dim: int
    seq_len: int | None = None
    residual_tol: float = 1e-9
    rng_seed: int = 0

    def __post_init__(self):
        if self.seq_len is None:
            object.__setattr__(self, "seq_len", self.ambient_dim)
        if self.ambient_dim < 1 or self.seq_len < 1:
            raise InputError("ambient_dim and seq_len must be positive")
        if not self.residual_tol > 0:
            raise InputError("residual_tol must be positive")
        if not 0 <= self.rng_seed < 2**64:
            raise InputError("rng_seed must be an unsigned 64-bit integer")

    @property
    def d(self) -> int:
        return self.ambient_dim

    @property
    def N(self) -> int:
        return self.seq_len


# -- scalar rules ----------------------------------------------------------


@dataclass(frozen=True)
class Constant:
    value: complex

    def __call__(self, k: int) -> complex:
        return complex(self.value)


@dataclass(frozen=True)
class Power:
    """``k ** p``."""

    p: float

    def __call__(self, k: int) -> complex:
        return complex(float(k) ** self.p)


@dataclass(frozen=True)
class InversePower:
    """``k ** -p``."""

    p: float

    def __call__(self, k: int) -> complex:
        return complex(float(k) ** -self.p)


@dataclass(frozen=True)
class Explicit:
    values: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(complex(v) for v in self.values))
        if not self.values:
            raise InputError("explicit rule needs at least one value")

    def __call__(self, k: int) -> complex:
        if not 1 <= k <= len(self.values):
            raise InputError(f"explicit rule has {len(self.values)} values, index {k} requested")
        return self.values[k - 1]


@dataclass(frozen=True)
class PrefixThenRule:
    """Listed values first, then ``tail(k - tail_offset)``."""

    prefix: tuple[complex, ...]
    tail: "ScalarRule"
    tail_offset: int = 0

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(complex(v) for v in self.prefix))

    def __call__(self, k: int) -> complex:
        if k <= len(self.prefix):
            return self.prefix[k - 1]
        return self.tail(k - self.tail_offset)


ScalarRule = Union[Constant, Power, InversePower, Explicit, PrefixThenRule]


def evaluate_rule(rule: ScalarRule, N: int) -> np.ndarray:
    """Values ``rule(1) .. rule(N)``."""
    out = np.array([rule(k) for k in range(1, N + 1)], dtype=np.complex128)
    if not np.all(np.isfinite(out)):
        raise InputError("rule produced a non-finite value")
    return out


def _default_tail(rule: ScalarRule) -> str:
    if isinstance(rule, Constant):
        return "semi_normalized" if rule.value != 0 else "finite_support"
    if isinstance(rule, Power):
        return "growing" if rule.p > 0 else "decaying" if rule.p < 0 else "semi_normalized"
    if isinstance(rule, InversePower):
        return "decaying" if rule.p > 0 else "growing" if rule.p < 0 else "semi_normalized"
    if isinstance(rule, Explicit):
        return "finite_support"
    return _default_tail(rule.tail)


@dataclass(frozen=True)
class ScalarSequence:
    rule: ScalarRule
    declared_tail: str = ""

    def __post_init__(self):
        if not self.declared_tail:
            object.__setattr__(self, "declared_tail", _default_tail(self.rule))
        if self.declared_tail not in ("decaying", "semi_normalized", "growing", "finite_support"):
            raise InputError(f"unknown declared_tail {self.declared_tail!r}")

    def values(self, N: int) -> np.ndarray:
        return evaluate_rule(self.rule, N)


# -- matrices --------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class DenseSpec:
    entries: np.ndarray

    def __post_init__(self):
        A = as_matrix(self.entries)
        if A.shape[0] != A.shape[1]:
            raise DimensionError(f"dense matrix spec must be square, got {A.shape}")
        object.__setattr__(self, "entries", A)


@dataclass(frozen=True)
class DiagonalSpec:
    rule: ScalarRule


@dataclass(frozen=True)
class BandedSpec:
    """``bands[o]`` gives the entries ``E[n, n + o]`` as ``rule(n)``, 1-based ``n``."""

    bands: Mapping[int, ScalarRule]


@dataclass(frozen=True, eq=False)
class DensePrefixPlusDiagonalRule:
    """Leading block ``prefix``; beyond it the diagonal is ``rule(n)``."""

    prefix: np.ndarray
    rule: ScalarRule

    def __post_init__(self):
        A = as_matrix(self.prefix)
        if A.shape[0] != A.shape[1]:
            raise DimensionError(f"prefix block must be square, got {A.shape}")
        object.__setattr__(self, "prefix", A)


MatrixSpec = Union[DenseSpec, DiagonalSpec, BandedSpec, DensePrefixPlusDiagonalRule]


def materialize_matrix(spec: MatrixSpec, N: int) -> np.ndarray:
    """The leading ``N x N`` block of the infinite matrix described by ``spec``."""
    if N < 1:
        raise InputError("N must be positive")
    if isinstance(spec, DenseSpec):
        if spec.entries.shape[0] < N:
            raise InputError(f"dense matrix has {spec.entries.shape[0]} rows, N={N} requested")
        return spec.entries[:N, :N].copy()
    if isinstance(spec, DiagonalSpec):
        return np.diag(evaluate_rule(spec.rule, N))
    if isinstance(spec, BandedSpec):
        E = np.zeros((N, N), dtype=np.complex128)
        for offset, rule in spec.bands.items():
            o = int(offset)
            for i in range(max(0, -o), min(N, N - o)):
                E[i, i + o] = rule(i + 1)
        if not np.all(np.isfinite(E)):
            raise InputError("banded rule produced a non-finite value")
        return E
    if isinstance(spec, DensePrefixPlusDiagonalRule):
        p = spec.prefix.shape[0]
        E = np.zeros((N, N), dtype=np.complex128)
        b = min(p, N)
        E[:b, :b] = spec.prefix[:b, :b]
        for n in range(p + 1, N + 1):
            E[n - 1, n - 1] = spec.rule(n)
        return E
    raise InputError(f"not a matrix spec: {type(spec).__name__}")


# -- vector sequences ------------------------------------------------------


@dataclass(frozen=True)
class ScaledBasis:
    """``psi_k = rule(k) e_k``."""

    rule: ScalarRule


@dataclass(frozen=True, eq=False)
class ExplicitVectors:
    vectors: tuple[np.ndarray, ...]

    def __post_init__(self):
        vecs = tuple(np.asarray(v, dtype=np.complex128) for v in self.vectors)
        if not vecs:
            raise InputError("explicit sequence needs at least one vector")
        if any(v.ndim != 1 for v in vecs):
            raise DimensionError("explicit sequence entries must be vectors")
        object.__setattr__(self, "vectors", vecs)


@dataclass(frozen=True, eq=False)
class PrefixThenScaledBasis:
    """Listed vectors first, then ``psi_k = rule(k - offset) e_k``."""

    prefix: tuple[np.ndarray, ...]
    rule: ScalarRule
    offset: int = 0

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(np.asarray(v, dtype=np.complex128) for v in self.prefix))


@dataclass(frozen=True, eq=False)
class Transformed:
    """``psi_k = U base_k``."""

    U: np.ndarray
    base: "VectorSequence"

    def __post_init__(self):
        object.__setattr__(self, "U", as_matrix(self.U))


VectorSequence = Union[ScaledBasis, ExplicitVectors, PrefixThenScaledBasis, Transformed]


def _fit(v: np.ndarray, d: int) -> np.ndarray:
    # Shorter vectors list leading coordinates of a finitely supported vector.
    if v.shape[0] > d:
        raise DimensionError(f"vector of dimension {v.shape[0]} in a sequence for C^{d}")
    if v.shape[0] < d:
        v = np.concatenate([v, np.zeros(d - v.shape[0], dtype=np.complex128)])
    return v


def materialize_sequence(seq: VectorSequence, N: int, d: int) -> np.ndarray:
    """``d x N`` array whose columns are ``psi_1 .. psi_N``."""
    if N < 1 or d < 1:
        raise InputError("N and d must be positive")
    out = np.zeros((d, N), dtype=np.complex128)
    if isinstance(seq, ScaledBasis):
        vals = evaluate_rule(seq.rule, N)
        for k in range(min(N, d)):
            out[k, k] = vals[k]
    elif isinstance(seq, ExplicitVectors):
        if len(seq.vectors) < N:
            raise InputError(f"explicit sequence has {len(seq.vectors)} vectors, N={N} requested")
        for k in range(N):
            out[:, k] = _fit(seq.vectors[k], d)
    elif isinstance(seq, PrefixThenScaledBasis):
        for k in range(1, N + 1):
            if k <= len(seq.prefix):
                out[:, k - 1] = _fit(seq.prefix[k - 1], d)
            elif k <= d:
                out[k - 1, k - 1] = seq.rule(k - seq.offset)
    elif isinstance(seq, Transformed):
        if seq.U.shape != (d, d):
            raise DimensionError(f"transform U has shape {seq.U.shape}, expected ({d}, {d})")
        out = seq.U @ materialize_sequence(seq.base, N, d)
    else:
        raise InputError(f"not a vector sequence: {type(seq).__name__}")
    if not np.all(np.isfinite(out)):
        raise InputError("sequence contains a non-finite entry")
    return out


# -- coercion helpers used by the computational modules -------------------


def as_matrix_at(E, N: int | None = None) -> np.ndarray:
    """Accept a spec or an array; return an ``N x N`` array."""
    if isinstance(E, (DenseSpec, DiagonalSpec, BandedSpec, DensePrefixPlusDiagonalRule)):
        if N is None:
            raise InputError("N is required to materialise a matrix spec")
        return materialize_matrix(E, N)
    A = as_matrix(E)
    if N is not None and A.shape != (N, N):
        raise DimensionError(f"matrix has shape {A.shape}, expected ({N}, {N})")
    return A


def as_sequence_at(seq, N: int | None = None, d: int | None = None) -> np.ndarray:
    """Accept a sequence spec or a ``d x N`` array."""
    if isinstance(seq, (ScaledBasis, ExplicitVectors, PrefixThenScaledBasis, Transformed)):
        if N is None or d is None:
            raise InputError("N and d are required to materialise a sequence spec")
        return materialize_sequence(seq, N, d)
    T = as_matrix(seq)
    if (N is not None and T.shape[1] != N) or (d is not None and T.shape[0] != d):
        raise DimensionError(f"sequence array has shape {T.shape}, expected ({d}, {N})")
    return T


def as_symbol_at(m, N: int | None = None) -> np.ndarray:
    """Accept a :class:`ScalarSequence`, a rule, a scalar or an array."""
    if isinstance(m, ScalarSequence):
        m = m.rule
    if isinstance(m, (Constant, Power, InversePower, Explicit, PrefixThenRule)):
        if N is None:
            raise InputError("N is required to evaluate a symbol rule")
        return evaluate_rule(m, N)
    if np.isscalar(m):
        if N is None:
            raise InputError("N is required to broadcast a scalar symbol")
        return np.full(N, complex(m), dtype=np.complex128)
    v = np.asarray(m, dtype=np.complex128)
    if v.ndim != 1 or (N is not None and v.shape[0] != N):
        raise DimensionError(f"symbol has shape {v.shape}, expected ({N},)")
    if not np.all(np.isfinite(v)):
        raise InputError("symbol contains a non-finite entry")
    return v


# -- diagnostics -----------------------------------------------------------


@dataclass(frozen=True)
class SymbolClass:
    window_inf: float
    window_sup: float
    sign: Literal["positive", "negative", "mixed", "complex"]
    semi_normalized_on_window: bool
    declared_tail: str = ""


def classify_symbol(m, N: int, imag_tol: float = 0.0) -> SymbolClass:
    """Window statistics of ``|m_k|`` for ``k = 1 .. N`` and a sign class.

    ``sign`` describes the real parts when every imaginary part vanishes
    (up to ``imag_tol``) and is ``"complex"`` otherwise.
    """
    declared = m.declared_tail if isinstance(m, ScalarSequence) else ""
    vals = as_symbol_at(m, N)
    mags = np.abs(vals)
    lo, hi = float(mags.min()), float(mags.max())
    if np.any(np.abs(vals.imag) > imag_tol):
        sign = "complex"
    elif np.all(vals.real > 0):
        sign = "positive"
    elif np.all(vals.real < 0):
        sign = "negative"
    else:
        sign = "mixed"
    return SymbolClass(lo, hi, sign, lo > 0 and math.isfinite(hi), declared)


@dataclass(frozen=True)
class HSPartialSum:
    partial: float
    tail_bound: float | None = None


def hs_partial_sum(spec, N: int) -> HSPartialSum:
    """Truncated Hilbert-Schmidt sum ``sum_{n,k<=N} |E_nk|^2``.

    For a diagonal ``k^-p`` rule with ``p > 1/2`` the remainder is bounded by
    the integral estimate ``N^(1-2p) / (2p - 1)``.
    """
    E = as_matrix_at(spec, N)
    partial = float(np.sum(E.real**2 + E.imag**2))
    tail = None
    if isinstance(spec, DiagonalSpec) and isinstance(spec.rule, InversePower) and spec.rule.p > 0.5:
        p = spec.rule.p
        tail = float(N) ** (1.0 - 2.0 * p) / (2.0 * p - 1.0)
    return HSPartialSum(partial, tail)


@dataclass(frozen=True)
class HSDiagnostics:
    partial: float
    tail_bound: float | None
    norm: float
    norm_squared: float
    max_column_sq_sum: float
    max_row_sq_sum: float


def hs_diagnostics(spec, N: int) -> HSDiagnostics:
    """Hilbert-Schmidt sum alongside ``|E_N|``, ``|E_N|^2`` and row/column square sums.

    Both the norm and its square are reported so either reading of the
    column-sum inequality can be checked against the numbers.
    """
    E = as_matrix_at(spec, N)
    hs = hs_partial_sum(spec, N)
    sq = E.real**2 + E.imag**2
    nrm = operator_norm(E)
    return HSDiagnostics(
        hs.partial,
        hs.tail_bound,
        nrm,
        nrm * nrm,
        float(sq.sum(axis=0).max()),
        float(sq.sum(axis=1).max()),
    )


def leading_block_consistent(spec: MatrixSpec, N: int) -> bool:
    """True when the ``N``-truncation is the leading block of the ``N+1`` one."""
    a = materialize_matrix(spec, N)
    b = materialize_matrix(spec, N + 1)
    return bool(np.array_equal(a, b[:N, :N]))


__all__ = [
    "TruncationConfig",
    "Constant",
    "Power",
    "InversePower",
    "Explicit",
    "PrefixThenRule",
    "ScalarRule",
    "ScalarSequence",
    "DenseSpec",
    "DiagonalSpec",
    "BandedSpec",
    "DensePrefixPlusDiagonalRule",
    "MatrixSpec",
    "ScaledBasis",
    "ExplicitVectors",
    "PrefixThenScaledBasis",
    "Transformed",
    "VectorSequence",
    "evaluate_rule",
    "materialize_matrix",
    "materialize_sequence",
    "classify_symbol",
    "hs_partial_sum",
    "hs_diagnostics",
    "SymbolClass",
    "HSPartialSum",
    "HSDiagnostics",
]
