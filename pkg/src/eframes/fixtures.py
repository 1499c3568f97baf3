"""The two worked examples, as declarative specs.

Example 1: an upper bidiagonal-plus-diagonal ``E`` that maps a
non-orthogonal ``Psi`` onto the standard basis, with the symbol
``{c, c, c, 1, 1/2, 1/3, ...}``.

Example 2: ``Psi = {k e_k}``, ``Phi = {k^2 e_k}`` (neither Bessel) and
``E = diag(1/n^2)``.
"""
import numpy as np

from .model import (
    Constant,
    DensePrefixPlusDiagonalRule,
    DiagonalSpec,
    InversePower,
    Power,
    PrefixThenRule,
    PrefixThenScaledBasis,
    ScaledBasis,
    ScalarSequence,
)

EXAMPLE1_E_PREFIX = np.array([[1, 1, 0], [0, 1, 1], [0, 0, 3]], dtype=np.complex128)

# Leading 4x4 block of E^-1 as printed alongside the example.
EXAMPLE1_E_INV_4 = np.array(
    [
        [1, -1, 1 / 3, 0],
        [0, 1, -1 / 3, 0],
        [0, 0, 1 / 3, 0],
        [0, 0, 0, 1 / 4],
    ],
    dtype=np.complex128,
)


def example1_matrix() -> DensePrefixPlusDiagonalRule:
    """``E`` with ``E_12 = E_23 = 1`` and diagonal ``1, 1, 3, 4, 5, ...``."""
    return DensePrefixPlusDiagonalRule(EXAMPLE1_E_PREFIX, Power(1.0))


def example1_sequence() -> PrefixThenScaledBasis:
    """``{e1 - e2 + e3/3, e2 - e3/3, e3/3, e4/4, e5/5, ...}``."""
    prefix = (
        np.array([1, -1, 1 / 3], dtype=np.complex128),
        np.array([0, 1, -1 / 3], dtype=np.complex128),
        np.array([0, 0, 1 / 3], dtype=np.complex128),
    )
    return PrefixThenScaledBasis(prefix, InversePower(1.0), 0)


def example1_symbol(c: float = 2.0) -> ScalarSequence:
    """``{c, c, c, 1, 1/2, 1/3, ...}``."""
    return ScalarSequence(PrefixThenRule((c, c, c), InversePower(1.0), 3))


def example2_matrix() -> DiagonalSpec:
    return DiagonalSpec(InversePower(2.0))


def example2_psi() -> ScaledBasis:
    return ScaledBasis(Power(1.0))


def example2_phi() -> ScaledBasis:
    return ScaledBasis(Power(2.0))


def example2_symbol() -> ScalarSequence:
    return ScalarSequence(Constant(1.0))
