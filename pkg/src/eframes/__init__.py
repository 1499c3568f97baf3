"""Frames, E-transforms and (E1, E2)-multipliers at finite truncation."""
from types import ModuleType as _ModuleType

from ._backend import BACKEND, available_backends
from .errors import (
    ComputationError,
    ConvergenceError,
    DimensionError,
    EFrameError,
    InputError,
    NonFiniteError,
    NotHermitianError,
    PreconditionError,
    SingularMatrixError,
)
from .etransform import (
    e_analysis,
    e_frame_bounds,
    e_frame_operator,
    e_synthesis,
    e_transform,
    verify_analysis_factorization,
    verify_synthesis_factorization,
)
from .frames import (
    FrameBounds,
    analysis,
    canonical_dual,
    frame_bounds,
    frame_operator,
    inner,
    is_bessel,
    is_frame,
    synthesis,
)
from .model import (
    BandedSpec,
    Constant,
    DensePrefixPlusDiagonalRule,
    DenseSpec,
    DiagonalSpec,
    Explicit,
    ExplicitVectors,
    InversePower,
    Power,
    PrefixThenRule,
    PrefixThenScaledBasis,
    ScalarSequence,
    ScaledBasis,
    Transformed,
    TruncationConfig,
    classify_symbol,
    hs_partial_sum,
    materialize_matrix,
    materialize_sequence,
)
from .multipliers import (
    MultiplierSpec,
    multiplier_apply,
    multiplier_inverse,
    multiplier_matrix,
    multiplier_norm_bound,
)
from .numerics import hermitian_eigh, invert, operator_norm
from .verify import VerificationReport, list_suites, run_suite

__version__ = "0.1.0"

__all__ = sorted(n for n, v in globals().items() if not n.startswith("_") and not isinstance(v, _ModuleType))
