"""Exception hierarchy shared by all modules."""


class EFrameError(Exception):
    """Base class for every error raised by :mod:`eframes`."""


class InputError(EFrameError, ValueError):
    """Malformed user input: bad shapes, bad spec files, unknown names."""


class DimensionError(InputError):
    """Operand dimensions do not agree."""


class NonFiniteError(InputError):
    """A NaN or infinity reached a numerical routine."""


class ComputationError(EFrameError):
    """A well-formed computation could not be carried out."""


class NotHermitianError(ComputationError):
    pass


class ConvergenceError(ComputationError):
    pass


class SingularMatrixError(ComputationError):
    """Pivoted elimination met a pivot below the singularity threshold."""


class PreconditionError(ComputationError):
    """A theorem's hypotheses fail at the current truncation."""
