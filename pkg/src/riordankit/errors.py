"""Exception types shared across the package.

The command-line client maps these onto its exit-code contract, so new
failure modes should reuse one of the categories below rather than raising
bare ValueErrors.
"""


class ComputationError(ValueError):
    """Base class for mathematical failures: violated preconditions,
    degenerate inputs, results that cannot be represented exactly."""


class KindMismatchError(ComputationError):
    """Binary operation applied to series tagged with different kinds."""


class TruncationError(ComputationError):
    """A coefficient beyond the stored truncation order was requested."""


class PreconditionError(ComputationError):
    """An operation's mathematical precondition does not hold
    (zero constant divisor, non-invertible series, non-monic data, ...)."""


class InsufficientDataError(ComputationError):
    """Input sequences are too short for the requested computation.

    Carries the required length so callers can report exactly how much
    data is missing instead of silently zero-padding.
    """

    def __init__(self, message: str, needed: int | None = None, have: int | None = None):
        super().__init__(message)
        self.needed = needed
        self.have = have
