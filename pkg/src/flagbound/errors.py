"""Exception hierarchy.

Every error the package raises on purpose derives from FlagboundError, so
callers can catch one type.  The CLI maps these onto exit codes: validation
problems (including unmet hypotheses) exit 1, violated identities or
envelopes exit 2, undecided exact comparisons exit 3.
"""


class FlagboundError(Exception):
    """Base class for all package errors."""


class ValidationError(FlagboundError, ValueError):
    """An argument or data structure violates a documented precondition."""


class InconsistencyError(ValidationError):
    """Input data is internally contradictory.

    Raised when a delta sequence claims more sections than the point
    deficiencies allow, i.e. the sectional genus would be negative.
    """


class HypothesisFailureError(ValidationError):
    """A degree or separation hypothesis required by an operation fails."""


class IdentityViolationError(FlagboundError):
    """Two independently computed routes disagree.

    This must never fire on valid inputs; if it does, the build itself is
    defective and the offending witness is in the message.
    """


class UndecidedComparisonError(FlagboundError):
    """An exact comparison could not be certified either way.

    Only the enclosure fallback can produce this, and only when the digit
    budget rules out exact powering and the enclosure straddles the value.
    """
