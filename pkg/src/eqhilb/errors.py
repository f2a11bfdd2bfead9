"""Exception types shared across the package."""


class EqhilbError(Exception):
    """Base class for all package-specific errors."""


class PreconditionError(EqhilbError, ValueError):
    """An operation was called outside its stated hypotheses."""


class UnbalancedPartitionError(PreconditionError):
    """A balanced partition was required but the input is not balanced."""


class EnumerationLimitError(EqhilbError, RuntimeError):
    """An enumeration would exceed the configured box ceiling."""


class InvariantViolationError(EqhilbError, RuntimeError):
    """An internal consistency guarantee failed; never silently repaired."""


class NotNCoreError(PreconditionError):
    """A partition that must be an n-core is not one."""


class AmbiguousQuotientError(EqhilbError, ValueError):
    """A core/quotient pair without alignment data has several preimages."""


class InsufficientSamplesError(PreconditionError):
    """Too few sample points for the requested interpolation."""
