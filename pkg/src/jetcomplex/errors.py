"""Exception types raised across the package."""


class DomainError(ValueError):
    """Bad grid shape, out-of-grid cell, or otherwise invalid input."""


class CapacityError(RuntimeError):
    """Requested computation exceeds a hard size guard."""


class ClassificationError(ValueError):
    """A vertex set does not have the structure of a facet."""

    def __init__(self, message, reason="structure"):
        super().__init__(message)
        self.reason = reason


class PreconditionError(ValueError):
    """Caller violated an operation's ordering precondition."""


class InternalConsistencyError(RuntimeError):
    """A constructed object failed its own postconditions (a bug)."""
