"""
Exceptions raised by the algebra layer.

Every error is a `RenormalisationError`, so callers at the edges (views, management commands)
can translate the whole family at once.
"""


class RenormalisationError(Exception):
    """Base class for every error raised by the package."""


class ScalingError(RenormalisationError, ValueError):
    """Unknown type label, dimension mismatch or a degree with the wrong sign."""


class TreeError(RenormalisationError, ValueError):
    """Malformed decorated tree (non-terminal noise, decorations where none are allowed)."""


class ParseError(RenormalisationError, ValueError):
    """Invalid tree expression."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class DomainError(RenormalisationError, ValueError):
    """An operation was called outside of its domain."""


class InvariantViolation(RenormalisationError, RuntimeError):
    """An internal consistency check failed."""
