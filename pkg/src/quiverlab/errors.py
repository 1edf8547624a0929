"""Shared exception types.

Every domain error carries a machine-readable ``code`` so the HTTP layer
and the CLI can report failures uniformly.
"""

from __future__ import annotations

__all__ = [
    "QuiverError",
    "InvalidQuiverError",
    "QuiverFormatError",
    "CapExceededError",
    "SizeLimitError",
    "HypothesisError",
    "UndecidedError",
]


class QuiverError(Exception):
    """Base class for all domain errors."""

    code = "quiver_error"

    def __init__(self, message, code=None):
        super().__init__(message)
        if code is not None:
            self.code = code


class InvalidQuiverError(QuiverError):
    """Raised when a quiver cannot be constructed (loop, conflicting edge, ...)."""

    code = "invalid_quiver"


class QuiverFormatError(QuiverError):
    """Parse failure in the text or JSON quiver format.

    ``line`` is the 1-based input line where the problem was found, when known.
    """

    code = "parse_error"

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapExceededError(QuiverError):
    """An enumeration or scan hit a configured resource cap."""

    code = "caps_exceeded"


class SizeLimitError(QuiverError):
    """Input exceeds a hard size bound of an algorithm."""

    code = "size_limit"


class HypothesisError(QuiverError):
    """Input does not satisfy the hypotheses a check requires."""

    code = "hypothesis_violation"


class UndecidedError(QuiverError):
    """A verdict could not be established within the configured caps."""

    code = "undecided"
