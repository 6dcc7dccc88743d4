"""Exception hierarchy with stable machine-readable codes.

The CLI and the HTTP service both translate these into their error
surfaces (exit codes, 400 bodies), keyed by the ``code`` attribute.
"""
from __future__ import annotations


class LabError(Exception):
    """Base class for domain errors; ``code`` is the wire-format identifier."""

    code = "ERROR"


class ParseError(LabError):
    """Malformed document, non-diagonal pair, or undersized polygon."""

    code = "PARSE_ERROR"


class NotCrossingError(LabError):
    """Raised when an operation needs a crossing pair of diagonals."""

    code = "NOT_CROSSING"


class PreconditionError(LabError):
    """A factoring question was asked about a morphism space that is zero."""

    code = "PRECONDITION_VIOLATION"


class SizeLimitError(LabError):
    """An enumeration was requested beyond the configured polygon bound."""

    code = "SIZE_LIMIT"


class DiagonalRoleError(LabError):
    """A diagonal lacks the role an operation requires; carries a witness.

    ``witness`` is a member of the diagram crossing the offending diagonal,
    or None when the diagonal is not a member at all.
    """

    def __init__(self, message: str, witness: tuple[int, int] | None = None):
        super().__init__(message)
        self.witness = witness


class NotExtProjectiveError(DiagonalRoleError):
    code = "NOT_EXT_PROJECTIVE"


class NotExtInjectiveError(DiagonalRoleError):
    code = "NOT_EXT_INJECTIVE"
