"""
Domain errors raised by the tower-tableau modules.

Each error carries a short machine code (used by the command line envelope)
and a human message. Slide termination and missing flight paths are *values*
(see models.tower), never exceptions.
"""
from __future__ import annotations


class TowerError(Exception):
    code = "DOMAIN_ERROR"

    def __init__(self, message: str, details: dict | None = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}


class InvalidWordError(TowerError):
    code = "INVALID_WORD"


class NotReducedError(TowerError):
    code = "NOT_REDUCED"


class NotStandardError(TowerError):
    code = "NOT_STANDARD"


class NotSemistandardError(TowerError):
    code = "NOT_SEMISTANDARD"


class ShapeMismatchError(TowerError):
    code = "SHAPE_MISMATCH"


class CellNotFoundError(TowerError):
    code = "CELL_NOT_FOUND"


class NotACornerError(TowerError):
    code = "NOT_A_CORNER"


class NotInjectiveError(TowerError):
    code = "NOT_INJECTIVE"


class EmptyTableauError(TowerError):
    code = "EMPTY"


class CoefficientOverflowError(TowerError):
    code = "OVERFLOW"


class AmbiguousCornerError(TowerError):
    """Two corners with the maximal label share the minimal flight number."""

    code = "AMBIGUOUS_CORNER"
