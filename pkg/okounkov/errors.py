"""
Exception hierarchy for the toolkit.

Every error carries the CLI exit code it maps to, the way HTTP errors carry a
status code: 2 for schema problems, 3 for failed mathematical preconditions,
4 for internal invariant breaches.
"""
from typing import Any, Dict, Optional


class OkounkovError(ValueError):
    """Base error. Library code raises, only the CLI turns it into an exit code."""

    exit_code: int = 1

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.context = context or {}

    def __repr__(self):
        return f"<{self.__class__.__name__}({self.message!r})>"


class SchemaError(OkounkovError):
    """Input does not parse against the schema of its mode."""
    exit_code = 2


class PreconditionError(OkounkovError):
    """A mathematical precondition of an operation does not hold."""
    exit_code = 3


class InvariantError(OkounkovError):
    """A computed object breaks one of its own postconditions."""
    exit_code = 4


# Geometry

class GeometryError(PreconditionError):
    pass


class DimensionMismatchError(GeometryError):
    pass


class UnboundedPolytopeError(GeometryError):
    pass


class EmptyPolytopeError(GeometryError):
    pass


class SingularMatrixError(GeometryError):
    pass


# Valuations / toric

class OrderMismatchError(PreconditionError):
    """Two valuation vectors tagged with different monomial orders were compared."""


class NonDelzantError(PreconditionError):
    pass


# Surfaces

class NotPseudoeffectiveError(PreconditionError):
    pass


class NotBigError(PreconditionError):
    pass


class IrrationalThresholdError(PreconditionError):
    """An exact polytope was requested up to an irrational ray threshold."""


class OutOfRangeError(PreconditionError):
    pass
