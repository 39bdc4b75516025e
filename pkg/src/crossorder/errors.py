"""Exception types shared across the package."""


class CrossOrderError(Exception):
    """Base class for all package errors."""


class StructureError(CrossOrderError):
    """Malformed input data: shape mismatches, broken tables, invalid entries."""


class DomainError(CrossOrderError):
    """A mathematically well-formed input outside an operation's domain
    (e.g. an infinite-index embedding passed to an index computation)."""


class HypothesisError(CrossOrderError):
    """A theorem-backed operation was invoked outside its hypotheses."""


class RenormalizationError(CrossOrderError):
    """A coboundary twist could not be shifted back into nonnegative values."""


class ConsistencyError(CrossOrderError):
    """An internal invariant failed on data that passed validation.

    Raised only for conditions that indicate a bug (either here or in a
    caller that bypassed validation), never for ordinary bad input.
    """
