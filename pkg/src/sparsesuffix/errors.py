"""Exception types shared across the package."""


class SparseSuffixError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(SparseSuffixError, ValueError):
    """An input violates a documented precondition."""


class InternalConsistencyError(SparseSuffixError):
    """A pipeline structure is malformed (dangling ids, broken invariants)."""
