"""Exception types shared across the package."""


class FsdError(Exception):
    """Base class for all package errors."""


class DomainError(FsdError, ValueError):
    """An argument lies outside the domain of an operation."""


class DimensionError(FsdError, ValueError):
    """An element does not belong to the group it is used with."""


class InvariantError(FsdError, ValueError):
    """A value violates a structural invariant (e.g. not a subgroup)."""


class CapacityError(FsdError):
    """A configured size bound was exceeded."""


class InternalConsistencyError(FsdError, AssertionError):
    """Two independent computations disagreed. Indicates a bug."""
