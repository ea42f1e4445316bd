"""Exception types raised across the package."""


class InvalidInput(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class ResourceLimit(ValueError):
    """A requested enumeration exceeds the configured size ceiling."""


class NotAMember(KeyError):
    pass


class NotRealizable(ValueError):
    """A subspace is not of the form <B>_1 for any B in S_D."""


class ConsistencyError(AssertionError):
    """A structural theorem failed to hold on computed data."""
