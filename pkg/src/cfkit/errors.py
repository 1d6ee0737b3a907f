"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input violates a documented precondition."""


class CapExceeded(DomainError):
    """A requested enumeration is larger than the configured cap."""
