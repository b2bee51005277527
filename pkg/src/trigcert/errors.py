"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested operation."""


class CapacityError(OverflowError):
    """A computation would exceed the configured exponent or precision bounds."""
