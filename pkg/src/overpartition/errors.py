"""Exception types shared across the package."""


class OverpartitionError(Exception):
    """Base class for package errors."""


class TableTooShort(OverpartitionError):
    """A table does not cover an index that a formula needs."""

    def __init__(self, needed: int, max_n: int):
        super().__init__(f"table covers 0..{max_n}, need index {needed}; extend it first")
        self.needed = needed
        self.max_n = max_n


class DomainError(OverpartitionError, ValueError):
    """Argument outside the domain of an operation."""


class FormatError(OverpartitionError):
    """A cache file violates the on-disk format or its invariants."""
