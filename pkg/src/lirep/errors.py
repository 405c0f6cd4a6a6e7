"""Exception types shared across the library."""


class LirepError(Exception):
    """Base class for all library errors."""


class DomainError(LirepError, ValueError):
    """An argument lies outside the validity region of the requested operation."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole."""


class ExclusionError(DomainError):
    """A representation is singular at this parameter (excluded point)."""


class ResourceLimitError(LirepError, RuntimeError):
    """A configured work cap (series length, table size) would be exceeded."""


class UnsupportedCombinationError(LirepError, ValueError):
    """No implemented route covers this (order, argument, representation) triple."""
