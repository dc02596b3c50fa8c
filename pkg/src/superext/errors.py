"""Exception types shared across the package."""

from __future__ import annotations


class SizeGuardError(ValueError):
    """An input exceeds a documented size ceiling."""


class SpecParseError(ValueError):
    """A malformed algebra spec string; ``position`` is the offending index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ValidationError(ValueError):
    """A composition table failed validation.

    ``witness`` is the offending triple (a, b, c) for associativity
    failures, or None for structural problems.
    """

    def __init__(self, message: str, witness: tuple[int, int, int] | None = None):
        super().__init__(message)
        self.witness = witness


class NotMonotoneError(ValueError):
    """A membership oracle accepted a set but rejected one of its supersets.

    ``witness`` is the (subset, superset) pair that revealed it.
    """

    def __init__(self, message: str, witness: tuple[int, int] | None = None):
        super().__init__(message)
        self.witness = witness


class EmptyFamilyError(ValueError):
    """The transversal of the empty family is undefined."""


class CertificateShapeError(ValueError):
    """A certificate's pieces do not fit the required shape."""


class CommutingHypothesisError(ValueError):
    """The elementwise commuting hypothesis fails; ``witness`` is (y, z)."""

    def __init__(self, message: str, witness: tuple[int, int]):
        super().__init__(message)
        self.witness = witness
