"""Exception types shared across the package."""


class QsymkError(Exception):
    """Base class for all package-specific errors."""


class DegreeLimitError(QsymkError):
    """Raised when a requested degree exceeds the configured maximum."""


class InvalidSubsetError(QsymkError, ValueError):
    """Raised when a descent set contains positions outside [n-1]."""


class DegreeMismatchError(QsymkError, ValueError):
    """Raised when vectors or elements of different degrees are combined."""


class DisjointnessError(QsymkError, ValueError):
    """Raised when two permutations share a letter but must be disjoint."""


class BasisTagError(QsymkError, ValueError):
    """Raised when an operation receives an element in the wrong basis."""


class RelationUnsoundError(QsymkError, ValueError):
    """Raised when a relation edge joins compositions that are not
    equivalent under the statistic being checked."""
