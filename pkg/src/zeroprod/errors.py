"""Exception types shared across the package."""


class ZeroProdError(Exception):
    """Base class for all errors raised by this package."""


class NotAPartition(ZeroProdError):
    """Multiplicities do not add up to the given dimension vector."""


class NotAPattern(ZeroProdError):
    """Triangular array is not the rank pattern of any partition."""


class InfeasibleVector(ZeroProdError):
    """Candidate vector violates its non-negativity or sum constraint."""


class NotAMinimumPosition(ZeroProdError):
    """Placeholder position does not carry the minimal dimension."""


class NotIncreasing(ZeroProdError):
    """Dimension vector required to be weakly increasing is not."""


class MalformedDiagram(ZeroProdError):
    """A dot is attached to more than one segment on the same side."""


class SearchSpaceTooLarge(ZeroProdError):
    """Exhaustive enumeration exceeded the configured cap."""


class IntegralityViolation(ZeroProdError):
    """A closed-form value that must be an integer is not."""


class UsageError(ZeroProdError):
    """Bad command line arguments."""
