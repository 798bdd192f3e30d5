"""Exception hierarchy shared by all engine modules."""


class WeylCohomError(Exception):
    """Base class for engine errors."""


class InvalidRank(WeylCohomError, ValueError):
    pass


class InvalidPrime(WeylCohomError, ValueError):
    pass


class GroupTooLarge(WeylCohomError):
    pass


class OracleTooLarge(WeylCohomError):
    pass


class AmbiguousDecomposition(WeylCohomError):
    """A weight admits more than one decomposition p*mu + w.0."""


class NegativeDimension(WeylCohomError):
    """An alternating sum that must be a dimension came out negative."""


class ShortRootInG2(WeylCohomError, ValueError):
    pass


class NotCovered(WeylCohomError):
    """No sharp-bound theorem applies to the requested parameters."""


class CacheMismatch(WeylCohomError):
    """A persisted partition table does not match the current system or recurrence."""
