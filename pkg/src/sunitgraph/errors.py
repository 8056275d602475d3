"""Exception hierarchy shared by every module."""


class SUnitGraphError(Exception):
    """Base class for all domain errors raised by the package."""


class DenominatorNotSOnly(SUnitGraphError, ValueError):
    pass


class PrimeSetMismatch(SUnitGraphError, ValueError):
    pass


class ModuliNotCoprime(SUnitGraphError, ValueError):
    pass


class InvalidPrimeSet(SUnitGraphError, ValueError):
    pass


class InvalidOrder(SUnitGraphError, ValueError):
    pass


class DuplicatePoints(SUnitGraphError, ValueError):
    pass


class EmptySet(SUnitGraphError, ValueError):
    pass


class SearchBudgetExceeded(SUnitGraphError, RuntimeError):
    """A bounded search ran out of candidates.

    This never means "no solution exists"; it means the configured bound was
    too small to find one.
    """


class NotAForest(SUnitGraphError, ValueError):
    pass


class NotConnected(SUnitGraphError, ValueError):
    pass


class NoCycle(SUnitGraphError, ValueError):
    pass


class PTooSmall(SUnitGraphError, ValueError):
    pass


class DimensionTooLarge(SUnitGraphError, ValueError):
    pass


class LabelNotPowerOfP(SUnitGraphError, ValueError):
    pass


class CoefficientOverflow(SUnitGraphError, ValueError):
    pass


class VerificationFailed(SUnitGraphError, RuntimeError):
    """A constructed representation did not induce the expected graph."""


class ArityUnsupported(SUnitGraphError, ValueError):
    pass


class LabelsDoNotSumToZero(SUnitGraphError, ValueError):
    pass


class TooLong(SUnitGraphError, ValueError):
    pass


class UnknownBound(SUnitGraphError, KeyError):
    pass


class BadParameters(SUnitGraphError, ValueError):
    pass
