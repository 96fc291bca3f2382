"""Exception types raised by fdsums."""


class FDError(ValueError):
    """Base class for all domain errors in this package."""


class NotCoprime(FDError):
    pass


class NotPairwiseCoprime(FDError):
    pass


class PeriodMismatch(FDError):
    pass


class NotZeroMean(FDError):
    pass


class NotPrime(FDError):
    pass


class BTooSmall(FDError):
    pass


class NonIntegerResult(FDError):
    """A closed form that must be integral produced a fraction (implementation bug)."""
