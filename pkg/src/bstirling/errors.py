"""Exception hierarchy shared by every module of the package."""


class BStirlingError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class NotInClassB(BStirlingError, ValueError):
    """A series was required to have constant term 1."""


class NonzeroConstantTerm(BStirlingError, ValueError):
    """A series was required to have constant term 0."""


class OrderTooSmall(BStirlingError, ValueError):
    pass


class KindMismatch(BStirlingError, ValueError):
    pass


class SizeMismatch(BStirlingError, ValueError):
    pass


class ZeroLambda(BStirlingError, ValueError):
    pass


class BadIndices(BStirlingError, ValueError):
    pass


class BadDistribution(BStirlingError, ValueError):
    pass


class TooLarge(BStirlingError, ValueError):
    """An enumeration oracle was asked for more objects than its guard allows."""


class OrderCapExceeded(BStirlingError, ValueError):
    pass


class SeriesSpecError(BStirlingError, ValueError):
    """Base class for problems with a series specification string (CLI exit code 2)."""


class SeriesSyntaxError(SeriesSpecError):
    """Malformed spec string. ``offset`` is the 1-based byte position of the fault."""

    def __init__(self, message, offset):
        super().__init__(f"syntax error at offset {offset}: {message}")
        self.offset = offset


class UnknownName(SeriesSpecError):
    pass


class BadArity(SeriesSpecError):
    pass


class BadParameter(SeriesSpecError):
    pass
