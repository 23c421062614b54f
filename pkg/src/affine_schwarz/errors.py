"""Exception types shared across the package."""


class SchwarzError(Exception):
    """Base class for every error raised by this package."""


class NonUnitSeries(SchwarzError, ZeroDivisionError):
    pass


class RebaseOverflow(SchwarzError):
    pass


class NonIntegerExponent(SchwarzError, ValueError):
    pass


class BadLowerParameter(SchwarzError, ZeroDivisionError):
    pass


class DegenerateKummerPair(SchwarzError, ValueError):
    pass


class DivisionMidSum(SchwarzError, ZeroDivisionError):
    pass


class NonTerminating(SchwarzError, ValueError):
    pass


class ZeroExponent(SchwarzError, ValueError):
    pass


class Inconsistent(SchwarzError):
    """The fitting system has no solution: the target or row data is wrong."""


class Underdetermined(SchwarzError):
    """The fitting system has more than one solution: raise the order."""


class InternalInconsistency(SchwarzError):
    """Two independent computation paths disagreed."""


class DegreeMismatch(SchwarzError):
    def __init__(self, message, coefficients=None):
        super().__init__(message)
        self.coefficients = coefficients


class ConfigError(SchwarzError, ValueError):
    pass
