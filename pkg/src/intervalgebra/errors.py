"""Exception hierarchy shared by every module."""


class IntervalAlgebraError(Exception):
    """Base class for domain errors raised by this package."""


class MalformedInterval(IntervalAlgebraError, ValueError):
    pass


class NotInvertible(IntervalAlgebraError, ZeroDivisionError):
    pass


class BadShape(IntervalAlgebraError, ValueError):
    """An A4 element is not one of the canonical image shapes."""


# --- division -------------------------------------------------------------

class DivisionError(IntervalAlgebraError):
    pass


class DivisorNotPositive(DivisionError):
    pass


class DividendNotPositive(DivisionError):
    pass


class ConditionFailed(DivisionError):
    """The ratio hypothesis of the requested division case does not hold."""


class RatioConditionFailed(ConditionFailed):
    pass


class CenteredDivisor(DivisionError):
    pass


class PointDivisorDegenerate(DivisionError):
    pass


class DivisionByZeroPoint(DivisionError, ZeroDivisionError):
    pass


class Unsupported(DivisionError):
    """No division case applies to this (dividend, divisor) pair."""


# --- analysis -------------------------------------------------------------

class ProbeFailure(IntervalAlgebraError):
    pass


# --- linear programming ---------------------------------------------------

class LpError(IntervalAlgebraError):
    pass


class InconsistentDimensions(LpError, ValueError):
    pass


class NegativeRhs(LpError, ValueError):
    pass


class PositivityLost(LpError):
    pass


class LpFormatError(LpError, ValueError):
    """Problem file is malformed or outside the supported (linear, max) class."""


# --- text -----------------------------------------------------------------

class ParseError(IntervalAlgebraError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position
