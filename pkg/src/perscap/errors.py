"""Exception hierarchy shared by every perscap module."""


class PerscapError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZero(PerscapError, ZeroDivisionError):
    pass


class ParseError(PerscapError, ValueError):
    pass


class InvalidComplex(PerscapError, ValueError):
    def __init__(self, report):
        self.report = report
        super().__init__(str(report))


class InvalidWindow(PerscapError, ValueError):
    pass


class NotACycle(PerscapError, ValueError):
    pass


class TrivialClass(PerscapError, ValueError):
    pass


class DeadAtZero(PerscapError):
    """The distinguished class is already zero in the surrogate module at 0."""


class EpsilonCollision(PerscapError, ValueError):
    pass


class KillClassSurvives(PerscapError, ValueError):
    """A kill-class is still alive just after 0, so the quotient maps are undefined."""


class AmbiguousClass(PerscapError, ValueError):
    pass


class CapTooSmall(PerscapError, ValueError):
    pass


class InvalidAction(PerscapError, ValueError):
    def __init__(self, report):
        self.report = report
        super().__init__(str(report))


class MissingValue(PerscapError, KeyError):
    pass


class EmptyGrid(PerscapError, ValueError):
    pass


class BadParameter(PerscapError, ValueError):
    pass


class Unbounded(PerscapError, ValueError):
    pass
