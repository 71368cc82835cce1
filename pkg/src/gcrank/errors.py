"""Exception hierarchy shared by all gcrank modules."""


class GcrankError(Exception):
    """Base class for all errors raised by this package."""


# -- permutation / group errors -------------------------------------------

class InvalidDegree(GcrankError):
    pass


class DegreeMismatch(GcrankError):
    pass


class GroupTooLarge(GcrankError):
    def __init__(self, cap):
        super().__init__(f"group closure exceeded cap of {cap} elements")
        self.cap = cap


class UnknownElement(GcrankError):
    pass


# -- data file errors ------------------------------------------------------

class ParseError(GcrankError):
    pass


class UnknownLabel(ParseError):
    pass


class DuplicateLabel(ParseError):
    pass


class InvalidRational(ParseError):
    pass


class DualityViolation(GcrankError):
    pass


# -- symmetry errors -------------------------------------------------------

class NotAnAutomorphism(GcrankError):
    def __init__(self, name, report):
        msgs = "; ".join(v.message for v in report.violations)
        super().__init__(f"generator {name!r} is not a fusion-ring automorphism: {msgs}")
        self.name = name
        self.report = report


class InconsistencyError(GcrankError):
    """Two independently computed quantities that must agree did not.

    Signals a bug in this package, never bad input data.
    """


# -- wreath / numeric range errors ----------------------------------------

class OutOfRange(GcrankError):
    pass


class NotPrime(GcrankError):
    pass


class TooLarge(GcrankError):
    pass
