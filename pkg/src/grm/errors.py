"""Exception hierarchy shared by every module of the package."""


class GrmError(Exception):
    """Base class for all package errors."""


class UnsupportedCardinality(GrmError, ValueError):
    pass


class DivisionByZero(GrmError, ZeroDivisionError):
    pass


class PolySyntaxError(GrmError, ValueError):
    """Malformed polynomial text. ``pos`` is the 0-based offset of the problem."""

    def __init__(self, message, pos=None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


class VariableOutOfRange(GrmError, ValueError):
    pass


class CoefficientOutOfRange(GrmError, ValueError):
    pass


class BudgetExceeded(GrmError, RuntimeError):
    pass


class ZeroPolynomial(GrmError, ValueError):
    pass


class LengthMismatch(GrmError, ValueError):
    pass


class IterationCapExceeded(GrmError, RuntimeError):
    pass


class InvalidExponent(GrmError, ValueError):
    pass


class DegreeOutOfRange(GrmError, ValueError):
    pass


class RegimeNotCovered(GrmError, ValueError):
    pass


class InvalidType(GrmError, ValueError):
    pass


class ExchangeNotApplicable(GrmError, ValueError):
    pass


class NotInV(GrmError, ValueError):
    """An exponent sequence outside the admissible set; ``constraint`` names the rule broken."""

    def __init__(self, message, constraint):
        self.constraint = constraint
        super().__init__(message)


class ParameterOutOfRange(GrmError, ValueError):
    pass


class StructureMismatch(GrmError, AssertionError):
    pass
