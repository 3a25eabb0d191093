"""Exception hierarchy shared by every sfield module."""


class SFieldError(Exception):
    """Base class for all library errors."""


class BackendMismatch(SFieldError, TypeError):
    """Operands live in different scalar rings (or different moduli)."""


class ConstructionError(SFieldError, ValueError):
    """A ring or finite instance was requested with invalid parameters."""


class NotAScalar(SFieldError, ValueError):
    """A scalar was required but the element has a nonzero index."""


class DivisionError(SFieldError, ArithmeticError):
    """Base for the ways a division can fail to produce a quotient."""

    reason = "division failed"


class Indeterminate(DivisionError):
    reason = "Indeterminate"


class NoSolution(DivisionError):
    reason = "NoSolution"


class NotInvertible(DivisionError):
    reason = "NotInvertible"


class NotAScalarDivisor(DivisionError):
    reason = "NotAScalarDivisor"


class WitnessNotFound(SFieldError):
    """A negative law expected to have a counterexample had none.

    The partially built report is attached so callers can still render it.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
