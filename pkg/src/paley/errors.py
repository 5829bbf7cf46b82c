"""Exception hierarchy shared by every module in the package."""


class PaleyError(Exception):
    """Base class for all errors raised by this package."""


class NotPrime(PaleyError, ValueError):
    pass


class DegreeZero(PaleyError, ValueError):
    pass


class Overflow(PaleyError, ValueError):
    """Field order above the configured cap (``PALEY_MAX_Q``)."""


class TableTooLarge(PaleyError, MemoryError):
    pass


class DivisionByZero(PaleyError, ZeroDivisionError):
    pass


class PaleyIneligible(PaleyError, ValueError):
    """q is not congruent to 1 mod 4, so the Paley graph is undefined."""


class IneligibleOrder(PaleyIneligible):
    """Raised by the command line for an order that is not an eligible prime power."""


class InvalidRing(PaleyError, ValueError):
    pass


class NotDistinct(PaleyError, ValueError):
    pass


class NonIntegral(PaleyError, ArithmeticError):
    """An exact division came out fractional. Always an internal bug."""


class InvariantViolation(PaleyError, AssertionError):
    """An internally cross-checked identity failed. Always an internal bug."""


class NotSquareOrder(PaleyError, ValueError):
    pass


class NotOneModFour(PaleyError, ValueError):
    pass


class NoDecomposition(PaleyError, ArithmeticError):
    pass


class NotAnEdge(PaleyError, ValueError):
    pass


class DomainMismatch(PaleyError, ValueError):
    pass


class NotFound(PaleyError, LookupError):
    pass


class NotExtendable(PaleyError, ArithmeticError):
    pass


class PreconditionViolated(PaleyError, ValueError):
    pass
