"""Exception hierarchy shared by every module of the package."""


class TorusKacError(Exception):
    """Base class for all errors raised by torus_kac."""


class InvalidInput(TorusKacError, ValueError):
    pass


class NonIntegerCoefficients(TorusKacError, ArithmeticError):
    pass


class NotAPolynomial(TorusKacError, ArithmeticError):
    pass


class DivisionByZero(TorusKacError, ZeroDivisionError):
    pass


class Disconnected(TorusKacError, ValueError):
    pass


class HypothesisViolated(TorusKacError, ValueError):
    pass


class ZeroVector(TorusKacError, ValueError):
    pass


class InternalNonTermination(TorusKacError, RuntimeError):
    pass


class RankDeficient(TorusKacError, ValueError):
    pass


class NotEchelon(TorusKacError, ValueError):
    pass


class SizeMismatch(TorusKacError, ValueError):
    pass


class NotAPartition(TorusKacError, ValueError):
    pass


class NonPolynomialCoefficient(TorusKacError, ArithmeticError):
    pass


class TooLarge(TorusKacError, RuntimeError):
    """Raised when an enumeration would exceed its configured budget."""


class BadPrime(TorusKacError, ValueError):
    pass
