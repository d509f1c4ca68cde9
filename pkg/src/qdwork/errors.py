"""Exception hierarchy shared by all modules."""


class QDworkError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZero(QDworkError, ZeroDivisionError):
    """Division by the zero polynomial or rational function."""


class NonExactDivision(QDworkError, ArithmeticError):
    """Polynomial division left a nonzero remainder where exactness was required."""


class InvalidParameter(QDworkError, ValueError):
    """An argument violates a documented precondition."""


class BothZero(InvalidParameter):
    """gcd(0, 0) is undefined."""


class InvalidModulus(InvalidParameter):
    """Congruence modulus must be a nonconstant polynomial."""


class SizeGuardExceeded(InvalidParameter):
    """Requested instance exceeds the configured size guard."""


class ZeroValuation(QDworkError, ValueError):
    """The p-adic valuation of 0 is +infinity and is signalled, not returned."""


class NotPIntegral(QDworkError, ValueError):
    """The rational argument has p in its denominator."""


class HypothesisViolation(InvalidParameter):
    """Arguments lie outside the hypotheses of the congruence being checked."""
