"""Exception types raised across the package."""


class HyperJacError(ValueError):
    """Base class for all validation and arithmetic errors in hyperjac."""


class NotPrime(HyperJacError):
    pass


class EvenCharacteristic(HyperJacError):
    pass


class ZeroInverse(HyperJacError, ZeroDivisionError):
    def __init__(self, msg="cannot invert zero", index=None):
        super().__init__(msg)
        self.index = index


class DivisionByZeroPoly(HyperJacError, ZeroDivisionError):
    pass


class InexactDivision(HyperJacError):
    pass


class ZeroPolynomial(HyperJacError):
    pass


class NotCoprime(HyperJacError):
    def __init__(self, msg, gcd=None):
        super().__init__(msg)
        self.gcd = gcd


class NotMonic(HyperJacError):
    pass


class NotSeparable(HyperJacError):
    pass


class BadDegree(HyperJacError):
    pass


class PointNotOnCurve(HyperJacError):
    pass


class DuplicateX(HyperJacError):
    pass


class ConjugatePair(HyperJacError):
    pass


class InvalidDivisor(HyperJacError):
    pass


class PreconditionViolated(HyperJacError):
    pass


class BudgetExceeded(HyperJacError):
    pass


class NotFound(HyperJacError):
    pass
