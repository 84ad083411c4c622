"""Jacobian arithmetic for hyperelliptic curves y^2 = f(x), deg f = 2g+2, via balanced divisors."""

from .curve import CurveModel, new_curve, normalize, random_curve
from .divisor import BalancedDivisor, SemiReducedDivisor, identity, random_element, validate
from .ff import FieldCtx, OpCount

__all__ = [
    "BalancedDivisor",
    "CurveModel",
    "FieldCtx",
    "OpCount",
    "SemiReducedDivisor",
    "identity",
    "new_curve",
    "normalize",
    "random_curve",
    "random_element",
    "validate",
]
