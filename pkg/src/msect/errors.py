"""Exception types shared across the package."""

from __future__ import annotations


class MsectError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZeroPoly(MsectError, ZeroDivisionError):
    """Polynomial division by the zero polynomial."""


class DivisionByZeroRatFun(MsectError, ZeroDivisionError):
    """Rational-function division by zero."""


class NonSeriesResult(MsectError):
    """A denominator vanishes at q = 0, so the value is not a power series."""


class InternalInvariant(MsectError):
    """An internal exactness check failed; this signals an implementation bug."""


class SectionVanishes(MsectError):
    """The requested section of the multiplier is identically zero, so the
    original series cannot be recovered from that section."""


class NonUnitDenominator(MsectError):
    """The denominator's constant term is not invertible modulo m, so the
    reduction mod m is ill-posed in this representation."""


class NonIntegralCoefficient(MsectError):
    """A coefficient, in lowest terms, has a denominator sharing a factor
    with the modulus and therefore has no residue mod m."""


class AmbiguousNormalization(MsectError):
    """The functional equation does not pin down the constant coefficient;
    an explicit seed is required."""


class UnsolvableEquation(MsectError):
    """No formal power series satisfies the equation as posed (or the
    supplied seed contradicts the forced one)."""


class ProductDiverges(MsectError):
    """The infinite product has no power-series meaning (factor(0) != 1)."""


class ParseError(MsectError):
    """Syntax error in an input expression.

    ``position`` is the 0-based character offset of the offending token.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnboundM(ParseError):
    """The expression mentions the placeholder m but no value was supplied."""

    def __init__(self, position: int):
        super().__init__("placeholder 'm' used but no value supplied", position)
