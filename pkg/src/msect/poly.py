"""Exact dense polynomials and rational functions over the rationals.

A ``Poly`` stores Fraction coefficients lowest degree first with no trailing
zeros; the zero polynomial is the empty tuple and has degree -1.  A ``RatFun``
is a reduced quotient num/den whose denominator is an integer-coefficient
polynomial with content 1, positive constant term and den(0) != 0, so every
RatFun is a bona-fide formal power series in q and equality is a plain
structural comparison.

All values are immutable; operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import DivisionByZeroPoly, DivisionByZeroRatFun, NonSeriesResult

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class Poly:
    """Dense univariate polynomial with exact rational coefficients."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in self.coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, n: int) -> Fraction:
        """Coefficient of q^n (zero beyond the stored range)."""
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return _ZERO

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def evaluate(self, x: Fraction | int) -> Fraction:
        out = _ZERO
        for c in reversed(self.coeffs):
            out = out * x + c
        return Fraction(out)

    def monic(self) -> Poly:
        if self.is_zero() or self.leading() == 1:
            return self
        inv = 1 / self.leading()
        return Poly(tuple(c * inv for c in self.coeffs))

    def substitute_power(self, m: int) -> Poly:
        """Return p(q^m)."""
        if m < 1:
            raise ValueError("power substitution requires m >= 1")
        if m == 1 or self.is_zero():
            return self
        out = [_ZERO] * (self.degree * m + 1)
        for k, c in enumerate(self.coeffs):
            out[k * m] = c
        return Poly(tuple(out))

    # -- ring operations -------------------------------------------------

    def __add__(self, other: Poly | Fraction | int) -> Poly:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return Poly(tuple(out))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Poly | Fraction | int) -> Poly:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Poly | Fraction | int) -> Poly:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Poly | Fraction | int) -> Poly:
        if isinstance(other, (int, Fraction)):
            return Poly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return P_ZERO
        out = [_ZERO] * (self.degree + other.degree + 1)
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            for j, d in enumerate(other.coeffs):
                out[k + j] += c * d
        return Poly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative polynomial power")
        result, base = P_ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: Poly | Fraction | int) -> tuple[Poly, Poly]:
        """Exact rational long division: self == other*quot + rem with
        deg(rem) < deg(other)."""
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZeroPoly("polynomial division by zero")
        if self.degree < other.degree:
            return P_ZERO, self
        rem = list(self.coeffs)
        dd = other.degree
        dlead = other.coeffs[-1]
        quot = [_ZERO] * (self.degree - dd + 1)
        for k in range(len(quot) - 1, -1, -1):
            c = rem[dd + k] / dlead
            if c:
                quot[k] = c
                for j, oc in enumerate(other.coeffs):
                    rem[k + j] -= c * oc
        return Poly(tuple(quot)), Poly(tuple(rem[:dd]))

    def __floordiv__(self, other: Poly | Fraction | int) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly | Fraction | int) -> Poly:
        return divmod(self, other)[1]


P_ZERO = Poly()
P_ONE = Poly((_ONE,))
P_Q = Poly((_ZERO, _ONE))


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly((Fraction(value),))
    return NotImplemented


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor over the rationals (gcd(0, 0) = 0)."""
    while not b.is_zero():
        a, b = b, divmod(a, b)[1]
    return a.monic()


def primitive_normalize(p: Poly) -> tuple[Poly, Fraction]:
    """Scale p to integer coefficients with content 1 and positive lowest
    nonzero coefficient.  Returns (normalized, alpha) with normalized == p*alpha.
    """
    if p.is_zero():
        return p, _ONE
    denom_lcm = lcm(*(c.denominator for c in p.coeffs))
    numer_gcd = gcd(*(abs((c * denom_lcm).numerator) for c in p.coeffs))
    alpha = Fraction(denom_lcm, numer_gcd)
    for c in p.coeffs:
        if c:
            if c < 0:
                alpha = -alpha
            break
    return Poly(tuple(c * alpha for c in p.coeffs)), alpha


@dataclass(frozen=True)
class RatFun:
    """Reduced quotient of two Polys, always a formal power series in q.

    Canonical form: numerator and denominator coprime, denominator with
    integer coefficients, content 1 and positive constant term.  Numerator
    coefficients may be arbitrary rationals.
    """

    num: Poly = P_ZERO
    den: Poly = P_ONE

    def __post_init__(self):
        num = _as_poly(self.num)
        den = _as_poly(self.den)
        if den.is_zero():
            raise DivisionByZeroRatFun("zero denominator")
        if num.is_zero():
            num, den = P_ZERO, P_ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = divmod(num, g)[0]
                den = divmod(den, g)[0]
            den, alpha = primitive_normalize(den)
            num = num * alpha
        if not den.coefficient(0):
            raise NonSeriesResult("denominator vanishes at q = 0")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den == P_ONE

    def at0(self) -> Fraction:
        """Value at q = 0, i.e. the constant series coefficient."""
        return self.num.coefficient(0) / self.den.coefficient(0)

    def substitute_power(self, m: int) -> RatFun:
        """Return f(q^m)."""
        return RatFun(self.num.substitute_power(m), self.den.substitute_power(m))

    def series(self, n: int) -> list[Fraction]:
        """First n Maclaurin coefficients, exact."""
        dc = self.den.coeffs
        d0 = dc[0]
        dd = len(dc) - 1
        out: list[Fraction] = []
        for k in range(n):
            acc = self.num.coefficient(k)
            for j in range(1, min(k, dd) + 1):
                if dc[j]:
                    acc -= dc[j] * out[k - j]
            out.append(acc if d0 == 1 else acc / d0)
        return out

    # -- field operations ------------------------------------------------

    def __add__(self, other) -> RatFun:
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> RatFun:
        return RatFun(-self.num, self.den)

    def __sub__(self, other) -> RatFun:
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> RatFun:
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> RatFun:
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RatFun:
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZeroRatFun("division by the zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> RatFun:
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int) -> RatFun:
        if n < 0:
            raise ValueError("negative rational-function power")
        result, base = RF_ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


def _as_ratfun(value) -> RatFun:
    if isinstance(value, RatFun):
        return value
    if isinstance(value, (int, Fraction, Poly)):
        return RatFun(_as_poly(value))
    return NotImplemented


def as_ratfun(value) -> RatFun:
    """Coerce an int, Fraction or Poly to a RatFun."""
    out = _as_ratfun(value)
    if out is NotImplemented:
        raise TypeError(f"cannot interpret {value!r} as a rational function")
    return out


RF_ZERO = RatFun()
RF_ONE = RatFun(P_ONE)
