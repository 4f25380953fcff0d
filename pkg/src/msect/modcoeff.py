"""Poly-logarithmic coefficient extraction over Z/m.

Two fast paths live here.  ``ModRatFun.coefficient`` gives the n-th series
coefficient of a rational function with residue coefficients: below a small
threshold by direct expansion, beyond it by computing x^n modulo the monic
reversed denominator with square-and-multiply (O(deg^2 log n) ring ops).
``scheme_coeff`` evaluates certified congruence schemes by base-m digit
recursion with per-query memoization.

m may be composite throughout: den(0) = 1 keeps the reversed denominator
monic, so no coefficient inversions are ever required.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import TYPE_CHECKING

from .errors import NonIntegralCoefficient

if TYPE_CHECKING:
    from .schemes import Scheme

MAX_INDEX = 2**63 - 1


def _check_index(n: int) -> None:
    if not 0 <= n <= MAX_INDEX:
        raise ValueError(f"coefficient index must lie in [0, 2^63), got {n}")


def residue_mod(value: Fraction | int, m: int) -> int:
    """Residue of an exact rational mod m; the denominator must be a unit."""
    if isinstance(value, int):
        return value % m
    if gcd(value.denominator, m) != 1:
        raise NonIntegralCoefficient(
            f"{value} has no residue mod {m} (denominator not coprime)"
        )
    return value.numerator * pow(value.denominator, -1, m) % m


def _strip(coeffs) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class ModRatFun:
    """Rational function with coefficients in [0, m-1] and den(0) = 1."""

    num: tuple[int, ...]
    den: tuple[int, ...]
    modulus: int

    def __post_init__(self):
        m = self.modulus
        if m < 2:
            raise ValueError("modulus must be >= 2")
        num = _strip(c % m for c in self.num)
        den = _strip(c % m for c in self.den)
        if not den or den[0] != 1:
            raise ValueError("denominator must have constant term 1 mod m")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def is_zero(self) -> bool:
        return not self.num

    def prefix(self, n: int) -> list[int]:
        """First n series coefficients by direct expansion (the slow path)."""
        num, den, m = self.num, self.den, self.modulus
        dd = len(den) - 1
        out: list[int] = []
        for k in range(n):
            acc = num[k] if k < len(num) else 0
            for j in range(1, min(k, dd) + 1):
                if den[j]:
                    acc -= den[j] * out[k - j]
            out.append(acc % m)
        return out

    def coefficient(self, n: int) -> int:
        """The n-th series coefficient, in O(deg^2 log n) ring operations."""
        _check_index(n)
        if not self.num:
            return 0
        d = len(self.den) - 1
        threshold = max(len(self.num) - 1, d) + 1
        if n < threshold or d == 0:
            return self.prefix(n + 1)[n]
        init = self.prefix(threshold)
        start = threshold - d
        # monic reversal of den is the characteristic polynomial of the
        # order-d recurrence satisfied by the coefficients from index start on
        char = tuple(reversed(self.den))
        power = _pow_x_mod(n - start, char, self.modulus)
        return sum(h * init[start + k] for k, h in enumerate(power)) % self.modulus


def _mul_mod(a: list[int], b: list[int], char: tuple[int, ...], m: int) -> list[int]:
    """Multiply residue polynomials and reduce modulo the monic char poly."""
    d = len(char) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            prod[i + j] += ai * bj
    for idx in range(len(prod) - 1, d - 1, -1):
        coef = prod[idx] % m
        if coef:
            off = idx - d
            for k in range(d):
                if char[k]:
                    prod[off + k] -= coef * char[k]
        prod[idx] = 0
    out = [c % m for c in prod[:d]]
    return out


def _pow_x_mod(e: int, char: tuple[int, ...], m: int) -> list[int]:
    """x^e modulo the monic polynomial char, coefficients in Z/m."""
    d = len(char) - 1
    result = [1] + [0] * (d - 1)
    if d == 1:
        base = [(-char[0]) % m]
    else:
        base = [0, 1] + [0] * (d - 2)
    while e:
        if e & 1:
            result = _mul_mod(result, base, char, m)
        e >>= 1
        if e:
            base = _mul_mod(base, base, char, m)
    return result


class DigitEvaluator:
    """Evaluates scheme coefficients by peeling base-m digits of the index.

    The memo table is private to the evaluator; entries never change once
    written, and after a query at index n the table holds at most
    (deg(P)//m + 2) * (log_m(n) + 2) entries.
    """

    def __init__(self, scheme: Scheme):
        self.scheme = scheme
        self.memo: dict[int, int] = {}

    def value(self, n: int) -> int:
        _check_index(n)
        return self._eval(n)

    def _eval(self, n: int) -> int:
        memo = self.memo
        hit = memo.get(n)
        if hit is not None:
            return hit
        scheme = self.scheme
        m = scheme.m
        if n == 0:
            out = scheme.seed % m
        else:
            out = scheme.e.coefficient(n) if not scheme.e.is_zero() else 0
            p = scheme.p
            if p:
                dp = len(p) - 1
                kmin = max(0, -((dp - n) // m))
                for k in range(kmin, n // m + 1):
                    coef = p[n - m * k]
                    if coef:
                        out += coef * self._eval(k)
                out %= m
        memo[n] = out
        return out


def scheme_coeff(scheme: Scheme, n: int) -> int:
    """The n-th section coefficient mod m under a certified scheme."""
    return DigitEvaluator(scheme).value(n)


def scheme_coeff_block(scheme: Scheme, n0: int, count: int) -> list[int]:
    """Residues for indices n0 .. n0+count-1, sharing one memo table."""
    if count < 1:
        raise ValueError("count must be >= 1")
    ev = DigitEvaluator(scheme)
    return [ev.value(n0 + k) for k in range(count)]
