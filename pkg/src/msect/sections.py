"""m-sections of rational functions, computed in pure rational arithmetic.

The i-th section of f collects the coefficients at exponents congruent to
i mod m:  f(q) = sum_{i=0}^{m-1} q^i f_i(q^m).  For rational f = N/Q the
sections are again rational, and they can be put over one common denominator
D with D(q^m) divisible by Q(q).  D is built from the roots of Q: make Q
monic, take its companion matrix M, and let D be the characteristic
polynomial of M^m, whose roots are the m-th powers of the roots of Q.  Since
x^m - a^m is divisible by x - a, the divisibility D(q^m) = C(q) * Q(q) holds
with polynomial cofactor C, and it is re-verified by exact division at
runtime.  No roots of unity are ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalInvariant
from .poly import P_ZERO, Poly, RatFun, primitive_normalize

_Matrix = list[list[Fraction]]


def _identity(d: int) -> _Matrix:
    return [[Fraction(i == j) for j in range(d)] for i in range(d)]


def _mat_mul(a: _Matrix, b: _Matrix) -> _Matrix:
    d = len(a)
    out = [[Fraction(0)] * d for _ in range(d)]
    for i in range(d):
        arow = a[i]
        orow = out[i]
        for k in range(d):
            c = arow[k]
            if not c:
                continue
            brow = b[k]
            for j in range(d):
                orow[j] += c * brow[j]
    return out


def _mat_pow(m: _Matrix, e: int) -> _Matrix:
    result = _identity(len(m))
    base = m
    while e:
        if e & 1:
            result = _mat_mul(result, base)
        base = _mat_mul(base, base)
        e >>= 1
    return result


def _companion(monic: Poly) -> _Matrix:
    # monic = c_0 + c_1 q + ... + q^d; char poly of the matrix is monic itself
    d = monic.degree
    mat = [[Fraction(0)] * d for _ in range(d)]
    for i in range(1, d):
        mat[i][i - 1] = Fraction(1)
    for i in range(d):
        mat[i][d - 1] = -monic.coeffs[i]
    return mat


def _trace(m: _Matrix) -> Fraction:
    return sum((m[i][i] for i in range(len(m))), Fraction(0))


def _charpoly(mat: _Matrix) -> Poly:
    """Characteristic polynomial via the Faddeev-LeVerrier recurrence
    (exact over the rationals), returned monic, lowest degree first."""
    d = len(mat)
    coeffs = [Fraction(0)] * (d + 1)
    coeffs[d] = Fraction(1)
    if d == 0:
        return Poly((Fraction(1),))
    mk = [row[:] for row in mat]
    coeffs[d - 1] = -_trace(mk)
    for k in range(2, d + 1):
        step = [row[:] for row in mk]
        shift = coeffs[d - k + 1]
        for idx in range(d):
            step[idx][idx] += shift
        mk = _mat_mul(mat, step)
        coeffs[d - k] = -_trace(mk) / k
    return Poly(tuple(coeffs))


def denominator_norm(den: Poly, m: int) -> tuple[Poly, Poly]:
    """Return (D, C) with D(q^m) == C(q) * den(q) exactly and D(0) != 0.

    Requires den nonzero with den(0) != 0 and m >= 2.  Raises
    InternalInvariant if the exact divisibility check fails.
    """
    if m < 2:
        raise ValueError("sectioning requires m >= 2")
    if den.is_zero() or not den.coefficient(0):
        raise ValueError("denominator must be nonzero with nonzero constant term")
    if den.degree == 0:
        return Poly((Fraction(1),)), Poly((1 / den.coefficient(0),))
    monic = den.monic()
    powered = _mat_pow(_companion(monic), m)
    norm, _ = primitive_normalize(_charpoly(powered))
    if not norm.coefficient(0):
        raise InternalInvariant("norm denominator vanishes at q = 0")
    quot, rem = divmod(norm.substitute_power(m), den)
    if not rem.is_zero():
        raise InternalInvariant("norm denominator is not divisible by the input")
    return norm, quot


@dataclass(frozen=True)
class SectionSet:
    """All m sections of one rational function."""

    m: int
    sections: tuple[RatFun, ...]

    def reconstruct(self) -> RatFun:
        """Reassemble sum_i q^i * sections[i](q^m); equals the original f."""
        total = RatFun(P_ZERO)
        for i, part in enumerate(self.sections):
            monomial = Poly((0,) * i + (1,))
            total = total + RatFun(monomial) * part.substitute_power(self.m)
        return total


def _section_numerators(f: RatFun, m: int) -> tuple[Poly, list[Poly]]:
    norm, cofactor = denominator_norm(f.den, m)
    spread = f.num * cofactor  # f == spread / norm(q^m)
    return norm, [Poly(spread.coeffs[i::m]) for i in range(m)]


def msect(f: RatFun, m: int, i: int) -> RatFun:
    """The i-th m-section of f, with 0 <= i < m.  A vanishing section is the
    zero rational function, not an error."""
    if not 0 <= i < m:
        raise ValueError(f"section index {i} outside [0, {m})")
    norm, cofactor = denominator_norm(f.den, m)
    spread = f.num * cofactor
    return RatFun(Poly(spread.coeffs[i::m]), norm)


def msect_all(f: RatFun, m: int) -> SectionSet:
    """All m sections of f, sharing one norm-denominator computation."""
    norm, numerators = _section_numerators(f, m)
    return SectionSet(m, tuple(RatFun(n, norm) for n in numerators))
