"""Ground truth by brute force: exact series expansion and verification.

``expand_fe`` expands the unique solution of f = offset + factor * f(q^m)
by clearing denominators first, which turns the defining convolution into a
fixed-width recurrence: with offset = a/b and factor = c/d,

    b(q) d(q) f(q) = d(q) a(q) + b(q) c(q) f(q^m),

so each coefficient costs O(deg) exact operations instead of O(n).
Everything here is exact; the expansion is the trusted slow path that every
fast path is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from .errors import ProductDiverges
from .modcoeff import residue_mod, scheme_coeff_block
from .poly import RatFun

if TYPE_CHECKING:
    from .schemes import DerivedFE, FunctionalEquation, Scheme


@dataclass(frozen=True)
class SeriesPrefix:
    """A truncated coefficient sequence plus a note on how it was produced."""

    coeffs: tuple[Fraction, ...]
    origin: str = ""


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of comparing a scheme against the oracle on [0, checked)."""

    checked: int
    matched: int
    first_mismatch: tuple[int, int, int] | None = None  # (index, expected, got)


def _term_pairs(poly) -> list[tuple[int, Fraction | int]]:
    # plain ints where exact, for speed on the integer fixtures
    return [
        (j, int(c) if c.denominator == 1 else c)
        for j, c in enumerate(poly.coeffs)
        if c
    ]


def expand_fe(fe: FunctionalEquation, n: int) -> SeriesPrefix:
    """First n coefficients of the unique solution of fe, exact.

    Equivalent to the defining recurrence
    f(k) = offset(k) + sum_{m*j <= k} factor(k - m*j) * f(j), evaluated via
    the cleared-denominator form in O(n * deg) rational operations.
    """
    origin = f"expand_fe(m={fe.m}, n={n})"
    if n <= 0:
        return SeriesPrefix((), origin)
    m = fe.m
    den = fe.offset.den * fe.factor.den
    add_terms = dict(_term_pairs(fe.factor.den * fe.offset.num))
    sub_terms = _term_pairs(fe.offset.den * fe.factor.num)
    den_terms = [(j, v) for j, v in _term_pairs(den) if j > 0]
    d0 = den.coefficient(0)
    d0 = int(d0) if d0.denominator == 1 else d0
    seed = fe.seed
    vals: list[Fraction | int] = [int(seed) if seed.denominator == 1 else seed]
    for k in range(1, n):
        acc = add_terms.get(k, 0)
        for j, v in sub_terms:
            t = k - j
            if t >= 0 and t % m == 0:
                acc += v * vals[t // m]
        for j, v in den_terms:
            if j <= k:
                acc -= v * vals[k - j]
        if d0 != 1:
            if isinstance(acc, int) and isinstance(d0, int):
                quot, rem = divmod(acc, d0)
                acc = quot if rem == 0 else Fraction(acc, d0)
            else:
                acc = Fraction(acc) / d0
        vals.append(acc)
    return SeriesPrefix(tuple(Fraction(v) for v in vals), origin)


def section_prefix(prefix: SeriesPrefix, m: int, i: int) -> SeriesPrefix:
    """Entry n of the result is coefficient m*n + i of the input."""
    if m < 2:
        raise ValueError("sectioning requires m >= 2")
    if not 0 <= i < m:
        raise ValueError(f"section index {i} outside [0, {m})")
    return SeriesPrefix(
        prefix.coeffs[i::m], origin=f"section(i={i}, m={m}) of {prefix.origin}"
    )


def expand_infinite_product(factor: RatFun, m: int, n: int) -> SeriesPrefix:
    """First n coefficients of prod_{k>=0} factor(q^(m^k)); needs factor(0) = 1."""
    if m < 2:
        raise ValueError("product levels require m >= 2")
    if factor.at0() != 1:
        raise ProductDiverges("infinite product requires factor(0) = 1")
    origin = f"product(m={m}, n={n})"
    if n <= 0:
        return SeriesPrefix((), origin)
    base = factor.series(n)
    out = list(base)
    stride = m
    while stride < n:
        new = [Fraction(0)] * n
        for t in range((n - 1) // stride + 1):
            bt = base[t]
            if not bt:
                continue
            off = t * stride
            for j in range(n - off):
                if out[j]:
                    new[off + j] += bt * out[j]
        out = new
        stride *= m
    return SeriesPrefix(tuple(out), origin)


def verify_scheme(
    fe: FunctionalEquation, i: int, scheme: Scheme, n: int
) -> VerificationReport:
    """Compare scheme output against oracle residues on indices [0, n)."""
    if scheme.m != fe.m or scheme.i != i:
        raise ValueError("scheme does not match the equation/section under test")
    if n < 1:
        raise ValueError("verification range must be >= 1")
    full = expand_fe(fe, fe.m * n + i)
    sect = section_prefix(full, fe.m, i).coeffs[:n]
    fast = scheme_coeff_block(scheme, 0, n)
    matched = 0
    first = None
    for idx in range(n):
        expected = residue_mod(sect[idx], fe.m)
        if expected == fast[idx]:
            matched += 1
        elif first is None:
            first = (idx, expected, fast[idx])
    return VerificationReport(checked=n, matched=matched, first_mismatch=first)


def derived_fe_consistent(fe: FunctionalEquation, derived: DerivedFE, n: int) -> bool:
    """Check f_i - A - G * f_i(q^m) = O(q^n) against the oracle expansion."""
    m, i = derived.m, derived.i
    sect = section_prefix(expand_fe(fe, m * n + i), m, i).coeffs
    add = derived.offset.series(n)
    gain = derived.factor.series(n)
    for k in range(n):
        conv = sum(
            (gain[k - m * t] * sect[t] for t in range(k // m + 1)), Fraction(0)
        )
        if sect[k] != add[k] + conv:
            return False
    return True
