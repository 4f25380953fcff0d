"""Derivation and certification of mod-m congruence schemes.

Given the equation f(q) = offset(q) + factor(q) * f(q^m) and a section index
i, the derivation produces the induced equation for the section
f_i(q) = A(q) + G(q) * f_i(q^m), splits G into polynomial plus proper part,
and tests whether the proper part vanishes mod m.  When it does, the
congruence f_i(q) = E(q) + P(q) * f_i(q^m) (mod m) holds with E = A mod m and
P the polynomial part mod m, which makes every section coefficient computable
in poly-logarithmic time.  When it does not, the verdict is NoMiracle.

Writing s_i, r_i for the sections of offset and factor, the sectioned
equation gives f(q) = (f_i(q) - s_i(q)) / r_i(q); substituting back in yields

    G = factor * r_i / r_i(q^m)
    A = s_i + r_i * offset - factor * r_i * s_i(q^m) / r_i(q^m)

(both exact rational functions).  The A formula is re-derived from scratch
here; its correctness is enforced by the series consistency checks in the
test suite rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import (
    AmbiguousNormalization,
    NonUnitDenominator,
    SectionVanishes,
    UnsolvableEquation,
)
from .modcoeff import ModRatFun, residue_mod
from .poly import Poly, RatFun, as_ratfun
from .sections import msect
from . import oracle


@dataclass(frozen=True)
class FunctionalEquation:
    """The equation f(q) = offset(q) + factor(q) * f(q^m), plus the seed f(0).

    The seed is forced to offset(0)/(1 - factor(0)) whenever factor(0) != 1.
    With factor(0) = 1 the equation requires offset(0) = 0 (else it has no
    power-series solution); the seed then defaults to 1 for a vanishing
    offset and must be supplied explicitly otherwise.
    """

    offset: RatFun
    factor: RatFun
    m: int
    seed: Fraction | None = None
    offset_text: str | None = None
    factor_text: str | None = None
    seed_explicit: bool = field(init=False, default=False)

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("functional equation requires m >= 2")
        object.__setattr__(self, "offset", as_ratfun(self.offset))
        object.__setattr__(self, "factor", as_ratfun(self.factor))
        explicit = self.seed is not None
        seed = Fraction(self.seed) if explicit else None
        r0 = self.factor.at0()
        s0 = self.offset.at0()
        if r0 != 1:
            forced = s0 / (1 - r0)
            if explicit and seed != forced:
                raise UnsolvableEquation(
                    f"equation forces the seed {forced}, but {seed} was supplied"
                )
            seed = forced
        else:
            if s0 != 0:
                raise UnsolvableEquation(
                    "factor(0) = 1 requires offset(0) = 0 for a solution to exist"
                )
            if not explicit:
                if self.offset.is_zero():
                    seed = Fraction(1)
                else:
                    raise AmbiguousNormalization(
                        "factor(0) = 1 with a nonzero offset leaves the seed "
                        "undetermined; supply it explicitly"
                    )
        object.__setattr__(self, "seed", seed)
        object.__setattr__(self, "seed_explicit", explicit)


@dataclass(frozen=True)
class DerivedFE:
    """Induced equation f_i(q) = offset(q) + factor(q) * f_i(q^m) for one section."""

    offset: RatFun
    factor: RatFun
    m: int
    i: int


@dataclass(frozen=True)
class Provenance:
    """How a scheme was obtained: input texts and the exact derived equation."""

    offset_text: str
    factor_text: str
    seed_text: str | None = None  # explicit seed only
    derived_offset: RatFun | None = None
    derived_factor: RatFun | None = None


@dataclass(frozen=True)
class Scheme:
    """Certified congruence f_i(q) = e(q) + p(q) * f_i(q^m)  (mod m).

    e is a rational function and p a polynomial, both with coefficients in
    [0, m-1]; seed is the residue of the section's constant coefficient.
    """

    m: int
    i: int
    e: ModRatFun
    p: tuple[int, ...]
    seed: int
    provenance: Provenance

    @property
    def p_degree(self) -> int:
        return len(self.p) - 1

    @property
    def window(self) -> int:
        """Indices n - m*k with nonzero p span at most this many k per level."""
        return self.p_degree // self.m + 1


@dataclass(frozen=True)
class NoMiracle:
    """Verdict: the proper rational part of G does not vanish mod m."""

    m: int
    i: int
    proper_part: RatFun
    derived: DerivedFE


def section_fe(fe: FunctionalEquation, i: int) -> DerivedFE:
    """Derive the exact functional equation satisfied by the i-th section."""
    m = fe.m
    if not 0 <= i < m:
        raise ValueError(f"section index {i} outside [0, {m})")
    s_i = msect(fe.offset, m, i)
    r_i = msect(fe.factor, m, i)
    if r_i.is_zero():
        raise SectionVanishes(
            f"section {i} of the factor is identically zero; the original "
            "series cannot be recovered from it"
        )
    r_i_up = r_i.substitute_power(m)
    gain = fe.factor * r_i / r_i_up
    add = s_i + r_i * fe.offset - fe.factor * r_i * s_i.substitute_power(m) / r_i_up
    return DerivedFE(offset=add, factor=gain, m=m, i=i)


def proper_split(g: RatFun) -> tuple[Poly, RatFun]:
    """Split g into polynomial part plus a proper rational part
    (numerator degree strictly below denominator degree)."""
    quot, rem = divmod(g.num, g.den)
    return quot, RatFun(rem, g.den)


def poly_residues(p: Poly, m: int) -> tuple[int, ...]:
    """Coefficients of p reduced mod m, trailing zeros stripped."""
    out = [residue_mod(c, m) for c in p.coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def reduce_ratfun_mod(f: RatFun, m: int) -> ModRatFun:
    """Reduce f mod m, scaling so the denominator's constant term is 1.

    Raises NonUnitDenominator when den(0) is not invertible mod m, and
    NonIntegralCoefficient when a numerator coefficient has no residue.
    """
    d0 = int(f.den.coefficient(0))
    if gcd(d0, m) != 1:
        raise NonUnitDenominator(
            f"denominator constant term {d0} is not a unit mod {m}"
        )
    inv = pow(d0, -1, m)
    num = tuple(residue_mod(c, m) * inv % m for c in f.num.coeffs)
    den = tuple(int(c) * inv % m for c in f.den.coeffs)
    return ModRatFun(num, den, m)


def derive_scheme(fe: FunctionalEquation, i: int) -> Scheme | NoMiracle:
    """Run the full derivation; returns a certified Scheme or NoMiracle.

    Representation errors (SectionVanishes, NonUnitDenominator,
    NonIntegralCoefficient, ...) propagate as exceptions: they mean the
    question cannot be decided in this representation, not that the miracle
    fails.
    """
    derived = section_fe(fe, i)
    poly_part, proper = proper_split(derived.factor)
    if not reduce_ratfun_mod(proper, fe.m).is_zero():
        return NoMiracle(m=fe.m, i=i, proper_part=proper, derived=derived)
    e = reduce_ratfun_mod(derived.offset, fe.m)
    p = poly_residues(poly_part, fe.m)
    seed_value = oracle.expand_fe(fe, i + 1).coeffs[i]
    seed = residue_mod(seed_value, fe.m)
    return Scheme(
        m=fe.m,
        i=i,
        e=e,
        p=p,
        seed=seed,
        provenance=_provenance(fe, derived),
    )


def _provenance(fe: FunctionalEquation, derived: DerivedFE) -> Provenance:
    from .exprparse import render_ratfun

    return Provenance(
        offset_text=fe.offset_text or render_ratfun(fe.offset),
        factor_text=fe.factor_text or render_ratfun(fe.factor),
        seed_text=str(fe.seed) if fe.seed_explicit else None,
        derived_offset=derived.offset,
        derived_factor=derived.factor,
    )
