"""Embedded polarized varieties and test configurations given by diagonal weights.

A test configuration is stored through its two fibers that carry all
invariants: the ideal of the embedded variety and the ideal of the flat
limit, plus a certificate that both have the same Hilbert function on a
range of degrees.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import List, Optional, Sequence, Tuple

from . import upoly
from .algebra import (
    Monomial,
    Polynomial,
    TermOrder,
    WeightCounter,
    buchberger,
    initial_ideal,
    quotient_dimension,
)
from .errors import CertificateError, InputError


@dataclass(frozen=True)
class EmbeddedVariety:
    nvars: int
    exponent: int
    ideal: Tuple[Polynomial, ...]
    dim: int
    degree: int
    c1n: int
    hilbert_poly: Tuple[Fraction, ...] = field(repr=False)
    leading: Tuple[Monomial, ...] = field(repr=False)

    def hilbert_function(self, gamma: int) -> int:
        return sum(WeightCounter(self.leading, (0,) * self.nvars).counts(gamma).values())


@dataclass(frozen=True)
class TestConfiguration:
    __test__ = False  # keep pytest from collecting this class

    variety: EmbeddedVariety
    weights: Tuple[int, ...]
    central_fiber: Tuple[Polynomial, ...]
    central_leading: Tuple[Monomial, ...] = field(repr=False)
    flatness_checked: Tuple[int, ...] = ()
    flatness_dims: Tuple[int, ...] = field(default=(), repr=False)

    @property
    def exponent(self) -> int:
        return self.variety.exponent

    @property
    def dim(self) -> int:
        return self.variety.dim

    @property
    def nvars(self) -> int:
        return self.variety.nvars


@dataclass(frozen=True)
class SequenceSpec:
    items: Tuple[TestConfiguration, ...]

    def __post_init__(self):
        exps = [tc.exponent for tc in self.items]
        if any(b <= a for a, b in zip(exps, exps[1:])):
            raise InputError(f"exponents must be strictly increasing along the sequence, got {exps}")
        for j, tc in enumerate(self.items):
            if not is_nontrivial(tc):
                raise InputError(f"sequence item {j} is a trivial test configuration")


def _fit_hilbert_polynomial(values: Sequence[int], max_dim: int) -> Tuple[Fraction, ...]:
    """Lowest-degree polynomial in gamma reproducing the tail of ``values``.

    The candidate of degree ``d`` is interpolated on the last ``d + 1``
    values and must also reproduce the three values just before them.
    """
    top = len(values) - 1
    for d in range(max_dim + 1):
        lo = top - d
        if lo - 3 < 0:
            break
        coeffs = upoly.interpolate([(g, values[g]) for g in range(lo, top + 1)])
        if all(upoly.evaluate(coeffs, g) == values[g] for g in range(lo - 3, lo)):
            return coeffs
    raise InputError("Hilbert fit inconsistent: no polynomial reproduces the computed Hilbert function")


def variety_from_input(
    ideal: Sequence[Polynomial],
    exponent: int,
    nvars: int,
    dimension: Optional[int] = None,
    gamma_fit: Optional[int] = None,
) -> EmbeddedVariety:
    """Build an :class:`EmbeddedVariety` from a homogeneous ideal.

    The dimension and degree are read off the Hilbert polynomial; ``c1n``
    is the degree divided by ``exponent ** dim``.  Primality of the ideal
    is taken on trust.
    """
    if nvars < 1:
        raise InputError("numVars must be positive")
    if exponent < 1:
        raise InputError("exponent must be at least 1")
    for i, g in enumerate(ideal):
        if g.nvars != nvars:
            raise InputError(f"generator {i} ({g}) has {g.nvars} variables, expected {nvars}")
        if not g.is_homogeneous():
            raise InputError(f"generator {i} is not homogeneous: {g}")
    gens = tuple(g for g in ideal if not g.is_zero())
    G = buchberger(gens, TermOrder.grevlex(nvars))
    if gamma_fit is None:
        maxdeg = max((g.degree() for g in G.generators), default=1)
        gamma_fit = max(12, 3 * maxdeg + nvars + 4)
    counter = WeightCounter(G.leading, (0,) * nvars)
    values = [sum(counter.counts(g).values()) for g in range(gamma_fit + 1)]
    if values[-1] == 0:
        raise InputError("the ideal defines the empty set (irrelevant ideal)")
    hp = _fit_hilbert_polynomial(values, nvars - 1)
    n = upoly.degree(hp)
    lead = hp[n] * factorial(n)
    if lead.denominator != 1 or lead <= 0:
        raise InputError(f"Hilbert fit inconsistent: leading coefficient {hp[n]} is not deg/n!")
    deg = lead.numerator
    if dimension is not None and dimension != n:
        raise InputError(f"declared dimension {dimension} disagrees with the Hilbert polynomial (dimension {n})")
    if deg % exponent**n:
        raise InputError(
            f"degree {deg} is not divisible by exponent^dim = {exponent**n}; "
            "the input is not an exponent-th Kodaira embedding"
        )
    return EmbeddedVariety(
        nvars=nvars,
        exponent=exponent,
        ideal=gens,
        dim=n,
        degree=deg,
        c1n=deg // exponent**n,
        hilbert_poly=hp,
        leading=G.leading,
    )


def rational_normal_curve(ell: int) -> EmbeddedVariety:
    """The degree-``ell`` Veronese embedding of the projective line."""
    if ell < 1:
        raise InputError("exponent must be at least 1")
    n = ell + 1
    z = [Polynomial.variable(i, n) for i in range(n)]
    minors = [
        z[i] * z[j + 1] - z[i + 1] * z[j] for i in range(ell) for j in range(i + 1, ell)
    ]
    return variety_from_input(minors, ell, n, dimension=1)


def make_test_configuration(
    variety: EmbeddedVariety, weights: Sequence[int], gamma_check: int = 6
) -> TestConfiguration:
    """Attach diagonal weights, compute the flat limit, and certify flatness.

    Flatness is certified for ``gamma = 1 .. gamma_check`` by comparing the
    standard-monomial count of the central fiber against the dimension of
    the general fiber's degree slice computed by exact row reduction.
    """
    c = tuple(int(w) for w in weights)
    if len(c) != variety.nvars:
        raise InputError(f"weights has length {len(c)}, expected {variety.nvars}")
    central = initial_ideal(variety.ideal, c)
    G0 = buchberger(central, TermOrder.grevlex(variety.nvars))
    counter = WeightCounter(G0.leading, (0,) * variety.nvars)
    checked: List[int] = []
    dims: List[int] = []
    for g in range(1, gamma_check + 1):
        special = sum(counter.counts(g).values())
        general = quotient_dimension(variety.ideal, g, variety.nvars)
        if special != general:
            raise CertificateError(
                f"flatness certificate failed in degree {g}: central fiber {special}, general fiber {general}"
            )
        checked.append(g)
        dims.append(general)
    return TestConfiguration(
        variety=variety,
        weights=c,
        central_fiber=tuple(G0.generators),
        central_leading=G0.leading,
        flatness_checked=tuple(checked),
        flatness_dims=tuple(dims),
    )


def is_nontrivial(tc: TestConfiguration) -> bool:
    """True unless all normalized weights ``c - mean(c)`` vanish."""
    return len(set(tc.weights)) > 1
