"""Graded weight tables, Donaldson-Futaki expansion coefficients, and norms.

Sign conventions: the weights ``c`` act on the dual coordinates, so a
standard monomial ``z^a`` of the central fiber carries weight ``<a, c>`` on
the dual side and ``-<a, c>`` as a section.  The total weight of ``R_k`` is
therefore ``w_k = -sum <a, c>`` over the standard monomials of degree
``gamma`` (with ``k = gamma * exponent``).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import List, Mapping, Optional, Sequence, Tuple, Union

from . import upoly
from .algebra import WeightCounter
from .errors import InputError
from .geometry import TestConfiguration

INF = math.inf


@dataclass(frozen=True)
class PiRational:
    """An exact value ``coefficient / pi``."""

    coefficient: Fraction

    @property
    def value(self) -> float:
        return float(self.coefficient) / math.pi

    def __str__(self) -> str:
        return f"{fmt_q(self.coefficient)} π^-1"


def fmt_q(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class WeightRow:
    gamma: int
    k: int
    N: int
    w: int
    weights: Tuple[Tuple[int, int], ...]  # (weight <a,c>, multiplicity), ascending


@dataclass(frozen=True)
class GradedWeightTable:
    exponent: int
    rows: Tuple[WeightRow, ...]

    def row(self, gamma: int) -> WeightRow:
        for r in self.rows:
            if r.gamma == gamma:
                return r
        raise KeyError(gamma)


@dataclass(frozen=True)
class FittedPolynomials:
    n_poly: Tuple[Fraction, ...]  # coefficients in k, low degree first
    w_poly: Tuple[Fraction, ...]
    dim: int
    fit_window: Tuple[int, int]
    verified: Tuple[int, int]


@dataclass(frozen=True)
class ExpansionCoefficients:
    F: Tuple[Fraction, ...]
    r_first: Union[int, float]  # math.inf when w/(kN) is constant

    @property
    def F0(self) -> Fraction:
        return self.F[0]


@dataclass(frozen=True)
class NormData:
    cbar: Fraction
    b: Tuple[Fraction, ...]
    norm1: Fraction
    norm_inf: Fraction
    delta: Fraction


@dataclass(frozen=True)
class F0Check:
    from_expansion: Fraction
    from_leading: Fraction
    agree: bool
    # n! w_k / (k^n c1n) with the literal k^n grows linearly unless F0 = 0
    literal_formula_diverges: bool


def weight_table(tc: TestConfiguration, gamma_max: int) -> GradedWeightTable:
    if gamma_max < 1:
        raise InputError("gamma_max must be at least 1")
    counter = WeightCounter(tc.central_leading, tc.weights)
    rows = []
    for g in range(1, gamma_max + 1):
        counts = counter.counts(g)
        N = sum(counts.values())
        w = -sum(wt * m for wt, m in counts.items())
        rows.append(WeightRow(g, g * tc.exponent, N, w, tuple(sorted(counts.items()))))
    return GradedWeightTable(tc.exponent, tuple(rows))


def fit_polynomials(table: GradedWeightTable, n: int, gamma_min: int = 1) -> FittedPolynomials:
    """Exact polynomials ``N(k)`` of degree ``n`` and ``w(k)`` of degree at most ``n + 1``.

    Both are interpolated on the top rows of the table and must reproduce
    every row with ``gamma >= gamma_min``.
    """
    rows = [r for r in table.rows if r.gamma >= gamma_min]
    if len(rows) < n + 4:
        raise InputError(f"need at least {n + 4} table rows with gamma >= {gamma_min}, have {len(rows)}")
    window = rows[-(n + 3):]
    n_poly = upoly.interpolate([(r.k, r.N) for r in window[-(n + 1):]])
    w_poly = upoly.interpolate([(r.k, r.w) for r in window[-(n + 2):]])
    ok = all(
        upoly.evaluate(n_poly, r.k) == r.N and upoly.evaluate(w_poly, r.k) == r.w for r in rows
    )
    if not ok or upoly.degree(n_poly) != n:
        raise InputError("Hilbert/weight function not yet polynomial; raise gamma_min or gamma_max")
    return FittedPolynomials(
        n_poly=n_poly,
        w_poly=w_poly,
        dim=n,
        fit_window=(window[0].gamma, window[-1].gamma),
        verified=(rows[0].gamma, rows[-1].gamma),
    )


def df_expansion(fit: FittedPolynomials, r: int) -> ExpansionCoefficients:
    """Coefficients of ``w(k) / (k N(k)) = F0 + F1/k + F2/k^2 + ...``.

    Substituting ``x = 1/k`` turns both sides into power series in ``x``;
    the coefficients come out of exact series long division.  The list is
    extended past ``r`` if needed to reach the first nonzero ``F_i``.
    """
    if r < 1:
        raise InputError("expansion order must be at least 1")
    n = fit.dim
    b = [fit.n_poly[i] if i < len(fit.n_poly) else Fraction(0) for i in range(n + 1)]
    a = [fit.w_poly[i] if i < len(fit.w_poly) else Fraction(0) for i in range(n + 2)]
    if b[n] == 0:
        raise InputError("N(k) has vanishing leading coefficient")
    num = [a[n + 1 - j] for j in range(n + 2)]  # series in x = 1/k
    den = [b[n - j] for j in range(n + 1)]

    # w - F0*k*N vanishes identically iff every F_i with i >= 1 is zero
    F0 = num[0] / den[0]
    rest = [a[i] - F0 * (b[i - 1] if 1 <= i <= n + 1 else 0) for i in range(n + 2)]
    constant = all(v == 0 for v in rest)

    F: List[Fraction] = []
    j = 0
    r_first: Union[int, float] = INF
    while True:
        acc = num[j] if j < len(num) else Fraction(0)
        for i in range(1, min(j, n) + 1):
            acc -= den[i] * F[j - i]
        F.append(acc / den[0])
        if j >= 1 and F[j] != 0 and r_first == INF:
            r_first = j
        if j >= r and (constant or r_first != INF):
            break
        j += 1
    return ExpansionCoefficients(tuple(F), r_first)


def norms(
    weights: Union[Sequence[Union[int, Fraction]], Mapping[int, int]], exponent: int, n: int
) -> NormData:
    """Normalized weights, the two norms, and their ratio.

    ``weights`` is either the list of weights over a basis, or a multiset
    given as ``{weight: multiplicity}``.
    """
    if isinstance(weights, Mapping):
        expanded = [Fraction(w) for w, m in sorted(weights.items()) for _ in range(m)]
    else:
        expanded = [Fraction(w) for w in weights]
    if not expanded:
        raise InputError("need at least one weight")
    N = len(expanded)
    cbar = sum(expanded, Fraction(0)) / N
    b = tuple(w - cbar for w in expanded)
    norm1 = sum(abs(x) for x in b) / Fraction(exponent) ** (n + 1)
    norm_inf = max(abs(x) for x in b) / exponent
    delta = norm_inf / norm1 if norm_inf != 0 else Fraction(1)
    return NormData(cbar, b, norm1, norm_inf, delta)


def f0_consistency(tc: TestConfiguration, fit: FittedPolynomials, expansion: Optional[ExpansionCoefficients] = None) -> F0Check:
    """Compare F0 from the expansion with ``n! * lim w_k / (k^(n+1) c1n)``."""
    n = tc.dim
    if expansion is None:
        expansion = df_expansion(fit, 1)
    lead = fit.w_poly[n + 1] if len(fit.w_poly) > n + 1 else Fraction(0)
    from_leading = factorial(n) * lead / tc.variety.c1n
    return F0Check(
        from_expansion=expansion.F0,
        from_leading=from_leading,
        agree=expansion.F0 == from_leading,
        literal_formula_diverges=lead != 0,
    )


def lam(tc: TestConfiguration) -> PiRational:
    """``c1(L)^n[X] / pi``."""
    return PiRational(Fraction(tc.variety.c1n))


@dataclass(frozen=True)
class InvariantBundle:
    table: GradedWeightTable
    fit: FittedPolynomials
    expansion: ExpansionCoefficients
    norms: NormData
    f0: F0Check


def analyze(tc: TestConfiguration, gamma_max: int, order: int = 5, gamma_min: int = 1) -> InvariantBundle:
    """Everything the invariants module computes for one configuration."""
    table = weight_table(tc, gamma_max)
    fit = fit_polynomials(table, tc.dim, gamma_min)
    expansion = df_expansion(fit, order)
    return InvariantBundle(
        table=table,
        fit=fit,
        expansion=expansion,
        norms=norms(tc.weights, tc.exponent, tc.dim),
        f0=f0_consistency(tc, fit, expansion),
    )
