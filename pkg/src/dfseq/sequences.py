"""Sequences of test configurations and the limit formula for their invariant.

Two sources of sequences are supported: an explicit list of configurations
with increasing exponents, and the family ``mu_gamma`` obtained from one
configuration by passing to ``L^gamma`` (exponent ``k = gamma * exponent``),
whose dual weights are the standard-monomial weights of ``R_k``.

``liminf`` over an infinite sequence is reported as the minimum over a
trailing window of the computed terms.  This is an estimate, never a claim
about the true limit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .errors import InputError, TrivialConfigurationError
from .geometry import TestConfiguration, is_nontrivial
from .invariants import (
    INF,
    InvariantBundle,
    NormData,
    PiRational,
    WeightRow,
    norms,
)


@dataclass(frozen=True)
class MuGammaData:
    gamma: int
    k: int
    weights: Tuple[Tuple[int, int], ...]  # multiset of dual weights <a,c>
    norms: NormData

    @property
    def N(self) -> int:
        return sum(m for _, m in self.weights)

    @property
    def w(self) -> int:
        return -sum(wt * m for wt, m in self.weights)


@dataclass(frozen=True)
class SequenceItem:
    """The numbers that enter one term of the limit formula."""

    exponent: int
    N: int
    w: int
    F0: Fraction
    norm1: Fraction
    label: str = ""


@dataclass(frozen=True)
class TermRecord:
    item: SequenceItem
    T: PiRational


@dataclass(frozen=True)
class TermReport:
    records: Tuple[TermRecord, ...]
    tail_inf: PiRational
    window: int
    c1n: int


@dataclass(frozen=True)
class PropositionRow:
    gamma: int
    k: int
    T: PiRational
    closed_form: PiRational
    growth_ratio: Fraction


@dataclass(frozen=True)
class PropositionReport:
    r_first: Union[int, float]
    F_r: Fraction
    rows: Tuple[PropositionRow, ...]
    branch: str
    decay_exponent: Optional[float]
    growth_constant: Optional[Fraction]
    growth_bound_holds: Optional[bool]
    tail_inf_T: PiRational
    tail_inf_closed: Optional[PiRational]
    warnings: Tuple[str, ...] = ()


def mu_gamma_from_row(row: WeightRow, dim: int) -> MuGammaData:
    return MuGammaData(row.gamma, row.k, row.weights, norms(dict(row.weights), row.k, dim))


def mu_gamma(tc: TestConfiguration, gamma: int, bundle: Optional[InvariantBundle] = None) -> MuGammaData:
    """Weights and norms of the ``gamma``-th member of the induced sequence."""
    if gamma < 1:
        raise InputError("gamma must be at least 1")
    if bundle is not None and gamma <= len(bundle.table.rows):
        row = bundle.table.row(gamma)
    else:
        from .invariants import weight_table

        row = weight_table(tc, gamma).row(gamma)
    return mu_gamma_from_row(row, tc.dim)


def item_from_configuration(tc: TestConfiguration, bundle: InvariantBundle, label: str = "") -> SequenceItem:
    row = bundle.table.row(1)
    return SequenceItem(
        exponent=tc.exponent,
        N=row.N,
        w=row.w,
        F0=bundle.expansion.F0,
        norm1=bundle.norms.norm1,
        label=label,
    )


def items_from_mu_gamma(tc: TestConfiguration, bundle: InvariantBundle) -> List[SequenceItem]:
    """One item per table row; every member shares the base configuration's F0."""
    F0 = bundle.expansion.F0
    out = []
    for row in bundle.table.rows:
        mg = mu_gamma_from_row(row, tc.dim)
        out.append(SequenceItem(row.k, mg.N, mg.w, F0, mg.norms.norm1, label=f"gamma={row.gamma}"))
    return out


def default_window(count: int) -> int:
    return max(1, math.ceil(count / 3))


def term_value(item: SequenceItem, c1n: int) -> PiRational:
    """``lambda / ||mu||_1 * (w / N - exponent * F0)`` as a multiple of 1/pi."""
    if item.norm1 == 0:
        raise TrivialConfigurationError(f"item {item.label or item.exponent} has ||mu||_1 = 0")
    core = Fraction(item.w, item.N) - item.exponent * item.F0
    return PiRational(c1n * core / item.norm1)


def theorem_terms(items: Sequence[SequenceItem], c1n: int, window: Optional[int] = None) -> TermReport:
    if not items:
        raise InputError("empty sequence")
    exps = [it.exponent for it in items]
    if any(b <= a for a, b in zip(exps, exps[1:])):
        raise InputError(f"exponents must be strictly increasing, got {exps}")
    records = tuple(TermRecord(it, term_value(it, c1n)) for it in items)
    window = default_window(len(records)) if window is None else max(1, min(window, len(records)))
    tail = min((r.T.coefficient for r in records[-window:]))
    return TermReport(records, PiRational(tail), window, c1n)


def sequence_terms(
    configs: Sequence[Tuple[TestConfiguration, InvariantBundle]], window: Optional[int] = None
) -> TermReport:
    """Limit-formula terms for an explicit list of configurations."""
    if not configs:
        raise InputError("empty sequence")
    c1ns = {tc.variety.c1n for tc, _ in configs}
    if len(c1ns) != 1:
        raise InputError(f"items disagree on c1(L)^n: {sorted(c1ns)}")
    for j, (tc, _) in enumerate(configs):
        if not is_nontrivial(tc):
            raise TrivialConfigurationError(f"sequence item {j} is trivial")
    items = [item_from_configuration(tc, b, label=f"item {j}") for j, (tc, b) in enumerate(configs)]
    return theorem_terms(items, c1ns.pop(), window)


def mu_gamma_terms(tc: TestConfiguration, bundle: InvariantBundle, window: Optional[int] = None) -> TermReport:
    if not is_nontrivial(tc):
        raise TrivialConfigurationError("the configuration is trivial, so is every mu_gamma")
    return theorem_terms(items_from_mu_gamma(tc, bundle), tc.variety.c1n, window)


def _loglog_slope(xs: Sequence[float], ys: Sequence[float]) -> Optional[float]:
    pts = [(math.log(x), math.log(abs(y))) for x, y in zip(xs, ys) if y != 0]
    if len(pts) < 2:
        return None
    mx = sum(p[0] for p in pts) / len(pts)
    my = sum(p[1] for p in pts) / len(pts)
    sxx = sum((p[0] - mx) ** 2 for p in pts)
    sxy = sum((p[0] - mx) * (p[1] - my) for p in pts)
    return sxy / sxx


def proposition_report(
    tc: TestConfiguration, bundle: InvariantBundle, window: Optional[int] = None
) -> PropositionReport:
    """Tabulate the limit-formula terms of ``mu_gamma`` against the closed form.

    For finite ``r`` (first nonzero ``F_i`` with ``i >= 1``) the closed form is
    ``lambda * F_r * k^(1-r) / ||mu_gamma||_1``; the report also carries the
    growth ratio ``||mu_gamma||_1^-1 / gamma^(r-1)`` and the fitted decay
    exponent of the difference.  For ``r`` infinite the closed form is 0.
    """
    terms = mu_gamma_terms(tc, bundle, window)
    c1n = tc.variety.c1n
    r = bundle.expansion.r_first
    F = bundle.expansion.F
    warnings: List[str] = []
    if len(terms.records) < 8:
        warnings.append(f"only {len(terms.records)} values of gamma; too few to exhibit the trend")

    rows = []
    for rec in terms.records:
        it = rec.item
        gamma = it.exponent // tc.exponent
        if r == INF:
            closed = Fraction(0)
            growth = 1 / it.norm1
        else:
            closed = c1n * F[r] * Fraction(it.exponent) ** (1 - r) / it.norm1
            growth = (1 / it.norm1) / Fraction(gamma) ** (r - 1)
        rows.append(PropositionRow(gamma, it.exponent, rec.T, PiRational(closed), growth))

    if r == INF:
        branch = "r = +inf: F1({mu_gamma}) = 0"
        return PropositionReport(
            r_first=r,
            F_r=Fraction(0),
            rows=tuple(rows),
            branch=branch,
            decay_exponent=None,
            growth_constant=None,
            growth_bound_holds=None,
            tail_inf_T=terms.tail_inf,
            tail_inf_closed=PiRational(Fraction(0)),
            warnings=tuple(warnings),
        )

    half = len(rows) // 2
    upper = rows[half:]
    slope = _loglog_slope(
        [row.gamma for row in upper],
        [float(row.T.coefficient - row.closed_form.coefficient) for row in upper],
    )
    growth_constant = max((row.growth_ratio for row in rows[: max(half, 1)]), default=None)
    holds = None
    if growth_constant is not None and half:
        # the bound is asymptotic; allow a factor 2 over the constant seen on the first half
        holds = all(row.growth_ratio <= 2 * growth_constant for row in rows[half:])
    tail = terms.window
    return PropositionReport(
        r_first=r,
        F_r=F[r],
        rows=tuple(rows),
        branch=f"r = {r}: F1({{mu_gamma}}) = lambda * liminf F_r k^(1-r) / ||mu_gamma||_1",
        decay_exponent=None if slope is None else -slope,
        growth_constant=growth_constant,
        growth_bound_holds=holds,
        tail_inf_T=terms.tail_inf,
        tail_inf_closed=PiRational(min(row.closed_form.coefficient for row in rows[-tail:])),
        warnings=tuple(warnings),
    )
