"""Standard monomials of monomial ideals and dense degree-slice ranks."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, FrozenSet, List, Sequence, Tuple

from .polynomial import Monomial, Polynomial, monomial_divides, monomials_of_degree


def standard_monomials(leading_terms: Sequence[Monomial], degree: int, nvars: int) -> List[Monomial]:
    """Degree-``degree`` monomials divisible by no element of ``leading_terms``.

    Output is in descending lexicographic order of exponent vectors.
    """
    leads = [tuple(m) for m in leading_terms]
    return [
        m
        for m in monomials_of_degree(degree, nvars)
        if not any(monomial_divides(lt, m) for lt in leads)
    ]


def _minimalize(gens) -> FrozenSet[Monomial]:
    gens = set(gens)
    return frozenset(
        g for g in gens if not any(h != g and monomial_divides(h, g) for h in gens)
    )


class WeightCounter:
    """Counts standard monomials of a monomial ideal by degree and weight.

    For degree ``d`` it returns ``{weight: multiplicity}`` where the weight
    of ``z^a`` is ``<a, c>``.  The count recurses on the exponent of the
    first variable, replacing the ideal by the part of its colon ideal that
    lives in the remaining variables, and memoizes on that residual ideal.
    This avoids enumerating every monomial of degree ``d``.
    """

    def __init__(self, leading_terms: Sequence[Monomial], weights: Sequence[int]):
        self.weights = tuple(int(w) for w in weights)
        self.nvars = len(self.weights)
        self.leads = _minimalize(tuple(m) for m in leading_terms)
        for m in self.leads:
            if len(m) != self.nvars:
                raise ValueError("leading term length does not match the weight vector")
        self._count = lru_cache(maxsize=None)(self._count_impl)

    def counts(self, degree: int) -> Dict[int, int]:
        if self.nvars == 0:
            return {0: 1} if degree == 0 else {}
        return dict(sorted(self._count(self.leads, 0, degree)))

    def _count_impl(self, gens: FrozenSet[Monomial], i: int, d: int) -> Tuple[Tuple[int, int], ...]:
        if any(not any(g) for g in gens):
            return ()
        c = self.weights[i]
        if i == self.nvars - 1:
            if any(g[0] <= d for g in gens):
                return ()
            return ((d * c, 1),)
        out: Dict[int, int] = {}
        for a in range(d + 1):
            sub = _minimalize(g[1:] for g in gens if g[0] <= a)
            for w, mult in self._count(sub, i + 1, d - a):
                key = w + a * c
                out[key] = out.get(key, 0) + mult
        return tuple(out.items())


def standard_weight_counts(
    leading_terms: Sequence[Monomial], degree: int, weights: Sequence[int]
) -> Dict[int, int]:
    """One-shot wrapper around :class:`WeightCounter`."""
    return WeightCounter(leading_terms, weights).counts(degree)


def slice_rank(generators: Sequence[Polynomial], degree: int, nvars: int) -> int:
    """Dimension of the degree-``degree`` part of the ideal spanned by ``generators``.

    Builds the spanning set ``{m * g}`` and row-reduces it exactly.  Rows are
    kept sparse since products of monomials with binomials stay sparse.
    """
    rows: List[Dict[Monomial, Fraction]] = []
    for g in generators:
        if g.is_zero():
            continue
        dg = g.degree()
        if dg > degree:
            continue
        for m in monomials_of_degree(degree - dg, nvars):
            rows.append(g.mul_term(m, Fraction(1)).terms)
    pivots: Dict[Monomial, Dict[Monomial, Fraction]] = {}
    for row in rows:
        row = dict(row)
        while row:
            col = max(row)
            piv = pivots.get(col)
            if piv is None:
                inv = 1 / row[col]
                pivots[col] = {m: v * inv for m, v in row.items()}
                break
            f = row[col]
            for m, v in piv.items():
                nv = row.get(m, 0) - f * v
                if nv:
                    row[m] = nv
                else:
                    row.pop(m, None)
    return len(pivots)


def quotient_dimension(generators: Sequence[Polynomial], degree: int, nvars: int) -> int:
    """``dim S^degree - rank(I_degree)`` by exact elimination on the whole degree slice."""
    return comb(degree + nvars - 1, nvars - 1) - slice_rank(generators, degree, nvars)
