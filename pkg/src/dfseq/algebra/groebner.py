"""Buchberger's algorithm for homogeneous ideals under weight-refined grevlex.

The order compares monomials by total degree, then by the weight
``<a, c>`` (larger wins), then by graded reverse lexicographic order with
``z0 > z1 > ...``.  Taking the larger weight first is what makes the
leading forms of a Groebner basis generate the flat limit at ``t -> 0``
of the family ``f(t^-c * z)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .polynomial import (
    Monomial,
    Polynomial,
    monomial_divides,
    monomial_lcm,
    monomial_quotient,
    monomial_weight,
)


@dataclass(frozen=True)
class TermOrder:
    weight: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weight", tuple(int(w) for w in self.weight))

    @classmethod
    def grevlex(cls, nvars: int) -> "TermOrder":
        return cls((0,) * nvars)

    def key(self, m: Monomial):
        # grevlex tie-break: smaller exponent in the last variable is bigger
        return (sum(m), monomial_weight(m, self.weight), tuple(-e for e in reversed(m)))

    def leading_monomial(self, f: Polynomial) -> Monomial:
        if f.is_zero():
            raise ValueError("the zero polynomial has no leading monomial")
        return max(f.terms, key=self.key)


@dataclass(frozen=True)
class GroebnerBasis:
    generators: Tuple[Polynomial, ...]
    order: TermOrder
    nvars: int
    auto_reduced: bool = True
    leading: Tuple[Monomial, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(
            self, "leading", tuple(self.order.leading_monomial(g) for g in self.generators)
        )

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


def _monic(f: Polynomial, order: TermOrder) -> Polynomial:
    lc = f.terms[order.leading_monomial(f)]
    return f if lc == 1 else f.scale(1 / lc)


def _reduce(
    terms: Dict[Monomial, Fraction],
    basis: Sequence[Tuple[Monomial, Polynomial]],
    order: TermOrder,
) -> Dict[Monomial, Fraction]:
    """Multivariate division of ``terms`` by monic ``basis``; returns the remainder."""
    p = dict(terms)
    rem: Dict[Monomial, Fraction] = {}
    key = order.key
    while p:
        m = max(p, key=key)
        c = p[m]
        for lead, g in basis:
            if monomial_divides(lead, m):
                q = monomial_quotient(m, lead)
                for gm, gc in g.terms.items():
                    mm = tuple(a + b for a, b in zip(gm, q))
                    v = p.get(mm, 0) - c * gc
                    if v:
                        p[mm] = v
                    else:
                        p.pop(mm, None)
                break
        else:
            rem[m] = c
            del p[m]
    return rem


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Fully reduced remainder of ``f`` modulo ``G`` under ``G.order``."""
    if f.nvars != G.nvars:
        raise ValueError("polynomial and basis live in different rings")
    basis = list(zip(G.leading, G.generators))
    return Polynomial._raw(_reduce(f.terms, basis, G.order), f.nvars)


def _spoly(f: Polynomial, lf: Monomial, g: Polynomial, lg: Monomial) -> Dict[Monomial, Fraction]:
    # f, g monic
    lcm = monomial_lcm(lf, lg)
    a = f.mul_term(monomial_quotient(lcm, lf), Fraction(1))
    b = g.mul_term(monomial_quotient(lcm, lg), Fraction(1))
    return (a - b).terms


def buchberger(generators: Sequence[Polynomial], order: TermOrder) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by homogeneous ``generators``.

    Uses the product criterion and Buchberger's chain criterion, and
    processes critical pairs by increasing degree of their lcm.
    """
    nvars = len(order.weight)
    if nvars == 0:
        raise ValueError("empty ambient: the polynomial ring needs at least one variable")
    for g in generators:
        if g.nvars != nvars:
            raise ValueError(f"generator {g} has {g.nvars} variables, order has {nvars}")
        if not g.is_homogeneous():
            raise ValueError(f"generator is not homogeneous: {g}")

    G: List[Polynomial] = []
    leads: List[Monomial] = []
    pairs: set = set()

    def add(h: Polynomial) -> None:
        h = _monic(h, order)
        lh = order.leading_monomial(h)
        idx = len(G)
        G.append(h)
        leads.append(lh)
        pairs.update((i, idx) for i in range(idx))

    for g in sorted((g for g in generators if not g.is_zero()), key=lambda p: p.degree()):
        r = _reduce(g.terms, [(leads[i], G[i]) for i in range(len(G))], order)
        if r:
            add(Polynomial._raw(r, nvars))

    while pairs:
        i, j = min(pairs, key=lambda ij: (sum(monomial_lcm(leads[ij[0]], leads[ij[1]])), ij))
        pairs.discard((i, j))
        li, lj = leads[i], leads[j]
        lcm = monomial_lcm(li, lj)
        # product criterion: coprime leading monomials
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        # chain criterion
        chained = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if monomial_divides(leads[k], lcm):
                ik = (min(i, k), max(i, k))
                jk = (min(j, k), max(j, k))
                if ik not in pairs and jk not in pairs:
                    chained = True
                    break
        if chained:
            continue
        s = _spoly(G[i], li, G[j], lj)
        r = _reduce(s, list(zip(leads, G)), order)
        if r:
            add(Polynomial._raw(r, nvars))

    return GroebnerBasis(tuple(_interreduce(G, leads, order)), order, nvars)


def _interreduce(G: List[Polynomial], leads: List[Monomial], order: TermOrder) -> List[Polynomial]:
    keep = []
    for i, li in enumerate(leads):
        redundant = False
        for j, lj in enumerate(leads):
            if i == j:
                continue
            if monomial_divides(lj, li) and (lj != li or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(i)
    minimal = [(leads[i], G[i]) for i in keep]
    reduced = []
    for idx, (lead, g) in enumerate(minimal):
        others = [pair for k, pair in enumerate(minimal) if k != idx]
        tail = {m: c for m, c in g.terms.items() if m != lead}
        r = _reduce(tail, others, order)
        r[lead] = Fraction(1)
        reduced.append(Polynomial._raw(r, g.nvars))
    reduced.sort(key=lambda p: order.key(order.leading_monomial(p)), reverse=True)
    return reduced


def weighted_initial(f: Polynomial, c: Sequence[int]) -> Polynomial:
    """Sum of the terms of ``f`` whose weight ``<a, c>`` is maximal."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no initial form")
    if len(c) != f.nvars:
        raise ValueError("weight vector length does not match the number of variables")
    weights = {m: monomial_weight(m, c) for m in f.terms}
    top = max(weights.values())
    return Polynomial._raw({m: f.terms[m] for m, w in weights.items() if w == top}, f.nvars)


def initial_ideal(ideal: Sequence[Polynomial], c: Sequence[int]) -> List[Polynomial]:
    """Generators of the flat limit of ``ideal`` under the weights ``c``.

    These are the ``c``-initial forms of a Groebner basis for the
    weight-refined order, and they form a Groebner basis of the initial
    ideal under plain grevlex.
    """
    G = buchberger(ideal, TermOrder(tuple(c)))
    return [weighted_initial(g, c) for g in G.generators]
