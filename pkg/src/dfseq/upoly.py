"""Univariate polynomials with Fraction coefficients, stored low degree first."""
from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

Coeffs = Tuple[Fraction, ...]


def trim(coeffs: Sequence[Fraction]) -> Coeffs:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(Fraction(c) for c in out)


def evaluate(coeffs: Sequence[Fraction], x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def degree(coeffs: Sequence[Fraction]) -> int:
    """Degree of the polynomial; -1 for the zero polynomial."""
    return len(trim(coeffs)) - 1


def interpolate(points: Sequence[Tuple[int, Fraction]]) -> Coeffs:
    """Unique polynomial of degree < len(points) through ``points`` (Newton form)."""
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    table: List[Fraction] = [Fraction(y) for _, y in points]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - j])
    # expand Newton form into monomial coefficients
    coeffs: List[Fraction] = [Fraction(0)] * n
    basis: List[Fraction] = [Fraction(1)]
    for j in range(n):
        for i, b in enumerate(basis):
            coeffs[i] += table[j] * b
        # basis *= (x - xs[j])
        nb = [Fraction(0)] * (len(basis) + 1)
        for i, b in enumerate(basis):
            nb[i + 1] += b
            nb[i] -= xs[j] * b
        basis = nb
    return trim(coeffs)


def fmt(coeffs: Sequence[Fraction], var: str = "k") -> str:
    """Human-readable rendering, highest degree first."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        terms.append(f"{c}" + (f"*{mono}" if mono else ""))
    return " + ".join(terms) if terms else "0"
