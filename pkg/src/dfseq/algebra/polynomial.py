"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is stored as a map from exponent tuples to nonzero
:class:`fractions.Fraction` coefficients.  Instances are treated as
immutable: every arithmetic operation returns a new object.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

Monomial = Tuple[int, ...]
Scalar = Union[int, Fraction]


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True if ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def monomial_quotient(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_weight(m: Monomial, c: Iterable[int]) -> int:
    return sum(x * w for x, w in zip(m, c))


def monomials_of_degree(degree: int, nvars: int) -> Iterator[Monomial]:
    """All exponent vectors of the given total degree, in descending lex order.

    >>> list(monomials_of_degree(2, 2))
    [(2, 0), (1, 1), (0, 2)]
    """
    if nvars == 0:
        if degree == 0:
            yield ()
        return
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(degree - first, nvars - 1):
            yield (first,) + rest


class Polynomial:
    """Polynomial in ``nvars`` variables ``z0 .. z{nvars-1}`` over the rationals."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms: Mapping[Monomial, Scalar], nvars: int):
        if nvars < 0:
            raise ValueError("nvars must be non-negative")
        clean: Dict[Monomial, Fraction] = {}
        for mono, coeff in terms.items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} does not have {nvars} exponents")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            coeff = Fraction(coeff)
            if coeff:
                clean[mono] = clean.get(mono, Fraction(0)) + coeff
                if not clean[mono]:
                    del clean[mono]
        self.terms = clean
        self.nvars = nvars

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction], nvars: int) -> "Polynomial":
        # trusted constructor: terms already clean
        p = object.__new__(cls)
        p.terms = terms
        p.nvars = nvars
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw({}, nvars)

    @classmethod
    def constant(cls, value: Scalar, nvars: int) -> "Polynomial":
        return cls({(0,) * nvars: value}, nvars)

    @classmethod
    def variable(cls, index: int, nvars: int) -> "Polynomial":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for {nvars} variables")
        mono = tuple(1 if i == index else 0 for i in range(nvars))
        return cls._raw({mono: Fraction(1)}, nvars)

    @classmethod
    def monomial(cls, mono: Monomial, coeff: Scalar = 1) -> "Polynomial":
        return cls({tuple(mono): coeff}, len(mono))

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: "Polynomial") -> None:
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self.terms.items()}, self.nvars)

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Polynomial._raw(out, self.nvars)

    __rmul__ = __mul__

    def scale(self, factor: Scalar) -> "Polynomial":
        factor = Fraction(factor)
        if not factor:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw({m: c * factor for m, c in self.terms.items()}, self.nvars)

    def mul_term(self, mono: Monomial, coeff: Fraction) -> "Polynomial":
        return Polynomial._raw(
            {monomial_mul(m, mono): c * coeff for m, c in self.terms.items()}, self.nvars
        )

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(1, self.nvars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- comparison / hashing ---------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- rendering --------------------------------------------------------
    def sorted_terms(self):
        """Terms in descending lexicographic order of exponent vectors."""
        return sorted(self.terms.items(), key=lambda mc: mc[0], reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for i, (mono, coeff) in enumerate(self.sorted_terms()):
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            factors = [
                f"z{j}" if e == 1 else f"z{j}^{e}" for j, e in enumerate(mono) if e
            ]
            if not factors:
                body = _fmt_coeff(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = _fmt_coeff(mag) + "*" + "*".join(factors)
            if i == 0:
                pieces.append(("-" if sign == "-" else "") + body)
            else:
                pieces.append(f" {sign} {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r}, nvars={self.nvars})"


def _fmt_coeff(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
