"""Exact polynomial algebra: parsing, Groebner bases, initial ideals, standard monomials."""
from .groebner import (
    GroebnerBasis,
    TermOrder,
    buchberger,
    initial_ideal,
    normal_form,
    weighted_initial,
)
from .monomials import (
    WeightCounter,
    quotient_dimension,
    slice_rank,
    standard_monomials,
    standard_weight_counts,
)
from .parse import PolynomialSyntaxError, parse_polynomial
from .polynomial import Monomial, Polynomial, monomials_of_degree

__all__ = [
    "GroebnerBasis",
    "Monomial",
    "Polynomial",
    "PolynomialSyntaxError",
    "TermOrder",
    "WeightCounter",
    "buchberger",
    "initial_ideal",
    "monomials_of_degree",
    "normal_form",
    "parse_polynomial",
    "quotient_dimension",
    "slice_rank",
    "standard_monomials",
    "standard_weight_counts",
    "weighted_initial",
]
