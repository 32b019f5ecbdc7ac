"""Quadrature checks of the analytic identities on the projective line."""
from .bergman import GramMatrix, bergman_deviation, bergman_function, gram, orthonormalize
from .chow import (
    A_of_t,
    A_of_t_estimate,
    A_series,
    DoubleLimitRow,
    I_s,
    SectionWeights,
    SeriesPoint,
    double_limit_table,
    eta,
    f_dot,
    f_dot_estimate,
    f_dot_series,
    product_slope,
    section_weights,
)
from .quadrature import Estimate, QuadratureError, integrate_line, integrate_radial
from .scene import CurveScene, ln

__all__ = [
    "A_of_t",
    "A_of_t_estimate",
    "A_series",
    "CurveScene",
    "DoubleLimitRow",
    "Estimate",
    "GramMatrix",
    "I_s",
    "QuadratureError",
    "SectionWeights",
    "SeriesPoint",
    "bergman_deviation",
    "bergman_function",
    "double_limit_table",
    "eta",
    "f_dot",
    "f_dot_estimate",
    "f_dot_series",
    "gram",
    "integrate_line",
    "integrate_radial",
    "ln",
    "orthonormalize",
    "product_slope",
    "section_weights",
]
