"""The projective line with a rotation-invariant metric on ``O(1)``.

The fiber metric is ``|1|_h^2 = (1 - u) * exp(-epsilon * u)`` in the affine
chart, so ``epsilon = 0`` is Fubini-Study.  Its curvature form is
``omega = (1 / 2 pi) * mu'(u) du dphi`` with moment map
``mu(u) = u + epsilon * u * (1 - u)``; ``int omega = 1`` for every
``|epsilon| < 1``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import expit, log_expit

from ..errors import InputError
from .quadrature import DEFAULT_ANGULAR, DEFAULT_RADIAL, DEFAULT_TOL, AngularRule, RadialRule


def ln(x):
    """``(1 / 2 pi) log``; the only place the factor is applied."""
    return np.log(x) / (2.0 * math.pi)


@dataclass(frozen=True)
class CurveScene:
    epsilon: float = 0.0
    radial_nodes: int = DEFAULT_RADIAL
    angular_nodes: int = DEFAULT_ANGULAR
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        if not abs(self.epsilon) < 1:
            raise InputError("epsilon must satisfy |epsilon| < 1 for the metric to be positive")
        if self.radial_nodes < 2 or self.angular_nodes < 1:
            raise InputError("node counts must be positive")

    @property
    def is_fubini_study(self) -> bool:
        return self.epsilon == 0.0

    def doubled(self) -> "CurveScene":
        return CurveScene(self.epsilon, 2 * self.radial_nodes, 2 * self.angular_nodes, self.tol)

    # potential of h^-1 per unit degree, as a function of u
    def log_h_inverse(self, u):
        return -np.log1p(-u) + self.epsilon * u

    def moment(self, u):
        return u + self.epsilon * u * (1.0 - u)

    def moment_prime(self, u):
        return 1.0 + self.epsilon * (1.0 - 2.0 * u)

    def log_h_inverse_y(self, y):
        """Same potential in ``y = log |z|^2``, accurate near both poles."""
        return -log_expit(-y) + self.epsilon * expit(y)

    def moment_prime_y(self, y):
        return self.moment_prime(expit(y))

    def log_section_norm2(self, i: int, m: int, u):
        """``log |z^i|^2_{h^m}`` for the degree-``m`` monomial section ``z^i``."""
        return i * np.log(u) + (m - i) * np.log1p(-u) - m * self.epsilon * u

    def radial_rule(self) -> RadialRule:
        return RadialRule.gauss(self.radial_nodes)

    def angular_rule(self, min_nodes: int = 1) -> AngularRule:
        return AngularRule.uniform(max(self.angular_nodes, min_nodes))

    def total_volume(self) -> float:
        r = self.radial_rule()
        return float(np.sum(self.moment_prime(r.nodes) * r.weights))
