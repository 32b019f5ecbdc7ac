"""Chow-norm derivative, the function A(t), and the I_s diagnostic on P^1.

Supported configurations live on a rational normal curve ``X_l`` in
``P^l``.  The coordinate ``zeta_j`` restricts to the section ``z^j``, so a
standard monomial ``zeta^a`` of degree ``gamma`` restricts to ``z^m`` with
``m = sum j a_j``; when this is a bijection onto ``0 .. k`` every monomial
section ``z^m`` of degree ``k`` carries a single weight.  This covers
product configurations (weights affine in ``j``) and torus-equivariant
degenerations such as the conic's.  ``A(t)`` and ``I_s`` need the
automorphism ``z -> t^d z`` and so are limited to product configurations.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.special import expit, logsumexp

from ..algebra import standard_monomials
from ..errors import InputError, TrivialConfigurationError
from ..geometry import TestConfiguration
from ..invariants import analyze
from ..sequences import mu_gamma
from .quadrature import Estimate, QuadratureError, integrate_line, integrate_radial
from .scene import CurveScene


@dataclass(frozen=True)
class SectionWeights:
    gamma: int
    k: int
    weights: Tuple[Fraction, ...]  # dual weight of z^m, indexed by m
    b: Tuple[Fraction, ...]  # centered
    norm1: Fraction
    norm_inf: Fraction

    @property
    def delta(self) -> Fraction:
        return self.norm_inf / self.norm1


def _on_rational_normal_curve(tc: TestConfiguration) -> bool:
    v = tc.variety
    if v.dim != 1 or v.c1n != 1 or v.nvars != v.exponent + 1:
        return False
    for g in v.ideal:
        collapsed: Dict[int, Fraction] = {}
        for mono, coeff in g.terms.items():
            m = sum(j * e for j, e in enumerate(mono))
            collapsed[m] = collapsed.get(m, 0) + coeff
        if any(collapsed.values()):
            return False
    return True


def product_slope(tc: TestConfiguration) -> Optional[Tuple[int, Fraction]]:
    """``(c_0, d)`` when ``c_j = c_0 + d * j``, else ``None``."""
    c = tc.weights
    d = Fraction(c[1] - c[0]) if len(c) > 1 else Fraction(0)
    if all(c[j] == c[0] + d * j for j in range(len(c))):
        return c[0], d
    return None


def section_weights(tc: TestConfiguration, gamma: int) -> SectionWeights:
    if not _on_rational_normal_curve(tc):
        raise InputError("numeric checks need a rational normal curve z_j = z^j in P^l")
    k = gamma * tc.exponent
    by_degree: Dict[int, int] = {}
    for a in standard_monomials(tc.central_leading, gamma, tc.nvars):
        m = sum(j * e for j, e in enumerate(a))
        if m in by_degree:
            raise InputError(f"two standard monomials restrict to z^{m}; weights are not diagonal in z^m")
        by_degree[m] = sum(x * y for x, y in zip(a, tc.weights))
    if sorted(by_degree) != list(range(k + 1)):
        raise InputError("standard monomials do not restrict to a monomial basis of degree k")
    mg = mu_gamma(tc, gamma)
    weights = tuple(Fraction(by_degree[m]) for m in range(k + 1))
    b = tuple(w - mg.norms.cbar for w in weights)
    return SectionWeights(gamma, k, weights, b, mg.norms.norm1, mg.norms.norm_inf)


def log_gram_diagonal(scene: CurveScene, k: int) -> np.ndarray:
    """``log <z^m, z^m>`` for ``m = 0 .. k``; off-diagonal entries vanish by rotation invariance."""
    def f(u):
        return np.stack([np.exp(scene.log_section_norm2(m, k, u)) * scene.moment_prime(u) for m in range(k + 1)])

    est = integrate_radial(f, scene.radial_nodes, scene.tol, relative=True)
    return np.log(est.value)


def _tilted(sw: SectionWeights, log_t: float, y: np.ndarray, log_gram: np.ndarray):
    """Moments of ``p_m ~ t^{2 b_m} |tau_m|^2`` at each node: ``(E[b], Var[m])``.

    The common factor ``h^k`` cancels, leaving ``t^{2 b_m} |z|^{2m} / <z^m, z^m>``.
    """
    m = np.arange(sw.k + 1)
    b = np.array([float(x) for x in sw.b])
    logq = (2.0 * log_t * b - log_gram)[:, None] + m[:, None] * y[None, :]
    p = np.exp(logq - logsumexp(logq, axis=0, keepdims=True))
    eb = b @ p
    em = m @ p
    var = np.sum(p * (m[:, None] - em) ** 2, axis=0)
    return eb, var


def _window(sw: SectionWeights, log_t: float, log_gram: np.ndarray, pad: float = 40.0) -> float:
    # p_m and p_{m+1} cross where y = log G_{m+1} - log G_m - 2 log t (b_{m+1} - b_m);
    # away from the crossings the integrand decays like exp(-|y|)
    b = np.array([float(x) for x in sw.b])
    cross = np.diff(log_gram) - 2.0 * log_t * np.diff(b)
    return float(np.max(np.abs(cross))) + pad if cross.size else pad


def _theta_s(sw: SectionWeights, eb):
    # d theta / ds = (1/2pi) * 2 E[b] / (k ||mu||_inf)
    return eb / (math.pi * float(sw.k * sw.norm_inf))


def f_dot_estimate(scene: CurveScene, tc: TestConfiguration, gamma: int, s: float) -> Estimate:
    """``k * delta_k * int (d theta/ds) (i ddbar theta)`` at ``t = exp(s / ||mu_gamma||_inf)``."""
    sw = section_weights(tc, gamma)
    if sw.norm_inf == 0:
        raise TrivialConfigurationError("||mu_gamma||_inf = 0")
    log_t = s / float(sw.norm_inf)
    log_gram = log_gram_diagonal(scene, sw.k)

    def integrand(y):
        eb, var = _tilted(sw, log_t, y, log_gram)
        # i ddbar theta = (1/2pi) (Var / k) dy dphi; the phi integral gives 2 pi
        return _theta_s(sw, eb) * var / sw.k

    est = integrate_line(integrand, _window(sw, log_t, log_gram), scene.radial_nodes, scene.tol)
    scale = sw.k * float(sw.delta)
    return Estimate(scale * est.value, scale * est.error)


def f_dot(scene: CurveScene, tc: TestConfiguration, gamma: int, s: float) -> float:
    return f_dot_estimate(scene, tc, gamma, s).value


def _require_product(tc: TestConfiguration) -> Tuple[int, Fraction]:
    if not _on_rational_normal_curve(tc):
        raise InputError("numeric checks need a rational normal curve z_j = z^j in P^l")
    pd = product_slope(tc)
    if pd is None:
        raise InputError("A(t) and I_s need a product configuration: weights affine in the index")
    return pd


def _omega_t(scene: CurveScene, y, shift):
    # omega pulled back by z -> t^d z, per dy dphi and without the 1/2pi; shift = 2 d log t
    yw = y + shift
    return scene.moment_prime_y(yw) * expit(yw) * expit(-yw)


def eta(scene: CurveScene, tc: TestConfiguration, t: float, y) -> np.ndarray:
    """``eta_t = ln(h^-1 transported by z -> t^d z)`` plus the twist ``(2 c_0 / l) ln t``.

    ``y = log |z|^2``.
    """
    c0, d = _require_product(tc)
    shift = 2.0 * float(d) * math.log(t)
    return ((2.0 * c0 / tc.exponent) * math.log(t) + scene.log_h_inverse_y(np.asarray(y) + shift)) / (2.0 * math.pi)


def A_of_t_estimate(scene: CurveScene, tc: TestConfiguration, t: float, step: float = 1e-4) -> Estimate:
    """``lambda^-1 int t (d eta_t/dt) omega(t)`` with centered differences in ``t``."""
    if not 0.0 < t <= 1.0:
        raise InputError("t must lie in (0, 1]")
    _, d = _require_product(tc)
    shift = 2.0 * float(d) * math.log(t)

    def integrand(y, hstep=step):
        h = hstep * t
        t_deta = t * (eta(scene, tc, t + h, y) - eta(scene, tc, t - h, y)) / (2.0 * h)
        return t_deta * _omega_t(scene, y, shift)

    half = 40.0 + abs(shift)
    est = integrate_line(integrand, half, scene.radial_nodes, scene.tol)
    halved = integrate_line(lambda y: integrand(y, step / 2), half, scene.radial_nodes, scene.tol)
    fd_err = abs(halved.value - est.value)
    if fd_err > scene.tol:
        raise QuadratureError(f"finite-difference step halving changed A(t) by {fd_err:.3e}")
    lam = tc.variety.c1n / math.pi
    return Estimate(est.value / lam, max(est.error, fd_err) / lam)


def A_of_t(scene: CurveScene, tc: TestConfiguration, t: float) -> float:
    return A_of_t_estimate(scene, tc, t).value


def I_s(scene: CurveScene, tc: TestConfiguration, gamma: int, s: float) -> float:
    """``delta_k int (d theta/ds)(i ddbar theta - omega(t))``, the error term of the derivative identity."""
    _, d = _require_product(tc)
    sw = section_weights(tc, gamma)
    if sw.norm_inf == 0:
        raise TrivialConfigurationError("||mu_gamma||_inf = 0")
    log_t = s / float(sw.norm_inf)
    shift = 2.0 * float(d) * log_t
    log_gram = log_gram_diagonal(scene, sw.k)

    def integrand(y):
        eb, var = _tilted(sw, log_t, y, log_gram)
        return _theta_s(sw, eb) * (var / sw.k - _omega_t(scene, y, shift))

    half = _window(sw, log_t, log_gram) + abs(shift)
    return float(sw.delta) * integrate_line(integrand, half, scene.radial_nodes, scene.tol).value


@dataclass(frozen=True)
class SeriesPoint:
    x: float
    value: float
    error: float


def f_dot_series(scene: CurveScene, tc: TestConfiguration, gamma: int, s_values: Sequence[float]) -> List[SeriesPoint]:
    out = []
    for s in s_values:
        e = f_dot_estimate(scene, tc, gamma, s)
        out.append(SeriesPoint(float(s), e.value, e.error))
    return out


def A_series(scene: CurveScene, tc: TestConfiguration, t_values: Sequence[float]) -> List[SeriesPoint]:
    out = []
    for t in t_values:
        e = A_of_t_estimate(scene, tc, t)
        out.append(SeriesPoint(float(t), e.value, e.error))
    return out


@dataclass(frozen=True)
class DoubleLimitRow:
    gamma: int
    s: float
    f_dot: float
    T: float


def double_limit_table(
    scene: CurveScene, tc: TestConfiguration, gammas: Sequence[int], s_values: Sequence[float]
) -> List[DoubleLimitRow]:
    """``f_dot_gamma(s)`` beside the limit-formula term ``T_gamma``; a report, not a check."""
    from ..sequences import term_value, items_from_mu_gamma

    bundle = analyze(tc, max(max(gammas), tc.dim + 4))
    items = {it.exponent: it for it in items_from_mu_gamma(tc, bundle)}
    rows = []
    for g in gammas:
        T = term_value(items[g * tc.exponent], tc.variety.c1n).value
        for s in s_values:
            rows.append(DoubleLimitRow(g, float(s), f_dot(scene, tc, g, s), T))
    return rows
