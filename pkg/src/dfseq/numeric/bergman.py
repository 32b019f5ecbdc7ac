"""L^2 Gram matrices of monomial sections and the Bergman function."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np
from scipy.linalg import cholesky, solve_triangular, LinAlgError

from ..errors import InputError
from .quadrature import QuadratureError
from .scene import CurveScene, ln


@dataclass(frozen=True)
class GramMatrix:
    entries: np.ndarray  # complex, Hermitian
    degree: int
    error: float = 0.0  # node-doubling discrepancy


def _section_values(scene: CurveScene, m: int, min_angular: int):
    """Values of the ``h^m``-normalized sections ``z^i`` on the tensor grid.

    Returns ``(values, weights)`` with ``values`` of shape ``(nodes, m + 1)``
    and ``weights`` already including the density of ``omega``.
    """
    r = scene.radial_rule()
    a = scene.angular_rule(min_angular)
    u = r.nodes
    radial = np.stack([np.exp(0.5 * scene.log_section_norm2(i, m, u)) for i in range(m + 1)], axis=-1)
    phase = np.exp(1j * np.outer(a.nodes, np.arange(m + 1)))
    values = (radial[:, None, :] * phase[None, :, :]).reshape(-1, m + 1)
    w = (r.weights * scene.moment_prime(u))[:, None] * (a.weights / (2.0 * math.pi))[None, :]
    return values, w.reshape(-1)


def _gram_once(scene: CurveScene, m: int) -> np.ndarray:
    # angular nodes above 2m keep e^{i(i-j)phi} from aliasing onto a constant
    values, w = _section_values(scene, m, 2 * m + 2)
    g = (values * w[:, None]).T @ values.conj()
    return 0.5 * (g + g.conj().T)


def gram(scene: CurveScene, m: int) -> GramMatrix:
    """``<z^i, z^j> = int (z^i, z^j)_{h^m} omega`` over the monomial basis."""
    if m < 1:
        raise InputError("degree must be at least 1")
    g = _gram_once(scene, m)
    fine = _gram_once(scene.doubled(), m)
    err = float(np.max(np.abs(fine - g)))
    if err > scene.tol * max(1.0, float(np.max(np.abs(fine)))):
        raise QuadratureError(f"Gram matrix of degree {m} unstable under node doubling ({err:.3e})")
    return GramMatrix(fine, m, err)


def orthonormalize(g: Union[GramMatrix, np.ndarray]) -> np.ndarray:
    """Upper-triangular ``T`` with ``T^* g T = I``, from ``g = L L^*``."""
    mat = np.asarray(g.entries if isinstance(g, GramMatrix) else g, dtype=complex)
    try:
        low = cholesky(mat, lower=True)
    except LinAlgError as exc:
        raise InputError("Gram matrix is not positive definite") from exc
    # T = L^{-*}
    return solve_triangular(low.conj().T, np.eye(mat.shape[0]), lower=False)


def bergman_function(scene: CurveScene, k: int) -> np.ndarray:
    """``sum |tau_a|^2_{h^k}`` on the quadrature grid for an orthonormal basis."""
    T = orthonormalize(gram(scene, k))
    values, _ = _section_values(scene, k, 2 * k + 2)
    tau = values @ T
    return np.sum(np.abs(tau) ** 2, axis=-1)


def bergman_deviation(scene: CurveScene, k: int, exponent: int = 1) -> float:
    """``sup - inf`` of ``xi_k = ln((n!/l^n) * rho_k) / k`` over the grid (``n = 1``)."""
    rho = bergman_function(scene, k)
    xi = ln(rho / exponent) / k
    return float(np.max(xi) - np.min(xi))
