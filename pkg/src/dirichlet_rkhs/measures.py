"""Probability measures on the disk and the plane, and tensor quadrature for them.

The disk measure is ``|z|^(2 beta) (R^2 - |z|^2)^alpha / (R^(2(alpha+beta+1)) B(alpha+1, beta+1)) dA``
and the Fock measure is ``theta^(beta+1) / Gamma(beta+1) |z|^(2 beta) exp(-theta |z|^2) dA``,
with ``dA = dx dy / pi`` and ``beta = beta0 + p``.

Radial rules are Gauss rules for the *base* weight ``t^beta0`` (Jacobi on
(0, 1) or generalized Laguerre on (0, inf)); the extra ``t^p`` is folded into
the weights. The rule therefore integrates ``t^k`` exactly for every
``k >= -p`` up to the Gauss degree, which is what Laurent integrands with a
pole of order at most ``p`` need after the angular average.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, QuadratureError
from .specfun import beta as beta_fn
from .specfun import lgamma, pochhammer

DEFAULT_N_RADIAL = 128
DEFAULT_N_ANGULAR = 256


def _check_beta0(beta0: float) -> None:
    if not -1.0 < beta0 <= 0.0:
        raise DomainError(f"beta0 must lie in (-1, 0], got {beta0}")


def _check_p(p: int) -> None:
    if int(p) != p or p < 0:
        raise DomainError(f"p must be a non-negative integer, got {p}")


@dataclass(frozen=True)
class DiskMeasureParams:
    alpha: float
    beta0: float
    p: int = 0
    R: float = 1.0

    def __post_init__(self):
        if not self.alpha > -1:
            raise DomainError(f"alpha must exceed -1, got {self.alpha}")
        _check_beta0(self.beta0)
        _check_p(self.p)
        if not self.R > 0:
            raise DomainError(f"R must be positive, got {self.R}")

    @property
    def beta(self) -> float:
        return self.beta0 + self.p


@dataclass(frozen=True)
class FockMeasureParams:
    theta: float
    beta0: float
    p: int = 0

    def __post_init__(self):
        if not self.theta > 0:
            raise DomainError(f"theta must be positive, got {self.theta}")
        _check_beta0(self.beta0)
        _check_p(self.p)

    @property
    def beta(self) -> float:
        return self.beta0 + self.p


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Tensor rule: radii with probability weights, times a uniform angular grid.

    ``radial_nodes`` are radii |z| (not the substituted variable t).
    """

    radial_nodes: np.ndarray
    radial_weights: np.ndarray
    angular_count: int

    def __post_init__(self):
        nodes = np.asarray(self.radial_nodes, dtype=float)
        weights = np.asarray(self.radial_weights, dtype=float)
        if nodes.shape != weights.shape or nodes.ndim != 1 or nodes.size == 0:
            raise QuadratureError("radial nodes and weights must be equal-length 1-D arrays")
        if np.any(nodes <= 0) or np.any(np.diff(nodes) <= 0):
            raise QuadratureError("radial nodes must be positive and strictly increasing")
        if np.any(weights <= 0):
            raise QuadratureError("radial weights must be positive")
        if abs(weights.sum() - 1.0) > 1e-12:
            raise QuadratureError(f"radial weights sum to {weights.sum()!r}, expected 1")
        if self.angular_count < 1:
            raise QuadratureError("angular_count must be positive")
        nodes.flags.writeable = False
        weights.flags.writeable = False
        object.__setattr__(self, "radial_nodes", nodes)
        object.__setattr__(self, "radial_weights", weights)

    @property
    def angles(self) -> np.ndarray:
        return 2.0 * np.pi * np.arange(self.angular_count) / self.angular_count

    def points(self) -> np.ndarray:
        """Complex nodes, shape (n_radial, n_angular)."""
        return self.radial_nodes[:, None] * np.exp(1j * self.angles)[None, :]

    def weights(self) -> np.ndarray:
        return np.repeat(self.radial_weights[:, None], self.angular_count, axis=1) / self.angular_count

    def integrate(self, values: np.ndarray) -> complex:
        return complex(np.sum(self.weights() * values))


# -- Golub-Welsch ------------------------------------------------------------

def _jacobi_recurrence_01(n: int, a: float, b: float) -> tuple[np.ndarray, np.ndarray]:
    """Monic recurrence for weight (1-t)^a t^b on (0, 1).

    Returns (diag[0..n-1], offdiag_sq[1..n-1]).
    """
    k = np.arange(n, dtype=float)
    s = 2.0 * k + a + b
    diag = np.empty(n)
    diag[0] = (b - a) / (a + b + 2.0)
    if n > 1:
        diag[1:] = (b * b - a * a) / (s[1:] * (s[1:] + 2.0))
    off = np.empty(max(n - 1, 0))
    if n > 1:
        off[0] = 4.0 * (1 + a) * (1 + b) / ((2 + a + b) ** 2 * (3 + a + b))
        kk = k[2:]
        ss = s[2:]
        off[1:] = 4.0 * kk * (kk + a) * (kk + b) * (kk + a + b) / (ss ** 2 * (ss + 1.0) * (ss - 1.0))
    # map x in [-1, 1] to t = (1 + x) / 2
    return 0.5 * (1.0 + diag), off / 4.0


def _laguerre_recurrence(n: int, b: float) -> tuple[np.ndarray, np.ndarray]:
    k = np.arange(n, dtype=float)
    return 2.0 * k + b + 1.0, k[1:] * (k[1:] + b)


def _christoffel_weights(nodes: np.ndarray, diag: np.ndarray, off_sq: np.ndarray) -> np.ndarray:
    """w_i = 1 / sum_k phat_k(t_i)^2 for orthonormal phat (unit total mass).

    Running values are rescaled per node so the sum never overflows, which
    keeps tiny tail weights accurate in the relative sense.
    """
    n = diag.size
    off = np.sqrt(off_sq)
    p_prev = np.zeros_like(nodes)
    p_cur = np.ones_like(nodes)
    total = np.ones_like(nodes)
    log_scale = np.zeros_like(nodes)
    for k in range(n - 1):
        p_next = ((nodes - diag[k]) * p_cur - (off[k - 1] * p_prev if k > 0 else 0.0)) / off[k]
        p_prev, p_cur = p_cur, p_next
        total = total + p_cur * p_cur
        big = np.abs(p_cur) > 1e100
        if np.any(big):
            f = np.where(big, 1e-100, 1.0)
            p_prev = p_prev * f
            p_cur = p_cur * f
            total = total * f * f
            log_scale = log_scale + np.where(big, 2.0 * 100.0 * math.log(10.0), 0.0)
    return np.exp(-np.log(total) - log_scale)


def _newton_polish(nodes: np.ndarray, diag: np.ndarray, off_sq: np.ndarray,
                   steps: int = 2) -> np.ndarray:
    """Refine eigenvalues as roots of the degree-n orthogonal polynomial."""
    n = diag.size
    off = np.sqrt(np.append(off_sq, 1.0))  # the last step only scales p_n
    for _ in range(steps):
        p_prev = np.zeros_like(nodes)
        p_cur = np.ones_like(nodes)
        d_prev = np.zeros_like(nodes)
        d_cur = np.zeros_like(nodes)
        for k in range(n):
            back = off[k - 1] if k > 0 else 0.0
            p_next = ((nodes - diag[k]) * p_cur - back * p_prev) / off[k]
            d_next = (p_cur + (nodes - diag[k]) * d_cur - back * d_prev) / off[k]
            p_prev, p_cur, d_prev, d_cur = p_cur, p_next, d_cur, d_next
            scale = np.maximum(np.abs(p_cur), np.abs(d_cur))
            f = np.where(scale > 1e100, 1e-100, 1.0)
            p_prev, p_cur, d_prev, d_cur = p_prev * f, p_cur * f, d_prev * f, d_cur * f
        step = p_cur / d_cur
        nodes = nodes - np.where(np.isfinite(step), step, 0.0)
    return nodes


def _golub_welsch(diag: np.ndarray, off_sq: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    n = diag.size
    jac = np.diag(diag)
    if n > 1:
        off = np.sqrt(off_sq)
        jac += np.diag(off, 1) + np.diag(off, -1)
    try:
        nodes = np.linalg.eigvalsh(jac)
    except np.linalg.LinAlgError as exc:
        raise QuadratureError(f"Jacobi matrix eigensolver failed: {exc}") from exc
    nodes = _newton_polish(np.sort(nodes), diag, off_sq)
    if np.any(np.diff(nodes) <= 0):
        raise QuadratureError("node refinement lost the ordering")
    weights = _christoffel_weights(nodes, diag, off_sq)
    if not (np.all(np.isfinite(nodes)) and np.all(np.isfinite(weights))):
        raise QuadratureError("non-finite nodes or weights")
    return nodes, weights


def gauss_jacobi_01(n: int, alpha: float, beta: float) -> tuple[np.ndarray, np.ndarray]:
    """Gauss nodes/weights on (0, 1) for (1-t)^alpha t^beta / B(alpha+1, beta+1)."""
    if n < 1:
        raise QuadratureError("need at least one node")
    if not (alpha > -1 and beta > -1):
        raise QuadratureError("Jacobi exponents must exceed -1")
    return _golub_welsch(*_jacobi_recurrence_01(n, alpha, beta))


def gauss_laguerre(n: int, beta: float) -> tuple[np.ndarray, np.ndarray]:
    """Gauss nodes/weights on (0, inf) for t^beta e^-t / Gamma(beta+1)."""
    if n < 1:
        raise QuadratureError("need at least one node")
    if not beta > -1:
        raise QuadratureError("Laguerre exponent must exceed -1")
    return _golub_welsch(*_laguerre_recurrence(n, beta))


# -- measures ----------------------------------------------------------------

def disk_density(z: complex, params: DiskMeasureParams) -> float:
    """Density of the disk measure with respect to dA."""
    r2 = abs(z) ** 2
    R2 = params.R ** 2
    beta = params.beta
    if r2 >= R2:
        raise DomainError(f"|z| = {abs(z)} is outside the disk of radius {params.R}")
    if r2 == 0.0 and beta < 0:
        raise DomainError("density is singular at z = 0 when beta < 0")
    norm = R2 ** (params.alpha + beta + 1.0) * beta_fn(params.alpha + 1.0, beta + 1.0)
    return (r2 ** beta) * (R2 - r2) ** params.alpha / norm


def fock_density(z: complex, params: FockMeasureParams) -> float:
    """Density of the Fock measure with respect to dA."""
    r2 = abs(z) ** 2
    beta = params.beta
    if r2 == 0.0 and beta < 0:
        raise DomainError("density is singular at z = 0 when beta < 0")
    log_c = (beta + 1.0) * math.log(params.theta) - lgamma(beta + 1.0)
    return math.exp(log_c - params.theta * r2) * r2 ** beta


def _check_sizes(n_radial: int, n_angular: int) -> None:
    if n_radial < 2:
        raise DomainError("n_radial must be >= 2")
    if n_angular < 4:
        raise DomainError("n_angular must be >= 4")


def build_disk_quadrature(params: DiskMeasureParams, n_radial: int = DEFAULT_N_RADIAL,
                          n_angular: int = DEFAULT_N_ANGULAR) -> QuadratureRule:
    """Rule for the disk measure via t = |z|^2 / R^2."""
    _check_sizes(n_radial, n_angular)
    t, w = gauss_jacobi_01(n_radial, params.alpha, params.beta0)
    # fold t^p into the weights and renormalize: sum w t^p = (b0+1)_p / (alpha+b0+2)_p
    fold = pochhammer(params.beta0 + 1.0, params.p) / pochhammer(params.alpha + params.beta0 + 2.0, params.p)
    w = w * t ** params.p / fold
    return QuadratureRule(params.R * np.sqrt(t), w, n_angular)


def build_fock_quadrature(params: FockMeasureParams, n_radial: int = DEFAULT_N_RADIAL,
                          n_angular: int = DEFAULT_N_ANGULAR) -> QuadratureRule:
    """Rule for the Fock measure via t = theta |z|^2."""
    _check_sizes(n_radial, n_angular)
    t, w = gauss_laguerre(n_radial, params.beta0)
    w = w * t ** params.p / pochhammer(params.beta0 + 1.0, params.p)
    return QuadratureRule(np.sqrt(t / params.theta), w, n_angular)


def circle_rule(n_angular: int = DEFAULT_N_ANGULAR, radius: float = 1.0) -> QuadratureRule:
    """Uniform probability measure on the circle |z| = radius."""
    if n_angular < 4:
        raise DomainError("n_angular must be >= 4")
    return QuadratureRule(np.array([radius]), np.array([1.0]), n_angular)


def inner_product(f: Callable[[np.ndarray], np.ndarray], g: Callable[[np.ndarray], np.ndarray],
                  rule: QuadratureRule) -> complex:
    """Quadrature estimate of the integral of f * conj(g) against the rule's measure."""
    pts = rule.points()
    return rule.integrate(np.asarray(f(pts)) * np.conj(np.asarray(g(pts))))
