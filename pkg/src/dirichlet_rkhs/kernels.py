"""Reproducing kernels of the three Dirichlet-type families.

Each kernel is a function of ``xi = z * conj(w)`` only. Closed forms are a
polynomial head (powers below ``m``), a hypergeometric tail starting at
``xi^m`` and, when ``p > m``, a finite principal part in ``1/xi`` (the
correction sums below). The ``*_series`` functions sum ``xi^n / ||z^n||^2``
directly and serve as oracles.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import ConvergenceError, DomainError
from .spaces import (
    BargmannDirichletParams,
    BergmanDirichletParams,
    HardyDirichletParams,
    norm_sq_table,
)
from .specfun import (
    DEFAULT_MAX_TERMS,
    DEFAULT_REL_TOL,
    SMALL_RUN,
    HypergeomSpec,
    gamma_ratio,
    pfq_eval,
    pochhammer,
)

__all__ = [
    "BOUNDARY_GUARD",
    "bargmann_correction",
    "bargmann_kernel",
    "bargmann_kernel_m0_forms",
    "bargmann_kernel_series",
    "bergman_correction",
    "bergman_kernel",
    "bergman_kernel_m0_forms",
    "bergman_kernel_series",
    "hardy_correction",
    "hardy_kernel",
    "hardy_kernel_series",
    "kernel",
    "kernel_series",
    "kernel_zw",
]

BOUNDARY_GUARD = 0.999
DEFAULT_TRUNCATION = 800


def _as_array(xi):
    arr = np.asarray(xi, dtype=complex)
    return arr, arr.ndim == 0


def _out(values, scalar):
    return complex(values.reshape(())) if scalar else values


def _check_disk(u: np.ndarray, label: str) -> None:
    if not np.all(np.isfinite(u)):
        raise DomainError("xi must be finite")
    if np.any(np.abs(u) >= BOUNDARY_GUARD):
        raise DomainError(f"|xi| must stay below {BOUNDARY_GUARD} of the {label} radius")


def _check_pole(xi: np.ndarray, params) -> None:
    if params.p > params.m and np.any(xi == 0):
        raise DomainError("xi = 0 is a pole of the kernel when p > m")


def _series_budget(u: np.ndarray) -> int:
    """Enough terms for a ratio-|u| series to fall below double precision."""
    r = float(np.max(np.abs(u))) if u.size else 0.0
    if r < 0.5:
        return DEFAULT_MAX_TERMS
    return max(DEFAULT_MAX_TERMS, int(60.0 / -math.log(r)) + 200)


def _pfq(numer, denom, z, max_terms=DEFAULT_MAX_TERMS):
    return pfq_eval(HypergeomSpec(tuple(numer), tuple(denom), max_terms), z)


# --- Bergman type -----------------------------------------------------------

def bergman_correction(xi, params: BergmanDirichletParams):
    """Principal part of the Bergman-Dirichlet kernel (zero unless p > m)."""
    xi, scalar = _as_array(xi)
    m, beta, R2 = params.m, params.beta, params.R ** 2
    ab1 = params.alpha + beta + 1.0
    total = np.zeros_like(xi)
    if params.p > m:
        _check_pole(xi, params)
        ratio = R2 / np.where(xi == 0, 1.0, xi)
        for k in range(params.p - m):
            coef = (gamma_ratio(ab1 - m - k, ab1 + 1.0) * gamma_ratio(beta + 1.0, beta - m - k)
                    / pochhammer(k + 1.0, m) ** 2)
            total = total + coef * ratio ** (k + 1)
        total = total * params.R ** (2 * m)
    return _out(total, scalar)


def bergman_kernel(xi, params: BergmanDirichletParams):
    """Closed-form kernel of the Bergman-Dirichlet space as a function of xi."""
    xi, scalar = _as_array(xi)
    m, beta = params.m, params.beta
    u = xi / params.R ** 2
    _check_disk(u, "squared disk")
    _check_pole(xi, params)
    a, b = params.alpha + beta + 2.0, beta + 1.0
    head = np.zeros_like(xi)
    for n in range(m):
        head = head + pochhammer(a, n) / pochhammer(b, n) * u ** n
    tail = _pfq((1.0, 1.0, 1.0, a), (m + 1.0, m + 1.0, b), u, _series_budget(u))
    tail = tail * xi ** m / math.factorial(m) ** 2
    return _out(head + tail + bergman_correction(xi, params), scalar)


def _coefficient_series(xi: np.ndarray, params, truncation: int) -> np.ndarray:
    lo = params.min_index
    if truncation < lo:
        raise DomainError(f"truncation {truncation} is below the lowest power {lo}")
    with np.errstate(divide="ignore"):
        coef = 1.0 / norm_sq_table(params, lo, truncation)
    acc = np.zeros_like(xi)
    for c in coef[::-1]:
        acc = acc * xi + c
    if lo:
        acc = acc * xi ** lo
    return acc


def bergman_kernel_series(xi, params: BergmanDirichletParams, truncation: int = DEFAULT_TRUNCATION):
    """Brute-force sum of xi^n / ||z^n||^2 for min index <= n <= truncation.

    Summed in ``u = xi / R^2`` against the R = 1 norms, so that ``R^(2n)``
    never under- or overflows: ``||z^n||^2`` carries ``R^(2n)`` below degree
    ``m`` and ``R^(2(n-m))`` elsewhere.
    """
    xi, scalar = _as_array(xi)
    if np.any(np.abs(xi) >= params.R ** 2):
        raise DomainError("series diverges for |xi| >= R^2")
    _check_pole(xi, params)
    unit = BergmanDirichletParams(params.alpha, params.beta0, params.p, 1.0, params.m)
    u = xi / params.R ** 2
    head = np.zeros_like(xi)
    for n in range(min(params.m, truncation + 1)):
        head = head + u ** n / norm_sq_table(unit, n, n)[0]
    if params.m > 0:
        # the same table with the head powers dropped
        lo, m = params.min_index, params.m
        with np.errstate(divide="ignore"):
            coef = 1.0 / norm_sq_table(unit, lo, truncation)
        coef[max(0, -lo):max(0, -lo) + m] = 0.0
        acc = np.zeros_like(xi)
        for c in coef[::-1]:
            acc = acc * u + c
        if lo:
            acc = acc * u ** lo
        tail = acc * params.R ** (2 * m)
    else:
        tail = _coefficient_series(u, unit, truncation)
    return _out(head + tail, scalar)


def _binomial_alternating(alpha: float, beta0: float, u: complex, max_terms: int) -> complex:
    """sum (-1)^n C(alpha+1, n) u^n / (n + beta0)."""
    c = 1.0 + 0j  # (-1)^n C(alpha+1, n) u^n
    total = c / beta0
    run = 0
    for n in range(max_terms):
        c = c * (-(alpha + 1.0 - n) / (n + 1.0)) * u
        term = c / (n + 1.0 + beta0)
        total += term
        run = run + 1 if abs(term) <= DEFAULT_REL_TOL * abs(total) else 0
        if run >= SMALL_RUN:
            return total
    raise ConvergenceError("binomial series did not converge")


def bergman_kernel_m0_forms(xi: complex, params: BergmanDirichletParams) -> tuple[complex, complex, complex]:
    """Three independent closed forms of the order-zero kernel.

    1. Laurent prefactor times 2F1(1, alpha+beta0+2; beta0+1; u)
    2. the same after Euler's transformation, (1-u)^-(alpha+2) 2F1(beta0, -(alpha+1); beta0+1; u)
    3. that 2F1 summed as an alternating binomial series (undefined for beta0 = 0, returns nan)
    """
    if params.m != 0:
        raise DomainError("the order-zero forms need m = 0")
    xi = complex(xi)
    if xi == 0:
        raise DomainError("the order-zero forms are evaluated at xi != 0")
    u = xi / params.R ** 2
    _check_disk(np.asarray(u), "squared disk")
    al, b0, p = params.alpha, params.beta0, params.p
    c = pochhammer(b0 + 1.0, p) / pochhammer(al + b0 + 2.0, p)
    pref = c * u ** (-p)
    budget = _series_budget(np.asarray(u))
    f1 = pref * _pfq((1.0, al + b0 + 2.0), (b0 + 1.0,), u, budget)
    euler = (1.0 - u) ** (-(al + 2.0))
    f2 = pref * euler * _pfq((b0, -(al + 1.0)), (b0 + 1.0,), u, budget)
    if b0 == 0.0:
        f3 = complex(math.nan, math.nan)
    else:
        f3 = pref * euler * b0 * _binomial_alternating(al, b0, u, budget)
    return complex(f1), complex(f2), complex(f3)


# --- Bargmann type ----------------------------------------------------------

def bargmann_correction(xi, params: BargmannDirichletParams):
    """Principal part of the Bargmann-Dirichlet kernel (zero unless p > m)."""
    xi, scalar = _as_array(xi)
    m, beta, th = params.m, params.beta, params.theta
    total = np.zeros_like(xi)
    if params.p > m:
        _check_pole(xi, params)
        inv = 1.0 / (th * np.where(xi == 0, 1.0, xi))
        for k in range(params.p - m):
            coef = gamma_ratio(beta + 1.0, beta - m - k) / pochhammer(k + 1.0, m) ** 2
            total = total + coef * inv ** (k + 1)
        total = total / th ** m
    return _out(total, scalar)


def _kummer_1f1(b: float, x: np.ndarray, budget: int) -> np.ndarray:
    """1F1(1; b; x). Where Re x < 0 the direct series cancels badly, so use
    Kummer's transformation e^x 1F1(b-1; b; -x) there."""
    out = np.empty_like(x)
    neg = x.real < 0
    if np.any(~neg):
        out[~neg] = _pfq((1.0,), (b,), x[~neg], budget)
    if np.any(neg):
        out[neg] = np.exp(x[neg]) * _pfq((b - 1.0,), (b,), -x[neg], budget)
    return out


def bargmann_kernel(xi, params: BargmannDirichletParams):
    """Closed-form kernel of the Bargmann-Dirichlet space as a function of xi."""
    xi, scalar = _as_array(xi)
    if not np.all(np.isfinite(xi)):
        raise DomainError("xi must be finite")
    _check_pole(xi, params)
    m, b = params.m, params.beta + 1.0
    x = params.theta * xi
    head = np.zeros_like(xi)
    for n in range(m):
        head = head + x ** n / pochhammer(b, n)
    budget = max(DEFAULT_MAX_TERMS, int(4 * np.max(np.abs(x), initial=0.0)) + 200)
    if m == 0:
        tail = _kummer_1f1(b, x, budget)
    else:
        tail = _pfq((1.0, 1.0, 1.0), (m + 1.0, m + 1.0, b), x, budget)
    tail = tail * xi ** m / math.factorial(m) ** 2
    return _out(head + tail + bargmann_correction(xi, params), scalar)


def bargmann_kernel_series(xi, params: BargmannDirichletParams, truncation: int = DEFAULT_TRUNCATION):
    """Brute-force sum of xi^n / ||z^n||^2 for the Bargmann-Dirichlet space."""
    xi, scalar = _as_array(xi)
    _check_pole(xi, params)
    return _out(_coefficient_series(xi, params, truncation), scalar)


def bargmann_kernel_m0_forms(xi: complex, params: BargmannDirichletParams) -> tuple[complex, complex]:
    """Two closed forms of the order-zero Bargmann kernel.

    1. ``(beta0+1)_p / x^p * 1F1(1; beta0+1; x)`` with ``x = theta xi``
    2. ``(beta0+1)_p beta0 e^x / x^p * sum (-x)^n / (n! (n + beta0))`` (nan for beta0 = 0)
    """
    if params.m != 0:
        raise DomainError("the order-zero forms need m = 0")
    xi = complex(xi)
    if xi == 0:
        raise DomainError("the order-zero forms are evaluated at xi != 0")
    b0, p = params.beta0, params.p
    x = params.theta * xi
    c = pochhammer(b0 + 1.0, p) / x ** p
    f1 = c * _pfq((1.0,), (b0 + 1.0,), x, max(DEFAULT_MAX_TERMS, int(4 * abs(x)) + 200))
    if b0 == 0.0:
        return complex(f1), complex(math.nan, math.nan)
    term = 1.0 + 0j  # (-x)^n / n!
    total = term / b0
    run = 0
    for n in range(max(DEFAULT_MAX_TERMS, int(4 * abs(x)) + 200)):
        term = term * (-x) / (n + 1.0)
        t = term / (n + 1.0 + b0)
        total += t
        run = run + 1 if abs(t) <= DEFAULT_REL_TOL * abs(total) else 0
        if run >= SMALL_RUN:
            break
    else:
        raise ConvergenceError("alternating exponential series did not converge")
    f2 = c * b0 * np.exp(x) * total
    return complex(f1), complex(f2)


# --- Hardy type -------------------------------------------------------------

def hardy_correction(xi, params: HardyDirichletParams):
    """Principal part of the Hardy-Dirichlet kernel (zero unless p > m)."""
    xi, scalar = _as_array(xi)
    m = params.m
    total = np.zeros_like(xi)
    if params.p > m:
        _check_pole(xi, params)
        inv = 1.0 / np.where(xi == 0, 1.0, xi)
        for k in range(params.p - m):
            total = total + inv ** (k + 1) / pochhammer(k + 1.0, m) ** 2
    return _out(total, scalar)


def hardy_kernel(xi, params: HardyDirichletParams):
    """Closed-form kernel of the Hardy-Dirichlet space (s = 2)."""
    if params.s != 2:
        raise DomainError("the Hardy-Dirichlet kernel exists only for s = 2")
    xi, scalar = _as_array(xi)
    _check_disk(xi, "unit")
    _check_pole(xi, params)
    m = params.m
    if m == 0:
        # the hypergeometric tail is the geometric series itself
        body = 1.0 / (1.0 - xi)
    else:
        head = np.zeros_like(xi)
        for n in range(m):
            head = head + xi ** n
        tail = _pfq((1.0, 1.0, 1.0), (m + 1.0, m + 1.0), xi, _series_budget(xi))
        body = head + tail * xi ** m / math.factorial(m) ** 2
    return _out(body + hardy_correction(xi, params), scalar)


def hardy_kernel_series(xi, params: HardyDirichletParams, truncation: int = DEFAULT_TRUNCATION):
    """Brute-force sum of xi^n / ||z^n||^2 for the Hardy-Dirichlet space."""
    xi, scalar = _as_array(xi)
    if np.any(np.abs(xi) >= 1.0):
        raise DomainError("series diverges for |xi| >= 1")
    _check_pole(xi, params)
    return _out(_coefficient_series(xi, params, truncation), scalar)


# --- dispatch ---------------------------------------------------------------

def kernel(xi, params):
    """Closed-form kernel for any of the three parameter types."""
    if isinstance(params, BergmanDirichletParams):
        return bergman_kernel(xi, params)
    if isinstance(params, BargmannDirichletParams):
        return bargmann_kernel(xi, params)
    if isinstance(params, HardyDirichletParams):
        return hardy_kernel(xi, params)
    raise TypeError(f"unknown space parameters {type(params).__name__}")


def kernel_series(xi, params, truncation: int = DEFAULT_TRUNCATION):
    if isinstance(params, BergmanDirichletParams):
        return bergman_kernel_series(xi, params, truncation)
    if isinstance(params, BargmannDirichletParams):
        return bargmann_kernel_series(xi, params, truncation)
    if isinstance(params, HardyDirichletParams):
        return hardy_kernel_series(xi, params, truncation)
    raise TypeError(f"unknown space parameters {type(params).__name__}")


def kernel_zw(z, w, params):
    """K(z, w) = kernel(z * conj(w))."""
    return kernel(np.asarray(z, dtype=complex) * np.conj(np.asarray(w, dtype=complex)), params)
