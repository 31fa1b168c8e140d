"""Pochhammer symbols, Gamma ratios, Beta functions and pFq series.

Everything here is a pure function of its arguments. Log-Gamma uses a
Lanczos approximation (g = 7, nine coefficients); Gamma ratios whose
arguments differ by an integer are computed as exact rising products.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import ConvergenceError, DomainError

__all__ = [
    "HypergeomSpec",
    "PFQInfo",
    "beta",
    "gamma_ratio",
    "incomplete_beta",
    "lgamma",
    "log_pochhammer",
    "pfq",
    "pfq_eval",
    "pochhammer",
]

DEFAULT_MAX_TERMS = 2000
DEFAULT_REL_TOL = 1e-14
SMALL_RUN = 3  # consecutive small terms required to stop a series

_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_OVERFLOW_GUARD = 1e300
_EXACT_RATIO_SPAN = 1000


def _lanczos_sum(y: float) -> float:
    s = _LANCZOS_COEF[0]
    for i in range(1, len(_LANCZOS_COEF)):
        s += _LANCZOS_COEF[i] / (y + i)
    return s


def lgamma(x: float) -> float:
    """log Gamma(x) for x > 0 (Lanczos, g=7)."""
    if not x > 0:
        raise DomainError(f"lgamma requires x > 0, got {x}")
    shift = 0.0
    while x < 0.5:
        # Gamma(x) = Gamma(x + 1) / x
        shift -= math.log(x)
        x += 1.0
    y = x - 1.0
    t = y + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (y + 0.5) * math.log(t) - t + math.log(_lanczos_sum(y)) + shift


def log_pochhammer(a: float, n: int) -> tuple[float, int]:
    """Return ``(log|(a)_n|, sign)``; sign is 0 when the product vanishes."""
    if n < 0:
        raise DomainError("log_pochhammer needs n >= 0")
    logabs, sign = 0.0, 1
    for k in range(n):
        f = a + k
        if f == 0.0:
            return -math.inf, 0
        if f < 0:
            sign = -sign
        logabs += math.log(abs(f))
    return logabs, sign


def pochhammer(a: float, n: int) -> float:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1."""
    if n < 0:
        raise DomainError("pochhammer needs n >= 0")
    out = 1.0
    exponent = 0
    for k in range(n):
        out *= a + k
        if out == 0.0:
            return 0.0
        if abs(out) > _OVERFLOW_GUARD:
            # renormalize; the binary exponent is carried exactly
            out, e = math.frexp(out)
            exponent += e
    if exponent == 0:
        return out
    try:
        return math.ldexp(out, exponent)
    except OverflowError:
        return math.copysign(math.inf, out)


def _is_integer(x: float) -> bool:
    return float(x).is_integer()


def gamma_ratio(a: float, b: float) -> float:
    """Gamma(a) / Gamma(b) for a, b > 0.

    The integer part of ``a - b`` is taken as an exact rising product; the
    fractional remainder goes through the two Lanczos forms, subtracted
    analytically (log1p of the shift) so the ``x log x`` parts cancel
    before exponentiation.
    """
    if not (a > 0 and b > 0):
        raise DomainError(f"gamma_ratio requires a, b > 0, got ({a}, {b})")
    d = a - b
    if d < 0:
        return 1.0 / gamma_ratio(b, a)
    n = int(math.floor(d))
    if n > _EXACT_RATIO_SPAN:
        return math.exp(lgamma(a) - lgamma(b))
    frac = d - n
    if frac == 0.0:
        return pochhammer(b, n)
    # Gamma(a)/Gamma(b) = (b+frac)_n * Gamma(b+frac)/Gamma(b)
    return pochhammer(b + frac, n) * _lanczos_ratio(b + frac, b)


def _lanczos_ratio(a: float, b: float) -> float:
    scale = 1.0
    while a < 0.5:
        scale /= a
        a += 1.0
    while b < 0.5:
        scale *= b
        b += 1.0
    d = a - b
    ya, yb = a - 1.0, b - 1.0
    ta = ya + _LANCZOS_G + 0.5
    tb = yb + _LANCZOS_G + 0.5
    log_r = (
        d * math.log(ta)
        + (yb + 0.5) * math.log1p(d / tb)
        - d
        + math.log(_lanczos_sum(ya) / _lanczos_sum(yb))
    )
    return scale * math.exp(log_r)


def beta(a: float, b: float) -> float:
    """Euler Beta function B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b)."""
    if not (a > 0 and b > 0):
        raise DomainError(f"beta requires a, b > 0, got ({a}, {b})")
    if a > b:
        a, b = b, a
    # Gamma(a) * [Gamma(b) / Gamma(a + b)], smaller argument outside the ratio
    return math.exp(lgamma(a)) * gamma_ratio(b, a + b)


@dataclass(frozen=True)
class HypergeomSpec:
    """Parameters of a generalized hypergeometric series kFj."""

    numerator_params: tuple[float, ...]
    denominator_params: tuple[float, ...]
    max_terms: int = DEFAULT_MAX_TERMS
    rel_tol: float = DEFAULT_REL_TOL

    def __post_init__(self):
        object.__setattr__(self, "numerator_params", tuple(float(a) for a in self.numerator_params))
        object.__setattr__(self, "denominator_params", tuple(float(b) for b in self.denominator_params))
        for b in self.denominator_params:
            if b <= 0 and _is_integer(b):
                raise DomainError(f"denominator parameter {b} is a non-positive integer")
        if self.max_terms < 1:
            raise DomainError("max_terms must be >= 1")
        if not 0 < self.rel_tol < 1:
            raise DomainError("rel_tol must lie in (0, 1)")

    @property
    def order(self) -> tuple[int, int]:
        return len(self.numerator_params), len(self.denominator_params)

    @property
    def terminates(self) -> bool:
        return any(a <= 0 and _is_integer(a) for a in self.numerator_params)


class PFQInfo(NamedTuple):
    n_terms: int
    reason: str


def pfq_eval(spec: HypergeomSpec, z, *, full_output: bool = False):
    """Sum the kFj series at ``z`` (scalar or array).

    Terms follow ``t[n+1] = t[n] * prod(a+n) / prod(b+n) * z / (n+1)``.
    Summation stops once every element has seen ``SMALL_RUN`` consecutive
    terms with ``|t| <= rel_tol * |partial sum|``.
    """
    zarr = np.asarray(z, dtype=complex)
    scalar = zarr.ndim == 0
    zz = np.atleast_1d(zarr)
    k, j = spec.order
    if not spec.terminates:
        if k == j + 1 and np.any(np.abs(zz) >= 1.0):
            raise DomainError(f"{k}F{j} series requires |z| < 1")
        if k > j + 1 and np.any(zz != 0):
            raise DomainError(f"{k}F{j} series diverges for z != 0")

    a = spec.numerator_params
    b = spec.denominator_params
    term = np.ones_like(zz)
    total = np.ones_like(zz)
    run = np.zeros(zz.shape, dtype=int)
    for n in range(spec.max_terms):
        num = 1.0
        for ai in a:
            num *= ai + n
        den = float(n + 1)
        for bi in b:
            den *= bi + n
        term = term * ((num / den) * zz)
        total = total + term
        if not np.all(np.isfinite(total)):
            raise ConvergenceError(f"{k}F{j} partial sums overflowed at term {n + 1}")
        small = np.abs(term) <= spec.rel_tol * np.abs(total)
        run = np.where(small, run + 1, 0)
        if np.all(run >= SMALL_RUN):
            info = PFQInfo(n + 2, "terminated" if np.all(term == 0) else "converged")
            break
    else:
        raise ConvergenceError(
            f"{k}F{j} did not converge within {spec.max_terms} terms"
        )
    value = complex(total[0]) if scalar else total.reshape(zarr.shape)
    return (value, info) if full_output else value


def pfq(numer: Sequence[float], denom: Sequence[float], z, *,
        max_terms: int = DEFAULT_MAX_TERMS, rel_tol: float = DEFAULT_REL_TOL):
    """Shorthand: ``pfq([a...], [b...], z)``."""
    return pfq_eval(HypergeomSpec(tuple(numer), tuple(denom), max_terms, rel_tol), z)


def incomplete_beta(x: float, a: float, b: float) -> float:
    """Lower incomplete Beta function B_x(a, b) = int_0^x t^(a-1) (1-t)^(b-1) dt.

    Uses B_x(a,b) = x^a (1-x)^b / a * 2F1(1, a+b; a+1; x). For x > 1/2 the
    symmetry B_x(a,b) = B(a,b) - B_(1-x)(b,a) keeps the series argument small.
    """
    if not (0 < x <= 1 and a > 0 and b > 0):
        raise DomainError(f"incomplete_beta requires 0 < x <= 1, a, b > 0; got ({x}, {a}, {b})")
    if x == 1.0:
        return beta(a, b)
    if x > 0.5:
        return beta(a, b) - incomplete_beta(1.0 - x, b, a)
    series = pfq((1.0, a + b), (a + 1.0,), x)
    return float((x ** a) * ((1.0 - x) ** b) / a * series.real)
