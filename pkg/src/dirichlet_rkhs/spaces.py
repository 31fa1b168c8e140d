"""Finite Laurent series and the Dirichlet-type spaces built on them.

A function lives in coefficient space: ``f(z) = sum a_n z^n`` for ``n`` from
``min_index`` upward. Every space here has the monomials as an orthogonal
basis, so inner products are diagonal sums weighted by ``||z^n||^2``.

Three families are covered, all of Dirichlet order ``m`` with pole budget ``p``:

* Bergman type on the disk of radius ``R`` (measure from ``DiskMeasureParams``)
* Bargmann type on the plane (measure from ``FockMeasureParams``)
* Hardy type on the unit disk (circle averages as ``r -> 1``)

The norm of ``f = f1 + f2`` is ``||f1||^2 + ||f2^(m)||^2`` where ``f1`` is the
part of degree below ``m`` and ``f2`` the rest, including the principal part.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import DomainError, IndexRangeError
from .measures import (
    DiskMeasureParams,
    FockMeasureParams,
    QuadratureRule,
    build_disk_quadrature,
    build_fock_quadrature,
    _check_beta0,
    _check_p,
)
from .specfun import gamma_ratio, pochhammer

__all__ = [
    "BargmannDirichletParams",
    "BergmanDirichletParams",
    "HardyDirichletParams",
    "LaurentSeries",
    "base_norm",
    "dirichlet_inner_product",
    "dirichlet_norm",
    "eta",
    "hardy_norm_circle",
    "laurent_from_samples",
    "monomial_norm",
    "monomial_norm_bargmann",
    "monomial_norm_bergman",
    "monomial_norm_hardy",
    "monomial_norm_sq",
    "norm_sq_table",
    "quadrature_inner_product",
    "radial_mean",
    "split_f1_f2",
]


class LaurentSeries:
    """``sum_k coefficients[k] * z**(min_index + k)``; immutable."""

    __slots__ = ("_min_index", "_coef")

    def __init__(self, min_index: int, coefficients):
        if int(min_index) != min_index:
            raise DomainError(f"min_index must be an integer, got {min_index}")
        coef = np.array(coefficients, dtype=complex).ravel()
        if coef.size == 0:
            coef = np.zeros(1, dtype=complex)
        if not np.all(np.isfinite(coef)):
            raise DomainError("coefficients must be finite")
        coef.setflags(write=False)
        self._min_index = int(min_index)
        self._coef = coef

    @classmethod
    def monomial(cls, n: int, c: complex = 1.0) -> "LaurentSeries":
        return cls(n, [c])

    @classmethod
    def zero(cls) -> "LaurentSeries":
        return cls(0, [0.0])

    @classmethod
    def from_dict(cls, mapping: dict) -> "LaurentSeries":
        """Build from ``{n: a_n}``."""
        if not mapping:
            return cls.zero()
        lo, hi = min(mapping), max(mapping)
        coef = np.zeros(hi - lo + 1, dtype=complex)
        for n, a in mapping.items():
            coef[n - lo] = a
        return cls(lo, coef)

    @property
    def min_index(self) -> int:
        return self._min_index

    @property
    def max_index(self) -> int:
        return self._min_index + self._coef.size - 1

    @property
    def coefficients(self) -> np.ndarray:
        return self._coef

    @property
    def indices(self) -> np.ndarray:
        return np.arange(self._min_index, self.max_index + 1)

    def coeff(self, n: int) -> complex:
        k = n - self._min_index
        if 0 <= k < self._coef.size:
            return complex(self._coef[k])
        return 0j

    def items(self):
        for n, a in zip(self.indices.tolist(), self._coef):
            yield n, complex(a)

    def lowest_nonzero(self) -> int | None:
        nz = np.flatnonzero(self._coef)
        return None if nz.size == 0 else self._min_index + int(nz[0])

    def restrict(self, lo: int | None = None, hi: int | None = None) -> "LaurentSeries":
        """Keep the coefficients with ``lo <= n <= hi``."""
        lo = self._min_index if lo is None else lo
        hi = self.max_index if hi is None else hi
        if hi < lo:
            return LaurentSeries(max(lo, 0) if lo >= 0 else lo, [0.0])
        coef = np.array([self.coeff(n) for n in range(lo, hi + 1)], dtype=complex)
        return LaurentSeries(lo, coef)

    def evaluate(self, z):
        """Horner evaluation at a scalar or array of points."""
        zarr = np.asarray(z, dtype=complex)
        if self._min_index < 0 and np.any(zarr == 0):
            raise DomainError("series has negative powers; cannot evaluate at z = 0")
        acc = np.zeros_like(zarr)
        for a in self._coef[::-1]:
            acc = acc * zarr + a
        if self._min_index:
            acc = acc * zarr ** self._min_index
        return complex(acc) if acc.ndim == 0 else acc

    __call__ = evaluate

    def derivative(self, order: int = 1) -> "LaurentSeries":
        """Exact termwise derivative of the given order."""
        if order < 0 or int(order) != order:
            raise DomainError("derivative order must be a non-negative integer")
        if order == 0:
            return self
        n = self.indices.astype(float)
        factor = np.ones_like(n)
        for j in range(order):
            factor *= n - j
        out = LaurentSeries(self._min_index - order, self._coef * factor)
        if self._min_index >= 0:
            # powers 0..order-1 vanished; do not invent a principal part
            out = out.restrict(0, max(out.max_index, 0))
        return out

    def _binary(self, other: "LaurentSeries", sign: float) -> "LaurentSeries":
        lo = min(self._min_index, other._min_index)
        hi = max(self.max_index, other.max_index)
        coef = np.zeros(hi - lo + 1, dtype=complex)
        coef[self._min_index - lo:self.max_index - lo + 1] += self._coef
        coef[other._min_index - lo:other.max_index - lo + 1] += sign * other._coef
        return LaurentSeries(lo, coef)

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self._binary(other, 1.0)

    def __sub__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self._binary(other, -1.0)

    def __neg__(self):
        return LaurentSeries(self._min_index, -self._coef)

    def __mul__(self, c):
        if isinstance(c, LaurentSeries):
            return NotImplemented
        return LaurentSeries(self._min_index, self._coef * complex(c))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        lo = min(self._min_index, other._min_index)
        hi = max(self.max_index, other.max_index)
        return all(self.coeff(n) == other.coeff(n) for n in range(lo, hi + 1))

    __hash__ = None

    def allclose(self, other: "LaurentSeries", atol: float = 1e-12) -> bool:
        diff = self - other
        return bool(np.all(np.abs(diff.coefficients) <= atol))

    def __repr__(self):
        return f"LaurentSeries(min_index={self._min_index}, coefficients={self._coef.tolist()!r})"

    def to_json(self) -> dict:
        return {
            "min_index": self._min_index,
            "coefficients": [[float(a.real), float(a.imag)] for a in self._coef],
        }

    @classmethod
    def from_json(cls, obj) -> "LaurentSeries":
        """Accept a dict or a JSON string; raise ``DomainError`` on bad shape."""
        if isinstance(obj, (str, bytes)):
            try:
                obj = json.loads(obj)
            except json.JSONDecodeError as exc:
                raise DomainError(f"malformed series JSON: {exc}") from exc
        if not isinstance(obj, dict) or "coefficients" not in obj:
            raise DomainError("series JSON needs 'min_index' and 'coefficients'")
        mi = obj.get("min_index", 0)
        if isinstance(mi, bool) or not isinstance(mi, int):
            raise DomainError("min_index must be an integer")
        coef = []
        for pair in obj["coefficients"]:
            if isinstance(pair, (int, float)) and not isinstance(pair, bool):
                coef.append(complex(pair))
                continue
            if (not isinstance(pair, (list, tuple)) or len(pair) != 2
                    or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)):
                raise DomainError(f"bad coefficient entry {pair!r}; expected [re, im]")
            coef.append(complex(pair[0], pair[1]))
        return cls(mi, coef)


def _check_m(m: int) -> None:
    if int(m) != m or m < 0:
        raise DomainError(f"m must be a non-negative integer, got {m}")


@dataclass(frozen=True)
class BergmanDirichletParams:
    alpha: float
    beta0: float
    p: int = 0
    R: float = 1.0
    m: int = 0

    def __post_init__(self):
        if not self.alpha > -1:
            raise DomainError(f"alpha must exceed -1, got {self.alpha}")
        _check_beta0(self.beta0)
        _check_p(self.p)
        _check_m(self.m)
        if not self.R > 0:
            raise DomainError(f"R must be positive, got {self.R}")

    @property
    def beta(self) -> float:
        return self.beta0 + self.p

    @property
    def min_index(self) -> int:
        return min(0, self.m - self.p)

    @property
    def measure(self) -> DiskMeasureParams:
        return DiskMeasureParams(self.alpha, self.beta0, self.p, self.R)


@dataclass(frozen=True)
class BargmannDirichletParams:
    theta: float
    beta0: float
    p: int = 0
    m: int = 0

    def __post_init__(self):
        if not self.theta > 0:
            raise DomainError(f"theta must be positive, got {self.theta}")
        _check_beta0(self.beta0)
        _check_p(self.p)
        _check_m(self.m)

    @property
    def beta(self) -> float:
        return self.beta0 + self.p

    @property
    def min_index(self) -> int:
        return min(0, self.m - self.p)

    @property
    def measure(self) -> FockMeasureParams:
        return FockMeasureParams(self.theta, self.beta0, self.p)


@dataclass(frozen=True)
class HardyDirichletParams:
    beta0: float
    p: int = 0
    m: int = 0
    s: float = 2.0

    def __post_init__(self):
        _check_beta0(self.beta0)
        _check_p(self.p)
        _check_m(self.m)
        if not self.s > 0:
            raise DomainError(f"s must be positive, got {self.s}")

    @property
    def beta(self) -> float:
        return self.beta0 + self.p

    @property
    def min_index(self) -> int:
        return min(0, self.m - self.p)

    @property
    def pole_bound(self) -> int:
        return eta(self.s, self.beta)


SpaceParams = Union[BergmanDirichletParams, BargmannDirichletParams, HardyDirichletParams]


def eta(s: float, beta: float) -> int:
    """Largest admissible pole order for the Hardy-type space with exponent ``s``."""
    if not (s > 0 and beta > -1):
        raise DomainError(f"eta needs s > 0 and beta > -1, got ({s}, {beta})")
    x = 2.0 * (beta + 1.0) / s
    # tolerate representation noise such as 2*(0.1+0.9)/2
    k = round(x)
    if abs(x - k) <= 1e-12 * max(1.0, abs(x)):
        return int(k) - 1
    return int(math.floor(x))


def split_f1_f2(f: LaurentSeries, m: int, p: int) -> tuple[LaurentSeries, LaurentSeries]:
    """Polynomial part of degree < m, and everything else."""
    low = f.lowest_nonzero()
    if low is not None and low < min(0, m - p):
        raise IndexRangeError(f"series has index {low} below {min(0, m - p)}")
    if m == 0:
        return LaurentSeries.zero(), f
    f1 = f.restrict(0, m - 1)
    f2 = f - f1
    return f1, f2


def _falling_abs(n: int, m: int) -> float:
    """``|n (n-1) ... (n-m+1)|``, the modulus of the m-th derivative factor of z^n."""
    if n >= 0:
        return pochhammer(float(n - m + 1), m) if n >= m else 0.0
    return pochhammer(float(-n), m)


def _disk_moment(k: int, alpha: float, beta: float, R: float) -> float:
    """Integral of |z|^(2k) against the disk measure; needs beta + 1 + k > 0."""
    if k >= 0:
        return R ** (2 * k) * pochhammer(beta + 1.0, k) / pochhammer(alpha + beta + 2.0, k)
    return (R ** (2 * k) * gamma_ratio(beta + 1.0 + k, beta + 1.0)
            * gamma_ratio(alpha + beta + 2.0, alpha + beta + 2.0 + k))


def _fock_moment(k: int, theta: float, beta: float) -> float:
    if k >= 0:
        return pochhammer(beta + 1.0, k) / theta ** k
    return gamma_ratio(beta + 1.0 + k, beta + 1.0) / theta ** k


def _check_index(n: int, params) -> None:
    if int(n) != n:
        raise IndexRangeError(f"index must be an integer, got {n}")
    if n < params.min_index:
        raise IndexRangeError(f"index {n} is below the lowest admissible power {params.min_index}")


def _dirichlet_norm_sq(n: int, m: int, moment) -> float:
    if 0 <= n < m:
        return moment(n)
    return _falling_abs(n, m) ** 2 * moment(n - m)


def monomial_norm_bergman(n: int, params: BergmanDirichletParams) -> float:
    """Norm of ``z^n`` in the Bergman-Dirichlet space."""
    return math.sqrt(monomial_norm_sq(n, params))


def monomial_norm_bargmann(n: int, params: BargmannDirichletParams) -> float:
    """Norm of ``z^n`` in the Bargmann-Dirichlet space."""
    return math.sqrt(monomial_norm_sq(n, params))


def monomial_norm_hardy(n: int, params: HardyDirichletParams) -> float:
    """Norm of ``z^n`` in the Hardy-Dirichlet space (``s = 2`` only)."""
    return math.sqrt(monomial_norm_sq(n, params))


def monomial_norm_sq(n: int, params: SpaceParams) -> float:
    """Squared monomial norm, dispatched on the parameter type."""
    _check_index(n, params)
    n = int(n)
    if isinstance(params, BergmanDirichletParams):
        return _dirichlet_norm_sq(
            n, params.m, lambda k: _disk_moment(k, params.alpha, params.beta, params.R))
    if isinstance(params, BargmannDirichletParams):
        return _dirichlet_norm_sq(n, params.m, lambda k: _fock_moment(k, params.theta, params.beta))
    if isinstance(params, HardyDirichletParams):
        if params.s != 2:
            raise DomainError("Hardy monomial norms exist only for s = 2")
        return _dirichlet_norm_sq(n, params.m, lambda k: 1.0)
    raise TypeError(f"unknown space parameters {type(params).__name__}")


def monomial_norm(n: int, params: SpaceParams) -> float:
    return math.sqrt(monomial_norm_sq(n, params))


def _moment_step(params: SpaceParams):
    """Ratio ``moment(k+1) / moment(k)`` of the underlying radial moments."""
    if isinstance(params, BergmanDirichletParams):
        R2, a, b = params.R ** 2, params.alpha + params.beta + 2.0, params.beta + 1.0
        return lambda k: R2 * (b + k) / (a + k)
    if isinstance(params, BargmannDirichletParams):
        th, b = params.theta, params.beta + 1.0
        return lambda k: (b + k) / th
    if params.s != 2:
        raise DomainError("Hardy monomial norms exist only for s = 2")
    return lambda k: 1.0


def norm_sq_table(params: SpaceParams, lo: int, hi: int) -> np.ndarray:
    """Squared monomial norms for ``lo <= n <= hi``.

    Non-negative powers use running products, so long tables cost O(hi);
    overflow to ``inf`` is allowed (the matching kernel coefficient is 0).
    """
    _check_index(lo, params)
    out = np.empty(hi - lo + 1)
    for n in range(lo, min(hi, -1) + 1):
        out[n - lo] = monomial_norm_sq(n, params)
    if hi < 0:
        return out
    m = params.m
    step = _moment_step(params)
    mom = np.empty(hi + 1)
    mom[0] = 1.0
    with np.errstate(over="ignore"):
        for k in range(hi):
            mom[k + 1] = mom[k] * step(k)
        perm = 1.0  # n! / (n - m)! at n = m
        for j in range(1, m + 1):
            perm *= j
        for n in range(max(lo, 0), hi + 1):
            if n < m:
                out[n - lo] = mom[n]
                continue
            if n > m:
                perm *= n / (n - m)
            out[n - lo] = perm * perm * mom[n - m]
    return out


def _check_support(f: LaurentSeries, params) -> None:
    low = f.lowest_nonzero()
    if low is not None and low < params.min_index:
        raise IndexRangeError(
            f"series has a pole of order {-low} beyond the space's lowest power {params.min_index}")


def dirichlet_inner_product(f: LaurentSeries, g: LaurentSeries, space: SpaceParams) -> complex:
    """Diagonal coefficient-space inner product."""
    _check_support(f, space)
    _check_support(g, space)
    lo = max(f.min_index, g.min_index, space.min_index)
    hi = min(f.max_index, g.max_index)
    total = 0j
    for n in range(lo, hi + 1):
        a, b = f.coeff(n), g.coeff(n)
        if a != 0 and b != 0:
            total += a * b.conjugate() * monomial_norm_sq(n, space)
    return total


def dirichlet_norm(f: LaurentSeries, space: SpaceParams) -> float:
    return math.sqrt(max(dirichlet_inner_product(f, f, space).real, 0.0))


def base_norm(f: LaurentSeries, space: SpaceParams) -> float:
    """Norm of ``f`` itself in the underlying (order zero) space."""
    _check_support(f, space)
    if isinstance(space, BergmanDirichletParams):
        moment = lambda k: _disk_moment(k, space.alpha, space.beta, space.R)
    elif isinstance(space, BargmannDirichletParams):
        moment = lambda k: _fock_moment(k, space.theta, space.beta)
    else:
        moment = lambda k: 1.0
    total = sum(abs(a) ** 2 * moment(n) for n, a in f.items() if a != 0)
    return math.sqrt(total)


def space_rule(space: SpaceParams, n_radial: int = 64, n_angular: int = 128) -> QuadratureRule:
    """Quadrature rule for the measure underlying a Bergman or Bargmann space."""
    if isinstance(space, BergmanDirichletParams):
        return build_disk_quadrature(space.measure, n_radial, n_angular)
    if isinstance(space, BargmannDirichletParams):
        return build_fock_quadrature(space.measure, n_radial, n_angular)
    raise DomainError("quadrature rules exist for the Bergman and Bargmann families only")


def quadrature_inner_product(f: LaurentSeries, g: LaurentSeries, space: SpaceParams,
                             rule: QuadratureRule | None = None) -> complex:
    """Dirichlet inner product with both pieces integrated by quadrature."""
    if rule is None:
        rule = space_rule(space)
    f1, f2 = split_f1_f2(f, space.m, space.p)
    g1, g2 = split_f1_f2(g, space.m, space.p)
    f2, g2 = f2.derivative(space.m), g2.derivative(space.m)
    pts = rule.points()
    head = rule.integrate(f1(pts) * np.conj(g1(pts)))
    tail = rule.integrate(f2(pts) * np.conj(g2(pts)))
    return complex(head + tail)


def radial_mean(f: LaurentSeries, r: float, s: float = 2.0, n_angular: int | None = None) -> float:
    """``(mean over the circle |z| = r of |f|^s)^(1/s)`` by the trapezoid rule."""
    if not 0 < r:
        raise DomainError(f"radius must be positive, got {r}")
    if not s > 0:
        raise DomainError(f"s must be positive, got {s}")
    if n_angular is None:
        n_angular = max(256, 4 * (f.max_index - f.min_index + 1))
    theta = 2.0 * np.pi * np.arange(n_angular) / n_angular
    vals = np.abs(f(r * np.exp(1j * theta)))
    return float(np.mean(vals ** s) ** (1.0 / s))


def hardy_norm_circle(f: LaurentSeries, space: HardyDirichletParams, h: float = 1e-6) -> float:
    """Oracle for the Hardy-Dirichlet norm: circle means near ``r = 1``,
    linearly extrapolated to the boundary."""
    f1, f2 = split_f1_f2(f, space.m, space.p)
    f2 = f2.derivative(space.m)

    def sq(r):
        return radial_mean(f1, r) ** 2 + radial_mean(f2, r) ** 2

    return math.sqrt(max(2.0 * sq(1.0 - h) - sq(1.0 - 2.0 * h), 0.0))


def laurent_from_samples(values, radius: float, lo: int, hi: int) -> LaurentSeries:
    """Recover ``a_lo .. a_hi`` from equispaced samples on ``|z| = radius``.

    ``values[k]`` is the function at ``radius * exp(2 pi i k / N)``; the
    function's true index span must be shorter than ``N`` to avoid aliasing.
    """
    v = np.asarray(values, dtype=complex)
    N = v.size
    if hi - lo + 1 > N:
        raise DomainError(f"{N} samples cannot resolve {hi - lo + 1} coefficients")
    spectrum = np.fft.fft(v) / N
    n = np.arange(lo, hi + 1)
    coef = spectrum[n % N] / radius ** n
    return LaurentSeries(lo, coef)
