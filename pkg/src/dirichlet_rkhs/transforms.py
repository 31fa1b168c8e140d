"""Segal-Bargmann transforms between weighted Bergman (disk, R = 1, m = 0)
and weighted Fock spaces, and between their parity subspaces.

For pole budget ``p`` the orthonormal bases are

* disk: ``e_n^p(z) = gamma_n^p z^(n-p)``
* fock: ``b_n^p(z) = sigma_n^p z^(n-p)``

with ``n >= 0``. A transform relabels basis elements (``e_n^p -> e_n^q`` and
so on). Its kernel is ``sum_n conj(e_src_n(w)) e_tgt_n(z)``, and it acts by
``Tf(z) = integral of f(w) K(z, w) over the source measure``.

Kinds: ``full`` (D), ``even-even`` (G), ``odd-odd`` (J), ``even-odd`` (S),
and ``involution`` (T, which is S on even indices and S^-1 on odd ones).
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from .errors import ConvergenceError, DomainError, ParityError
from .measures import (
    DiskMeasureParams,
    FockMeasureParams,
    QuadratureRule,
    build_disk_quadrature,
    build_fock_quadrature,
    _check_beta0,
    _check_p,
)
from .spaces import (
    BargmannDirichletParams,
    BergmanDirichletParams,
    LaurentSeries,
    dirichlet_norm,
    laurent_from_samples,
)
from .specfun import DEFAULT_REL_TOL, SMALL_RUN, pfq

__all__ = [
    "IDENTITY_KINDS",
    "KINDS",
    "SubspaceVector",
    "TransformSpec",
    "apply_transform_coeff",
    "apply_transform_quadrature",
    "c_pq",
    "d_pq",
    "displayed_kernel",
    "gamma_coeff",
    "kernel_basis_sum",
    "quadrature_transform_series",
    "series_from_vector",
    "series_identity",
    "sigma_coeff",
    "source_rule",
    "transform_kernel",
    "vector_from_series",
    "vector_norm",
]

KINDS = ("full", "even-even", "odd-odd", "even-odd", "involution")
_ALIASES = {"D": "full", "G": "even-even", "J": "odd-odd", "S": "even-odd", "T": "involution",
            "even": "even-even", "odd": "odd-odd"}
# parity of the source and target sub-bases
_PARITY = {
    "full": ("full", "full"),
    "even-even": ("even", "even"),
    "odd-odd": ("odd", "odd"),
    "even-odd": ("even", "odd"),
    "involution": ("full", "full"),
}
IDENTITY_KINDS = ("eq32", "eq33", "eq34", "eq35", "fock1", "fock2", "fock3", "fock4")
BASIS_SUM_MAX_TERMS = 2000


# --- constants --------------------------------------------------------------

def _ratio_product(num0: float, den0: float, n: int) -> float:
    """prod_{j<n} (num0 + j) / (den0 + j), stable where the Pochhammers overflow."""
    out = 1.0
    for j in range(n):
        out *= (num0 + j) / (den0 + j)
    return out


def gamma_coeff(n: int, p: int, alpha: float, beta0: float) -> float:
    """Normalizer of ``z^(n-p)`` in the disk space with weight exponent ``beta0 + p``."""
    a, b = alpha + beta0 + 2.0, beta0 + 1.0
    return math.sqrt(_ratio_product(b, a, p) * _ratio_product(a, b, n))


def c_pq(p: int, q: int, alpha: float, beta0: float) -> float:
    a, b = alpha + beta0 + 2.0, beta0 + 1.0
    return math.sqrt(_ratio_product(b, a, p) * _ratio_product(b, a, q))


def sigma_coeff(n: int, p: int, theta: float, beta0: float) -> float:
    """Normalizer of ``z^(n-p)`` in the Fock space with weight exponent ``beta0 + p``."""
    b = beta0 + 1.0
    s = 1.0
    for j in range(p):
        s *= (b + j) / theta
    for j in range(n):
        s *= theta / (b + j)
    return math.sqrt(s)


def d_pq(p: int, q: int, theta: float, beta0: float) -> float:
    b = beta0 + 1.0
    s = 1.0
    for j in range(p):
        s *= (b + j) / theta
    for j in range(q):
        s *= (b + j) / theta
    return math.sqrt(s)


# --- spec -------------------------------------------------------------------

@dataclass(frozen=True)
class TransformSpec:
    family: str
    kind: str
    p: int
    q: int
    beta0: float
    alpha: Optional[float] = None
    theta: Optional[float] = None

    def __post_init__(self):
        kind = _ALIASES.get(self.kind, self.kind)
        object.__setattr__(self, "kind", kind)
        if self.family not in ("disk", "fock"):
            raise DomainError(f"family must be 'disk' or 'fock', got {self.family!r}")
        if kind not in KINDS:
            raise DomainError(f"unknown transform kind {self.kind!r}")
        _check_p(self.p)
        _check_p(self.q)
        _check_beta0(self.beta0)
        if self.family == "disk":
            if self.alpha is None or not self.alpha > -1:
                raise DomainError("disk transforms need alpha > -1")
            object.__setattr__(self, "theta", None)
        else:
            if self.theta is None or not self.theta > 0:
                raise DomainError("fock transforms need theta > 0")
            object.__setattr__(self, "alpha", None)
        if kind == "involution" and self.p != self.q:
            raise DomainError("the involution maps a space onto itself; it needs p = q")

    @property
    def source_parity(self) -> str:
        return _PARITY[self.kind][0]

    @property
    def target_parity(self) -> str:
        return _PARITY[self.kind][1]

    def coeff(self, n: int, p: int) -> float:
        if self.family == "disk":
            return gamma_coeff(n, p, self.alpha, self.beta0)
        return sigma_coeff(n, p, self.theta, self.beta0)

    def space(self, p: int):
        """The (order zero) space whose orthonormal basis carries index shift ``p``."""
        if self.family == "disk":
            return BergmanDirichletParams(self.alpha, self.beta0, p, 1.0, 0)
        return BargmannDirichletParams(self.theta, self.beta0, p, 0)

    def measure(self, p: int):
        if self.family == "disk":
            return DiskMeasureParams(self.alpha, self.beta0, p, 1.0)
        return FockMeasureParams(self.theta, self.beta0, p)

    def to_json(self) -> dict:
        out = {"family": self.family, "kind": self.kind, "p": self.p, "q": self.q}
        if self.family == "disk":
            out["alpha"] = self.alpha
        else:
            out["theta"] = self.theta
        out["beta0"] = self.beta0
        return out

    @classmethod
    def from_json(cls, obj) -> "TransformSpec":
        if isinstance(obj, (str, bytes)):
            try:
                obj = json.loads(obj)
            except json.JSONDecodeError as exc:
                raise DomainError(f"malformed transform JSON: {exc}") from exc
        try:
            return cls(obj["family"], obj["kind"], int(obj["p"]), int(obj["q"]), float(obj["beta0"]),
                       obj.get("alpha"), obj.get("theta"))
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"bad transform spec: {exc}") from exc


# --- vectors ----------------------------------------------------------------

@dataclass(frozen=True)
class SubspaceVector:
    """Finite coefficients against a sub-basis.

    ``parity`` picks the basis indices: ``even`` -> 0, 2, 4, ...;
    ``odd`` -> 1, 3, 5, ...; ``full`` -> 0, 1, 2, ... (mixed vectors).
    """

    parity: str
    coefficients: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=complex))

    def __post_init__(self):
        if self.parity not in ("even", "odd", "full"):
            raise DomainError(f"parity must be even, odd or full, got {self.parity!r}")
        c = np.array(self.coefficients, dtype=complex).ravel()
        c.setflags(write=False)
        object.__setattr__(self, "coefficients", c)

    def basis_indices(self) -> np.ndarray:
        k = np.arange(self.coefficients.size)
        if self.parity == "even":
            return 2 * k
        if self.parity == "odd":
            return 2 * k + 1
        return k

    def as_full(self) -> np.ndarray:
        """Coefficients against the whole basis ``e_0, e_1, ...``."""
        idx = self.basis_indices()
        out = np.zeros(int(idx.max()) + 1 if idx.size else 0, dtype=complex)
        out[idx] = self.coefficients
        return out

    def __eq__(self, other):
        if not isinstance(other, SubspaceVector):
            return NotImplemented
        a, b = self.as_full(), other.as_full()
        n = max(a.size, b.size)
        return bool(np.array_equal(np.pad(a, (0, n - a.size)), np.pad(b, (0, n - b.size))))

    __hash__ = None

    def to_json(self) -> dict:
        return {"parity": self.parity,
                "coefficients": [[float(c.real), float(c.imag)] for c in self.coefficients]}


def _restrict_parity(full: np.ndarray, parity: str) -> SubspaceVector:
    if parity == "full":
        return SubspaceVector("full", full)
    start = 0 if parity == "even" else 1
    other = full[1 - start::2]
    if np.any(other != 0):
        raise ParityError(f"vector has components outside the {parity} subspace")
    return SubspaceVector(parity, full[start::2])


def series_from_vector(v: SubspaceVector, spec: TransformSpec, p: int) -> LaurentSeries:
    """``sum c_k e_{n_k}^p`` as a Laurent series in z."""
    full = v.as_full()
    if full.size == 0:
        return LaurentSeries.zero()
    coef = np.array([c * spec.coeff(n, p) for n, c in enumerate(full)], dtype=complex)
    return LaurentSeries(-p, coef)


def vector_from_series(f: LaurentSeries, spec: TransformSpec, p: int,
                       parity: str = "full") -> SubspaceVector:
    """Coordinates of ``f`` against ``e_n^p``; ``f`` may not go below ``z^-p``."""
    low = f.lowest_nonzero()
    if low is None:
        return SubspaceVector(parity, [])
    if low < -p:
        raise DomainError(f"series has a pole of order {-low} beyond the budget p = {p}")
    top = f.max_index
    full = np.array([f.coeff(n - p) / spec.coeff(n, p) for n in range(0, top + p + 1)])
    return _restrict_parity(full, parity)


def vector_norm(v: SubspaceVector, spec: TransformSpec, p: int) -> float:
    """Norm of ``sum c_k e_{n_k}^p`` computed from the space's monomial norms."""
    return dirichlet_norm(series_from_vector(v, spec, p), spec.space(p))


# --- coefficient path -------------------------------------------------------

def _check_source(v: SubspaceVector, spec: TransformSpec) -> SubspaceVector:
    want = spec.source_parity
    if spec.kind == "involution":
        return v
    if v.parity == want:
        return v
    if want == "full":
        return SubspaceVector("full", v.as_full())
    if v.parity == "full":
        return _restrict_parity(v.as_full(), want)
    raise ParityError(f"{spec.kind} transform needs an input vector of parity {want}, got {v.parity}")


def apply_transform_coeff(spec: TransformSpec, v: Union[SubspaceVector, LaurentSeries]):
    """Relabel basis coordinates. Vectors map to vectors, series to series."""
    if isinstance(v, LaurentSeries):
        vec = vector_from_series(v, spec, spec.p)
        out = apply_transform_coeff(spec, vec)
        return series_from_vector(out, spec, spec.q)
    v = _check_source(v, spec)
    if spec.kind != "involution":
        return SubspaceVector(spec.target_parity, v.coefficients)
    if v.parity == "even":
        return SubspaceVector("odd", v.coefficients)
    if v.parity == "odd":
        return SubspaceVector("even", v.coefficients)
    full = v.as_full()
    if full.size % 2:
        full = np.append(full, 0.0)
    out = np.empty_like(full)
    out[0::2], out[1::2] = full[1::2], full[0::2]
    return SubspaceVector("full", out)


# --- kernels ----------------------------------------------------------------

def _weights(spec: TransformSpec, count: int) -> np.ndarray:
    """``w_n`` with ``coeff(n, p)^2 = h_p w_n``: (a)_n/(b)_n or theta^n/(b)_n."""
    b = spec.beta0 + 1.0
    j = np.arange(count - 1, dtype=float)
    if spec.family == "disk":
        steps = (spec.alpha + b + 1.0 + j) / (b + j)
    else:
        steps = spec.theta / (b + j)
    return np.concatenate(([1.0], np.cumprod(steps)))


def _h(spec: TransformSpec, p: int) -> float:
    return spec.coeff(0, p) ** 2


def _horner(coef: np.ndarray, x: np.ndarray) -> np.ndarray:
    """``sum_n coef[n] x^n``, insisting that the last terms are negligible."""
    acc = np.zeros_like(x)
    for c in coef[::-1]:
        acc = acc * x + c
    n = coef.size - 1
    ax = np.abs(x)
    scale = np.maximum(np.abs(acc), 1e-300)
    for k in range(n, max(n - SMALL_RUN, -1), -1):
        if np.any(coef[k] * ax ** k > DEFAULT_REL_TOL * scale):
            raise ConvergenceError("basis sum did not converge within the term budget")
    return acc


def _term_count(spec: TransformSpec, xi: np.ndarray) -> int:
    r = float(np.max(np.abs(xi), initial=0.0))
    if spec.family == "fock":
        return int(min(BASIS_SUM_MAX_TERMS, 2 * spec.theta * r + 120))
    if r < 1e-3:
        return 40
    return int(min(BASIS_SUM_MAX_TERMS, 45.0 / -math.log(r) + 60))


def _split_sums(spec: TransformSpec, xi: np.ndarray):
    """Even, odd and cross sums over n of the basis weights, all in powers of xi^2."""
    N = _term_count(spec, xi)
    w = _weights(spec, 2 * N + 2)
    we, wo = w[0:2 * N:2], w[1:2 * N + 1:2]
    x2 = xi ** 2
    return _horner(we, x2), _horner(wo, x2), _horner(np.sqrt(we * wo), x2)


def kernel_basis_sum(spec: TransformSpec, z, w):
    """Kernel as the explicit sum ``sum conj(e_src(w)) e_tgt(z)`` over the sub-basis."""
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    z, w = np.broadcast_arrays(z, w)
    _check_zw(spec, z, w)
    wb = np.conj(w)
    xi = wb * z
    p, q = spec.p, spec.q
    even, odd, cross = _split_sums(spec, xi)
    hp, hq = _h(spec, p), _h(spec, q)
    k = spec.kind
    if k == "full":
        out = math.sqrt(hp * hq) * (even + xi * odd) / (wb ** p * z ** q)
    elif k == "even-even":
        out = math.sqrt(hp * hq) * even / (wb ** p * z ** q)
    elif k == "odd-odd":
        out = math.sqrt(hp * hq) * odd * wb * z / (wb ** p * z ** q)
    elif k == "even-odd":
        out = math.sqrt(hp * hq) * cross * z / (wb ** p * z ** q)
    else:
        # S on even sources plus its inverse on odd sources, same p both sides
        out = hp * cross * (z + wb) / (wb ** p * z ** p)
    return complex(out) if out.ndim == 0 else out


def _check_zw(spec, z, w):
    if not (np.all(np.isfinite(z)) and np.all(np.isfinite(w))):
        raise DomainError("points must be finite")
    if spec.family == "disk" and np.any(np.abs(np.conj(w) * z) >= 1.0):
        raise DomainError("disk transform kernels need |z conj(w)| < 1")
    if (spec.p > 0 and np.any(w == 0)) or (spec.q > 0 and np.any(z == 0)):
        raise DomainError("kernel has negative powers; z and w must be nonzero")


def transform_kernel(spec: TransformSpec, z, w):
    """Kernel of the transform: hypergeometric closed forms where they hold,
    basis sums for the even-odd and involution kinds (which have none)."""
    k = spec.kind
    if k in ("even-odd", "involution"):
        return kernel_basis_sum(spec, z, w)
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    z, w = np.broadcast_arrays(z, w)
    _check_zw(spec, z, w)
    wb = np.conj(w)
    xi = wb * z
    p, q, b = spec.p, spec.q, spec.beta0 + 1.0
    if spec.family == "disk":
        a = spec.alpha + b + 1.0
        c = c_pq(p, q, spec.alpha, spec.beta0)
        if k == "full":
            out = c * pfq((1.0, a), (b,), xi, max_terms=_budget(xi)) / (wb ** p * z ** q)
        elif k == "even-even":
            out = c * pfq((1.0, a / 2, (a + 1) / 2), (b / 2, (b + 1) / 2), xi ** 2,
                          max_terms=_budget(xi ** 2)) / (wb ** p * z ** q)
        else:
            out = (a / b) * c * pfq((1.0, (a + 1) / 2, (a + 2) / 2), ((b + 1) / 2, (b + 2) / 2), xi ** 2,
                                    max_terms=_budget(xi ** 2)) / (wb ** (p - 1) * z ** (q - 1))
    else:
        th = spec.theta
        d = d_pq(p, q, th, spec.beta0)
        x = th * xi
        budget = int(4 * np.max(np.abs(x), initial=0.0)) + 2000
        if k == "full":
            out = d * pfq((1.0,), (b,), x, max_terms=budget) / (wb ** p * z ** q)
        elif k == "even-even":
            out = d * pfq((1.0,), (b / 2, (b + 1) / 2), (x / 2) ** 2, max_terms=budget) / (wb ** p * z ** q)
        else:
            out = (d * th / b * pfq((1.0,), ((b + 1) / 2, (b + 2) / 2), (x / 2) ** 2, max_terms=budget)
                   / (wb ** (p - 1) * z ** (q - 1)))
    return complex(out) if np.ndim(out) == 0 else out


def _budget(u) -> int:
    r = float(np.max(np.abs(u), initial=0.0))
    if r < 0.5:
        return 2000
    return max(2000, int(60.0 / -math.log(r)) + 200)


def _script_f(xi, p, q, theta, beta0):
    """d_pq 1F2(1; (beta0+1)/2, (beta0+2)/2; (xi/2)^2)."""
    b = beta0 + 1.0
    budget = int(4 * np.max(np.abs(xi), initial=0.0)) + 2000
    return d_pq(p, q, theta, beta0) * pfq((1.0,), (b / 2, (b + 1) / 2), (np.asarray(xi) / 2) ** 2,
                                          max_terms=budget)


def displayed_kernel(spec: TransformSpec, z, w):
    """Kernel in its reference closed form, taken as written.

    For the even-odd and involution kinds (and the Fock odd rows) these
    differ from the true kernel; ``transform_kernel`` is the correct one.
    The involution form uses ``q = p`` in its ``z^(q-1)`` factor.
    """
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    z, w = np.broadcast_arrays(z, w)
    _check_zw(spec, z, w)
    wb = np.conj(w)
    xi = wb * z
    p, q, b = spec.p, spec.q, spec.beta0 + 1.0
    k = spec.kind
    if spec.family == "disk":
        a = spec.alpha + b + 1.0
        if k in ("full", "even-even", "odd-odd"):
            return transform_kernel(spec, z, w)
        f32 = pfq((1.0, (a + 1) / 2, (a + 2) / 2), ((b + 1) / 2, (b + 2) / 2), xi ** 2,
                  max_terms=_budget(xi ** 2))
        if k == "even-odd":
            out = math.sqrt(a / b) * c_pq(p, q, spec.alpha, spec.beta0) * f32 / (wb ** p * z ** (q - 1))
        else:
            inner = f32 / (wb ** p * z ** (p - 1))
            out = math.sqrt(a / b) * c_pq(p, p, spec.alpha, spec.beta0) * inner.real
    else:
        th = spec.theta
        F = _script_f(th * xi, p, q, th, spec.beta0)
        if k == "full":
            return transform_kernel(spec, z, w)
        if k == "even-even":
            out = F / (wb ** p * z ** q)
        elif k == "odd-odd":
            out = th / b * F / (wb ** (p - 1) * z ** (q - 1))
        elif k == "even-odd":
            out = math.sqrt(th / b) * F / (wb ** p * z ** (q - 1))
        else:
            raise DomainError("no closed form is displayed for the Fock involution")
    return complex(out) if np.ndim(out) == 0 else np.asarray(out, dtype=complex)


# --- series identities --------------------------------------------------------

def _brute(coef_fn, xi: complex, power: int) -> complex:
    """sum_n coef_fn(n) xi^(power n), stopping on three negligible terms."""
    total = 0j
    run = 0
    x = xi ** power
    xn = 1.0 + 0j
    for n in range(BASIS_SUM_MAX_TERMS):
        term = coef_fn(n) * xn
        total += term
        run = run + 1 if abs(term) <= DEFAULT_REL_TOL * abs(total) else 0
        if run >= SMALL_RUN:
            return total
        xn *= x
    raise ConvergenceError("brute-force coefficient sum did not converge")


def series_identity(kind: str, xi: complex, p: int, q: int, *, beta0: float,
                    alpha: float | None = None, theta: float | None = None) -> tuple[complex, complex]:
    """Left side by direct summation of basis-constant products, right side
    as the reference hypergeometric closed form. Sides need not agree."""
    xi = complex(xi)
    if kind not in IDENTITY_KINDS:
        raise DomainError(f"unknown identity {kind!r}")
    b = beta0 + 1.0
    if kind.startswith("eq"):
        if alpha is None or not alpha > -1:
            raise DomainError("disk identities need alpha > -1")
        _check_beta0(beta0)
        if abs(xi) >= 1.0:
            raise DomainError("disk identities need |xi| < 1")
        a = alpha + b + 1.0
        g = lambda n, s: gamma_coeff(n, s, alpha, beta0)
        c = c_pq(p, q, alpha, beta0)
        if kind == "eq32":
            lhs = _brute(lambda n: g(n, p) * g(n, q), xi, 1)
            rhs = c * pfq((1.0, a), (b,), xi, max_terms=_budget(xi))
        elif kind == "eq33":
            lhs = _brute(lambda n: g(2 * n, p) * g(2 * n, q), xi, 2)
            rhs = c * pfq((1.0, a / 2, (a + 1) / 2), (b / 2, (b + 1) / 2), xi ** 2, max_terms=_budget(xi ** 2))
        else:
            if kind == "eq34":
                lhs = _brute(lambda n: g(2 * n + 1, p) * g(2 * n + 1, q), xi, 2)
                pref = a / b
            else:
                lhs = _brute(lambda n: g(2 * n, p) * g(2 * n + 1, q), xi, 2)
                pref = math.sqrt(a / b)
            rhs = pref * c * pfq((1.0, (a + 1) / 2, (a + 2) / 2), ((b + 1) / 2, (b + 2) / 2), xi ** 2,
                                 max_terms=_budget(xi ** 2))
        return complex(lhs), complex(rhs)
    if theta is None or not theta > 0:
        raise DomainError("Fock identities need theta > 0")
    _check_beta0(beta0)
    s = lambda n, r: sigma_coeff(n, r, theta, beta0)
    x = theta * xi
    if kind == "fock1":
        lhs = _brute(lambda n: s(n, p) * s(n, q), xi, 1)
        rhs = d_pq(p, q, theta, beta0) * pfq((1.0,), (b,), x, max_terms=int(4 * abs(x)) + 2000)
    elif kind == "fock2":
        lhs = _brute(lambda n: s(2 * n, p) * s(2 * n, q), xi, 2)
        rhs = _script_f(x, p, q, theta, beta0)
    elif kind == "fock3":
        lhs = _brute(lambda n: s(2 * n + 1, p) * s(2 * n + 1, q), xi, 2)
        rhs = theta / b * _script_f(x, p, q, theta, beta0)
    else:
        lhs = _brute(lambda n: s(2 * n, p) * s(2 * n + 1, q), xi, 2)
        rhs = math.sqrt(theta / b) * _script_f(x, p, q, theta, beta0)
    return complex(lhs), complex(rhs)


# --- quadrature path --------------------------------------------------------

def source_rule(spec: TransformSpec, n_radial: int = 32, n_angular: int = 128) -> QuadratureRule:
    """Quadrature rule for the source measure (weight exponent beta0 + p)."""
    if spec.family == "disk":
        return build_disk_quadrature(spec.measure(spec.p), n_radial, n_angular)
    return build_fock_quadrature(spec.measure(spec.p), n_radial, n_angular)


def apply_transform_quadrature(spec: TransformSpec, f: LaurentSeries, z, rule: QuadratureRule):
    """``integral f(w) K(z, w) dmu_source(w)`` on the rule's nodes."""
    zarr = np.asarray(z, dtype=complex)
    pts = rule.points().ravel()
    fw = np.asarray(f(pts))
    weights = rule.weights().ravel()
    out = np.empty(zarr.shape, dtype=complex)
    for idx, zz in np.ndenumerate(zarr):
        kz = transform_kernel(spec, zz, pts)
        out[idx] = np.sum(weights * fw * kz)
    return complex(out) if out.ndim == 0 else out


def quadrature_transform_series(spec: TransformSpec, f: LaurentSeries, rule: QuadratureRule | None = None,
                                radius: float | None = None, n_samples: int = 64) -> LaurentSeries:
    """Transform ``f`` through the integral operator and read the result's
    coefficients off a circle by FFT.

    Only indices ``-q`` up to the transformed degree of ``f`` are kept; the
    higher ones are zero in exact arithmetic and only carry sampling noise.
    """
    if rule is None:
        rule = source_rule(spec)
    if radius is None:
        radius = 0.7 if spec.family == "disk" else 1.0
    hi = max(f.max_index + spec.p - spec.q + 1, -spec.q)
    if hi + spec.q + 1 > n_samples // 2:
        raise DomainError(f"{n_samples} samples are too few for degree {hi}")
    zs = radius * np.exp(2j * np.pi * np.arange(n_samples) / n_samples)
    vals = apply_transform_quadrature(spec, f, zs, rule)
    return laurent_from_samples(vals, radius, -spec.q, hi)
