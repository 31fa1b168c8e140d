"""Executable checks of the kernel, norm and transform identities.

Every check returns a ``VerificationReport``. ``run_suite`` runs a fixed
grid of them; the result is a deterministic function of the seed.
"""
from __future__ import annotations

import math
import time
import zlib
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import DirichletError, DomainError
from .jsonfmt import dumps
from .kernels import (
    bargmann_kernel,
    bargmann_kernel_m0_forms,
    bergman_kernel,
    bergman_kernel_m0_forms,
    hardy_kernel,
    kernel,
    kernel_series,
)
from .measures import circle_rule
from .spaces import (
    BargmannDirichletParams,
    BergmanDirichletParams,
    HardyDirichletParams,
    LaurentSeries,
    base_norm,
    dirichlet_inner_product,
    dirichlet_norm,
    hardy_norm_circle,
    laurent_from_samples,
    monomial_norm_sq,
    quadrature_inner_product,
    space_rule,
    split_f1_f2,
)
from .transforms import (
    KINDS,
    SubspaceVector,
    TransformSpec,
    apply_transform_coeff,
    apply_transform_quadrature,
    displayed_kernel,
    kernel_basis_sum,
    series_from_vector,
    series_identity,
    source_rule,
    vector_norm,
)

__all__ = [
    "SuiteConfig",
    "VerificationReport",
    "check_hardy_norm_limit",
    "check_limit",
    "check_orthonormality",
    "check_reproducing",
    "format_table",
    "random_series",
    "rel_or_abs",
    "reports_to_json",
    "run_suite",
]

REPRODUCING_TOL = 1e-8
REPRODUCING_QUAD_TOL = 1e-6
ORTHONORMALITY_TOL = 1e-8
LIMIT_TOL = 1e-2


@dataclass
class VerificationReport:
    check_name: str
    parameters: dict
    measured_error: float
    tolerance: float
    passed: bool | None = None
    runtime_ms: float = 0.0
    note: str = ""
    gating: bool = True

    def __post_init__(self):
        ok = bool(self.measured_error <= self.tolerance)  # nan compares False
        if self.passed is None:
            self.passed = ok
        elif self.passed != ok:
            raise ValueError("passed must equal (measured_error <= tolerance)")

    def to_dict(self, include_runtime: bool = False) -> dict:
        out = {
            "check_name": self.check_name,
            "parameters": self.parameters,
            "measured_error": self.measured_error,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "gating": self.gating,
        }
        if self.note:
            out["note"] = self.note
        if include_runtime:
            out["runtime_ms"] = self.runtime_ms
        return out


def rel_or_abs(value: complex, target: complex) -> float:
    """Relative error when ``|target| > 1``, absolute otherwise."""
    diff = abs(complex(value) - complex(target))
    t = abs(complex(target))
    return diff / t if t > 1.0 else diff


def _describe(params) -> dict:
    if params is None:
        return {}
    if hasattr(params, "__dataclass_fields__"):
        out = {"space": type(params).__name__}
        for k in params.__dataclass_fields__:
            out[k] = getattr(params, k)
        return out
    return dict(params)


def _cnum(z: complex) -> list:
    z = complex(z)
    return [z.real, z.imag]


# --- reproducing property ---------------------------------------------------

def _kernel_section(space, w: complex, lo: int, hi: int) -> LaurentSeries:
    """Coefficients ``lo..hi`` of ``z -> K(z, w)`` read off a circle by FFT."""
    aw = abs(w)
    if isinstance(space, BergmanDirichletParams):
        rho = 0.9 * space.R ** 2 / aw
    elif isinstance(space, HardyDirichletParams):
        rho = 0.9 / aw
    else:
        rho = (max(abs(hi), abs(lo), 1) + 1.0) / (space.theta * aw)
    N = 512
    while N < 4 * (hi - lo + 1):
        N *= 2
    zs = rho * np.exp(2j * np.pi * np.arange(N) / N)
    vals = kernel(zs * np.conj(w), space)
    return laurent_from_samples(vals, rho, lo, hi)


def check_reproducing(space, f: LaurentSeries, w: complex, *, path: str = "coefficient",
                      tolerance: float | None = None, rule=None) -> VerificationReport:
    """``|<f, K(., w)> - f(w)|`` with the closed-form kernel.

    ``coefficient``: the kernel's Laurent coefficients (FFT of the closed
    form on a circle) paired with ``f`` through the diagonal inner product.
    ``quadrature``: the inner product integrated on a quadrature rule
    (order zero spaces only).
    """
    t0 = time.perf_counter()
    w = complex(w)
    if space.p > space.m and w == 0:
        raise DomainError("w = 0 is a pole when p > m")
    target = f(w)
    if path == "coefficient":
        tol = REPRODUCING_TOL if tolerance is None else tolerance
        ksec = _kernel_section(space, w, space.min_index, max(f.max_index, space.min_index))
        value = dirichlet_inner_product(f, ksec, space)
    elif path == "quadrature":
        tol = REPRODUCING_QUAD_TOL if tolerance is None else tolerance
        if space.m != 0:
            raise DomainError("the quadrature path covers order zero spaces")
        if isinstance(space, HardyDirichletParams):
            rule = rule or circle_rule(256, 1.0)
        else:
            rule = rule or space_rule(space, 64, 256)
        pts = rule.points()
        kv = kernel(pts * np.conj(w), space)
        value = rule.integrate(f(pts) * np.conj(kv))
    else:
        raise DomainError(f"unknown path {path!r}")
    err = rel_or_abs(value, target)
    return VerificationReport(
        f"reproducing_{path}", {**_describe(space), "w": _cnum(w), "degree": f.max_index,
                                "min_index": f.min_index},
        err, tol, runtime_ms=(time.perf_counter() - t0) * 1e3)


# --- orthonormality ---------------------------------------------------------

def _hardy_quadrature_inner(f, g, space, rule):
    f1, f2 = split_f1_f2(f, space.m, space.p)
    g1, g2 = split_f1_f2(g, space.m, space.p)
    f2, g2 = f2.derivative(space.m), g2.derivative(space.m)
    pts = rule.points()
    return rule.integrate(f1(pts) * np.conj(g1(pts)) + f2(pts) * np.conj(g2(pts)))


def check_orthonormality(space, N: int, *, tolerance: float = ORTHONORMALITY_TOL,
                         n_radial: int = 64, n_angular: int = 128) -> VerificationReport:
    """Gram matrix of the first ``N`` normalized monomials, by quadrature."""
    t0 = time.perf_counter()
    if N < 1:
        raise DomainError("N must be positive")
    lo = space.min_index
    basis = [LaurentSeries.monomial(n, 1.0 / math.sqrt(monomial_norm_sq(n, space)))
             for n in range(lo, lo + N)]
    if isinstance(space, HardyDirichletParams):
        rule = circle_rule(max(n_angular, 2 * N + 8), 1.0)
        inner = lambda f, g: _hardy_quadrature_inner(f, g, space, rule)
    else:
        rule = space_rule(space, max(n_radial, N + 4), max(n_angular, 2 * N + 8))
        inner = lambda f, g: quadrature_inner_product(f, g, space, rule)
    gram = np.array([[inner(f, g) for g in basis] for f in basis])
    err = float(np.max(np.abs(gram - np.eye(N))))
    return VerificationReport("orthonormality", {**_describe(space), "N": N}, err, tolerance,
                              runtime_ms=(time.perf_counter() - t0) * 1e3)


# --- limits -----------------------------------------------------------------

def _limit_report(name, params, errors, sequence, tolerance, t0, extra=None):
    errors = [float(e) for e in errors]
    monotone = all(b < a for a, b in zip(errors, errors[1:]))
    final = errors[-1]
    measured = final if monotone else math.inf
    note = "" if monotone else "errors do not decrease strictly along the sequence"
    return VerificationReport(
        name, {**_describe(params), **(extra or {}), "sequence": list(sequence), "errors": errors},
        measured, tolerance, note=note, runtime_ms=(time.perf_counter() - t0) * 1e3)


def check_limit(kind: str, xi: complex, params, sequence: Sequence[float], *,
                tolerance: float = LIMIT_TOL) -> VerificationReport:
    """Bergman kernels approaching the Bargmann (R -> inf, alpha = theta R^2)
    or Hardy (alpha -> -1, R = 1) kernel.

    Passes iff the errors decrease strictly and the last one is below
    ``tolerance``; a non-monotone sequence reports ``inf``.
    """
    t0 = time.perf_counter()
    xi = complex(xi)
    if kind == "bargmann":
        if not isinstance(params, BargmannDirichletParams):
            raise DomainError("bargmann limit needs BargmannDirichletParams")
        target = bargmann_kernel(xi, params)
        approx = [bergman_kernel(xi, BergmanDirichletParams(params.theta * R * R, params.beta0,
                                                            params.p, R, params.m))
                  for R in sequence]
    elif kind == "hardy":
        if not isinstance(params, HardyDirichletParams):
            raise DomainError("hardy limit needs HardyDirichletParams")
        target = hardy_kernel(xi, params)
        approx = [bergman_kernel(xi, BergmanDirichletParams(a, params.beta0, params.p, 1.0, params.m))
                  for a in sequence]
    else:
        raise DomainError(f"unknown limit kind {kind!r}")
    errors = [rel_or_abs(v, target) for v in approx]
    return _limit_report(f"limit_{kind}", params, errors, sequence, tolerance, t0, {"xi": _cnum(xi)})


def check_hardy_norm_limit(f: LaurentSeries, params: HardyDirichletParams, alphas: Sequence[float], *,
                           tolerance: float = LIMIT_TOL) -> VerificationReport:
    """Weighted Bergman norms (R = 1, order zero) approaching the Hardy norm."""
    t0 = time.perf_counter()
    hardy = HardyDirichletParams(params.beta0, params.p, 0)
    target = dirichlet_norm(f, hardy)
    errors = [abs(dirichlet_norm(f, BergmanDirichletParams(a, params.beta0, params.p, 1.0, 0)) - target)
              / target for a in alphas]
    return _limit_report("hardy_norm_limit", hardy, errors, alphas, tolerance, t0,
                         {"degree": f.max_index})


# --- random inputs ----------------------------------------------------------

def _rng(seed: int, name: str) -> np.random.Generator:
    return np.random.default_rng([seed, zlib.crc32(name.encode())])


def random_series(rng: np.random.Generator, lo: int, max_degree: int = 20) -> LaurentSeries:
    """Coefficients uniform in the unit square of the complex plane."""
    hi = int(rng.integers(max(lo, 0), max_degree + 1))
    n = hi - lo + 1
    return LaurentSeries(lo, rng.uniform(0, 1, n) + 1j * rng.uniform(0, 1, n))


def _random_vector(rng, parity: str, size: int) -> SubspaceVector:
    return SubspaceVector(parity, rng.uniform(0, 1, size) + 1j * rng.uniform(0, 1, size))


# --- suite ------------------------------------------------------------------

@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 0
    grid: str = "default"  # "default" or "empty"
    tolerance_override: float | None = None
    advisory: bool = False  # also run checks of reference closed forms known to fail


def _timed(name, params, fn: Callable[[], float], tol, note="", gating=True) -> VerificationReport:
    t0 = time.perf_counter()
    err = float(fn())
    return VerificationReport(name, params, err, tol, note=note, gating=gating,
                              runtime_ms=(time.perf_counter() - t0) * 1e3)


def _guard(name: str, params: dict, fn: Callable[[], VerificationReport]) -> VerificationReport:
    """Run one check; an exception becomes a failed report instead of aborting."""
    t0 = time.perf_counter()
    try:
        return fn()
    except (DirichletError, ArithmeticError, ValueError) as exc:
        return VerificationReport(name, params, math.inf, 0.0, note=f"{type(exc).__name__}: {exc}",
                                  runtime_ms=(time.perf_counter() - t0) * 1e3)


_B = BergmanDirichletParams
_G = BargmannDirichletParams
_H = HardyDirichletParams

_KERNEL_SPACES = (
    _B(0.5, 0.0, 0, 1.0, 0), _B(1.5, -0.5, 2, 1.0, 1), _B(2.0, -0.25, 3, 1.7, 1), _B(0.0, -0.5, 1, 0.6, 2),
    _G(1.0, 0.0, 0, 0), _G(2.0, -0.5, 2, 1), _G(0.7, -0.3, 3, 1),
    _H(0.0, 0, 2), _H(-0.5, 1, 0), _H(-0.25, 3, 1),
)
_REPRO_SPACES = (
    _B(0.5, -0.5, 1, 1.0, 0), _B(2.0, 0.0, 3, 1.3, 1), _B(0.0, -0.25, 2, 0.8, 2),
    _G(1.0, 0.0, 0, 0), _G(2.0, -0.5, 2, 0), _G(1.5, -0.25, 3, 1),
    _H(0.0, 0, 0), _H(-0.5, 2, 0), _H(-0.3, 3, 1),
)
_ORTHO_SPACES = (
    _B(0.5, -0.25, 1, 1.0, 0), _B(2.0, -0.5, 3, 1.4, 2), _G(2.0, 0.0, 0, 0), _G(1.0, -0.5, 2, 1),
    _H(-0.5, 2, 1),
)


def _suite_checks(cfg: SuiteConfig):
    """Yield ``(name, params, thunk)``; each thunk returns a report."""
    seed = cfg.seed

    for i, sp in enumerate(_KERNEL_SPACES):
        name = f"kernel_closed_vs_series[{i}]"

        def thunk(sp=sp, name=name):
            rng = _rng(seed, name)
            scale = sp.R ** 2 if isinstance(sp, _B) else (2.0 if isinstance(sp, _G) else 1.0)
            errs = []
            for _ in range(5):
                xi = 0.8 * scale * math.sqrt(rng.uniform(0.01, 1)) * np.exp(2j * np.pi * rng.uniform())
                a, b = kernel(xi, sp), kernel_series(xi, sp, 800)
                errs.append(abs(a - b) / (1 + abs(a)))
            return _timed("kernel_closed_vs_series", _describe(sp), lambda: max(errs), 1e-9)
        yield name, _describe(sp), thunk

    for i, sp in enumerate((_B(0.5, -0.3, 1, 1.0, 0), _B(2.0, -0.5, 2, 1.5, 0), _B(-0.5, -0.75, 0, 1.0, 0))):
        def thunk(sp=sp):
            def err():
                out = 0.0
                for xi in (0.4, 0.8 * sp.R ** 2 * np.exp(0.9j), 0.1j * sp.R ** 2):
                    f = bergman_kernel_m0_forms(xi, sp)
                    s = kernel_series(xi, sp)
                    vals = list(f) + [s]
                    out = max(out, max(rel_or_abs(a, b) for a in vals for b in vals))
                return out
            return _timed("bergman_m0_forms", _describe(sp), err, 1e-9)
        yield f"bergman_m0_forms[{i}]", _describe(sp), thunk

    for i, sp in enumerate((_G(2.0, -0.5, 1, 0), _G(0.5, -0.25, 3, 0))):
        def thunk(sp=sp):
            def err():
                out = 0.0
                for xi in (0.7, 1.5 - 0.5j, -2.0):
                    f1, f2 = bargmann_kernel_m0_forms(xi, sp)
                    s = bargmann_kernel(xi, sp)
                    out = max(out, rel_or_abs(f1, s), rel_or_abs(f2, s))
                return out
            return _timed("bargmann_m0_forms", _describe(sp), err, 1e-9)
        yield f"bargmann_m0_forms[{i}]", _describe(sp), thunk

    def exp_special():
        sp = _G(1.3, 0.0, 0, 0)
        pts = [0.3 * k * np.exp(0.7j * k) for k in range(1, 11)]
        return max(rel_or_abs(bargmann_kernel(x, sp), np.exp(1.3 * x)) for x in pts)
    yield "bargmann_exponential", {}, lambda: _timed("bargmann_exponential", {"theta": 1.3}, exp_special, 1e-12)

    def hardy_geometric():
        return rel_or_abs(hardy_kernel(0.5, _H(0.0, 1, 0)), 4.0)
    yield "hardy_geometric", {}, lambda: _timed("hardy_geometric", {"m": 0, "p": 1, "xi": 0.5},
                                               hardy_geometric, 1e-12)

    for path, spaces in (("coefficient", _REPRO_SPACES),
                         ("quadrature", tuple(s for s in _REPRO_SPACES if s.m == 0))):
        for i, sp in enumerate(spaces):
            name = f"reproducing_{path}[{i}]"

            def thunk(sp=sp, name=name, path=path):
                rng = _rng(seed, name)
                f = random_series(rng, sp.min_index, 15)
                R = sp.R if isinstance(sp, _B) else (1.5 if isinstance(sp, _G) else 1.0)
                w = 0.8 * R * math.sqrt(rng.uniform(0.05, 1)) * np.exp(2j * np.pi * rng.uniform())
                return check_reproducing(sp, f, w, path=path)
            yield name, _describe(sp), thunk

    for i, sp in enumerate(_ORTHO_SPACES):
        yield (f"orthonormality[{i}]", _describe(sp),
               lambda sp=sp: check_orthonormality(sp, 12))

    for i, (b0, p, m, xi) in enumerate(((0.0, 0, 0, 0.5), (-0.5, 2, 1, 0.5 + 0.2j))):
        sp = _G(1.0, b0, p, m)
        yield (f"limit_bargmann[{i}]", _describe(sp),
               lambda sp=sp, xi=xi: check_limit("bargmann", xi, sp, [5, 10, 20, 40, 100]))
    for i, (b0, p, m, xi) in enumerate(((0.0, 1, 0, 0.5), (-0.5, 2, 1, 0.3 - 0.2j))):
        sp = _H(b0, p, m)
        yield (f"limit_hardy[{i}]", _describe(sp),
               lambda sp=sp, xi=xi: check_limit("hardy", xi, sp, [-0.9, -0.99, -0.999]))

    def norm_limit():
        rng = _rng(seed, "hardy_norm_limit")
        f = random_series(rng, -2, 15)
        return check_hardy_norm_limit(f, _H(-0.4, 2, 0), [-0.9, -0.99, -0.999])
    yield "hardy_norm_limit", {}, norm_limit

    def continuity():
        rng = _rng(seed, "continuity_inequality")
        worst = -math.inf
        for _ in range(50):
            sp = _B(rng.choice([0.5, 2.0]), rng.choice([0.0, -0.5]), int(rng.integers(0, 4)),
                    float(rng.uniform(0.5, 2.0)), int(rng.integers(0, 3)))
            f = random_series(rng, sp.min_index, 20)
            lhs = base_norm(f, sp)
            rhs = max(1.0, sp.R ** sp.m) * dirichlet_norm(f, sp)
            worst = max(worst, (lhs - rhs) / rhs)
        return max(worst, 0.0)
    yield "continuity_inequality", {}, lambda: _timed(
        "continuity_inequality", {"samples": 50}, continuity, 1e-12,
        note="measured_error is the largest relative excess of the left side")

    def norms_vs_quadrature():
        out = 0.0
        for sp in (_B(0.5, -0.5, 3, 1.2, 2), _G(1.5, -0.25, 2, 1)):
            rule = space_rule(sp, 32, 64)
            for n in range(sp.min_index, 11):
                z = LaurentSeries.monomial(n)
                q = quadrature_inner_product(z, z, sp, rule).real
                out = max(out, abs(q / monomial_norm_sq(n, sp) - 1))
        sp = _H(-0.5, 2, 1)
        for n in range(sp.min_index, 11):
            z = LaurentSeries.monomial(n)
            out = max(out, abs(hardy_norm_circle(z, sp) ** 2 / monomial_norm_sq(n, sp) - 1))
        return out
    yield "monomial_norms_vs_quadrature", {}, lambda: _timed(
        "monomial_norms_vs_quadrature", {}, norms_vs_quadrature, 1e-8)

    for kind in ("eq32", "eq33", "eq34", "fock1", "fock2"):
        yield f"identity_{kind}", {}, lambda kind=kind: _identity_report(kind, seed, gating=True)

    for fam in ("disk", "fock"):
        for kind in KINDS:
            name = f"isometry[{fam},{kind}]"
            yield name, {}, lambda fam=fam, kind=kind, name=name: _isometry_report(fam, kind, seed, name)

    def involution():
        rng = _rng(seed, "involution_square")
        sp = TransformSpec("disk", "involution", 2, 2, -0.5, alpha=1.0)
        bad = 0
        for _ in range(20):
            v = _random_vector(rng, "full", int(rng.integers(1, 16)))
            bad += apply_transform_coeff(sp, apply_transform_coeff(sp, v)) != v
        return float(bad)
    yield "involution_square", {}, lambda: _timed("involution_square", {"vectors": 20}, involution, 0.0,
                                                   note="measured_error counts vectors not restored exactly")

    for fam, kind in (("disk", "full"), ("disk", "even-odd"), ("fock", "odd-odd")):
        name = f"transform_quadrature[{fam},{kind}]"
        yield name, {}, lambda fam=fam, kind=kind, name=name: _transform_quadrature_report(fam, kind, seed, name)

    if cfg.advisory:
        for kind in ("eq35", "fock3", "fock4"):
            yield f"identity_{kind}", {}, lambda kind=kind: _identity_report(kind, seed, gating=False)
        for fam, kind in (("disk", "even-odd"), ("disk", "involution"), ("fock", "odd-odd"),
                          ("fock", "even-odd")):
            yield (f"displayed_kernel[{fam},{kind}]", {},
                   lambda fam=fam, kind=kind: _displayed_kernel_report(fam, kind))


def _spec(fam, kind, p, q):
    return TransformSpec(fam, kind, p, q, -0.25, alpha=0.5 if fam == "disk" else None,
                         theta=1.5 if fam == "fock" else None)


def _identity_report(kind, seed, gating):
    rng = _rng(seed, f"identity_{kind}")
    worst = 0.0
    for p in range(3):
        for q in range(3):
            for _ in range(5):
                xi = 0.8 * math.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
                lhs, rhs = series_identity(kind, xi, p, q, alpha=0.5, beta0=-0.25, theta=1.5)
                worst = max(worst, rel_or_abs(rhs, lhs))
    note = "" if gating else ("reference closed form on the right; a failure here records a disagreement "
                              "between the direct sum and the closed form")
    params = {"alpha": 0.5, "beta0": -0.25, "theta": 1.5, "pq_grid": [0, 1, 2], "samples": 5}
    return VerificationReport(f"identity_{kind}", params, worst, 1e-10, note=note, gating=gating)


def _isometry_report(fam, kind, seed, name):
    rng = _rng(seed, name)
    p, q = (1, 1) if kind == "involution" else (1, 2)
    sp = _spec(fam, kind, p, q)
    worst = 0.0
    t0 = time.perf_counter()
    for _ in range(50):
        v = _random_vector(rng, sp.source_parity, int(rng.integers(1, 11)))
        a = vector_norm(v, sp, p)
        b = vector_norm(apply_transform_coeff(sp, v), sp, q)
        worst = max(worst, abs(a - b) / a)
    return VerificationReport("isometry", sp.to_json(), worst, 1e-12,
                              runtime_ms=(time.perf_counter() - t0) * 1e3)


def _transform_quadrature_report(fam, kind, seed, name):
    rng = _rng(seed, name)
    sp = _spec(fam, kind, 1, 2)
    t0 = time.perf_counter()
    v = _random_vector(rng, sp.source_parity, 8)
    f = series_from_vector(v, sp, sp.p)
    g = apply_transform_coeff(sp, f)
    z = 0.45 * np.exp(2j * np.pi * np.arange(6) / 6 + 0.2j)
    vals = apply_transform_quadrature(sp, f, z, source_rule(sp, 32, 64))
    err = max(rel_or_abs(a, b) for a, b in zip(vals, g(z)))
    return VerificationReport("transform_quadrature", sp.to_json(), err, 1e-7,
                              runtime_ms=(time.perf_counter() - t0) * 1e3)


def _displayed_kernel_report(fam, kind):
    p, q = (1, 1) if kind == "involution" else (1, 2)
    sp = _spec(fam, kind, p, q)
    z, w = 0.6 * np.exp(0.4j), 0.7 * np.exp(-1.2j)
    a, b = displayed_kernel(sp, z, w), kernel_basis_sum(sp, z, w)
    return VerificationReport("displayed_kernel", sp.to_json(), rel_or_abs(a, b), 1e-9, gating=False,
                              note="reference kernel form against the basis-sum definition")


def run_suite(config: SuiteConfig | None = None) -> list[VerificationReport]:
    """Run the registered checks. Failures are recorded, never raised."""
    cfg = config or SuiteConfig()
    if cfg.grid == "empty":
        return []
    if cfg.grid != "default":
        raise DomainError(f"unknown grid {cfg.grid!r}")
    reports = []
    for name, params, thunk in _suite_checks(cfg):
        rep = _guard(name, params, thunk)
        rep.check_name = name
        rep.parameters = {**rep.parameters, "seed": cfg.seed}
        if cfg.tolerance_override is not None:
            rep = VerificationReport(rep.check_name, rep.parameters, rep.measured_error,
                                     cfg.tolerance_override, runtime_ms=rep.runtime_ms,
                                     note=rep.note, gating=rep.gating)
        reports.append(rep)
    return reports


# --- output -----------------------------------------------------------------

def reports_to_json(reports: Iterable[VerificationReport], include_runtime: bool = False) -> str:
    return dumps([r.to_dict(include_runtime) for r in reports])


def format_table(reports: Iterable[VerificationReport]) -> str:
    rows = [f"{'check':<44} {'error':>12} {'tolerance':>10}  result"]
    for r in reports:
        status = "PASS" if r.passed else ("FAIL" if r.gating else "DISAGREE")
        rows.append(f"{r.check_name:<44} {r.measured_error:>12.3e} {r.tolerance:>10.1e}  {status}")
    return "\n".join(rows)
