import json
import math

import mpmath
import numpy as np
import pytest

from dirichlet_rkhs.errors import ConvergenceError, DomainError, ParityError
from dirichlet_rkhs.kernels import bergman_kernel_m0_forms
from dirichlet_rkhs.spaces import BergmanDirichletParams, LaurentSeries, dirichlet_norm, quadrature_inner_product
from dirichlet_rkhs.specfun import pochhammer
from dirichlet_rkhs.transforms import (
    IDENTITY_KINDS,
    KINDS,
    SubspaceVector,
    TransformSpec,
    apply_transform_coeff,
    apply_transform_quadrature,
    c_pq,
    d_pq,
    displayed_kernel,
    gamma_coeff,
    kernel_basis_sum,
    quadrature_transform_series,
    series_from_vector,
    series_identity,
    sigma_coeff,
    source_rule,
    transform_kernel,
    vector_from_series,
    vector_norm,
)

PARITY_KINDS = {"full": "full", "even-even": "even", "odd-odd": "odd", "even-odd": "even", "involution": "full"}


def spec(family, kind, p=1, q=2, beta0=-0.25):
    if kind == "involution":
        q = p
    return TransformSpec(family, kind, p, q, beta0, alpha=0.5 if family == "disk" else None,
                         theta=1.5 if family == "fock" else None)


def random_vector(rng, parity, n):
    return SubspaceVector(parity, rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n))


# --- coefficients -------------------------------------------------------------

def test_gamma_coeff_examples():
    for p in range(4):
        al, b0 = 0.7, -0.4
        want = math.sqrt(pochhammer(b0 + 1, p) / pochhammer(al + b0 + 2, p))
        assert gamma_coeff(0, p, al, b0) == pytest.approx(want, rel=1e-15)
    assert gamma_coeff(3, 0, 0.0, 0.0) == pytest.approx(2.0)
    for p in range(4):
        # with n = p both Pochhammer ratios cancel
        assert gamma_coeff(p, p, 0.7, -0.4) == pytest.approx(1.0, rel=1e-15)


def test_gamma_coeff_normalizes_disk_basis():
    for p in range(3):
        sp = BergmanDirichletParams(1.2, -0.3, p, 1.0, 0)
        for n in range(8):
            e = LaurentSeries.monomial(n - p, gamma_coeff(n, p, 1.2, -0.3))
            assert dirichlet_norm(e, sp) == pytest.approx(1.0, rel=1e-13)


def test_pq_constants():
    for p in range(4):
        assert c_pq(p, p, 0.5, -0.25) == pytest.approx(pochhammer(0.75, p) / pochhammer(2.25, p))
        assert sigma_coeff(p, p, 1.7, -0.25) == pytest.approx(1.0)
    assert d_pq(0, 0, 3.0, -0.5) == 1.0


# --- spec / vectors -----------------------------------------------------------------

def test_spec_aliases_and_validation():
    assert TransformSpec("disk", "S", 1, 2, 0.0, alpha=1.0).kind == "even-odd"
    with pytest.raises(DomainError):
        TransformSpec("disk", "full", 0, 0, 0.0)
    with pytest.raises(DomainError):
        TransformSpec("fock", "full", 0, 0, 0.0, theta=-1.0)
    with pytest.raises(DomainError):
        TransformSpec("disk", "T", 1, 2, 0.0, alpha=1.0)
    with pytest.raises(DomainError):
        TransformSpec("disk", "X", 1, 2, 0.0, alpha=1.0)
    with pytest.raises(DomainError):
        TransformSpec("plane", "full", 1, 2, 0.0, alpha=1.0)


def test_spec_json_round_trip():
    for fam in ("disk", "fock"):
        for kind in KINDS:
            s = spec(fam, kind)
            assert TransformSpec.from_json(json.dumps(s.to_json())) == s
    with pytest.raises(DomainError):
        TransformSpec.from_json('{"family": "disk"}')


def test_vector_series_round_trip(rng):
    s = spec("disk", "full", 2, 1)
    v = random_vector(rng, "full", 7)
    f = series_from_vector(v, s, 2)
    assert f.min_index == -2
    np.testing.assert_allclose(vector_from_series(f, s, 2).coefficients, v.coefficients, rtol=1e-14)
    with pytest.raises(DomainError):
        vector_from_series(LaurentSeries.monomial(-3), s, 2)


def test_vector_from_series_parity_check():
    s = spec("disk", "even-even")
    f = LaurentSeries.monomial(0, 1.0)  # index n = 1 when p = 1
    with pytest.raises(ParityError):
        vector_from_series(f, s, 1, "even")


# --- coefficient path -------------------------------------------------------------

def test_full_transform_maps_basis_to_basis():
    s = TransformSpec("disk", "D", 1, 3, -0.5, alpha=0.5)
    for n in range(5):
        e_src = LaurentSeries.monomial(n - 1, gamma_coeff(n, 1, 0.5, -0.5))
        e_tgt = LaurentSeries.monomial(n - 3, gamma_coeff(n, 3, 0.5, -0.5))
        assert apply_transform_coeff(s, e_src).allclose(e_tgt, 1e-14)


def test_identity_case_leaves_vector_unchanged():
    s = TransformSpec("disk", "D", 2, 2, -0.5, alpha=0.5)
    e0 = SubspaceVector("full", [1.0])
    assert apply_transform_coeff(s, e0) == e0


def test_zero_vector():
    for kind in KINDS:
        s = spec("disk", kind)
        out = apply_transform_coeff(s, SubspaceVector(PARITY_KINDS[kind], []))
        assert not np.any(out.as_full())


def test_involution_squares_to_identity(rng):
    s = TransformSpec("disk", "T", 2, 2, -0.5, alpha=1.0)
    for _ in range(20):
        v = random_vector(rng, "full", int(rng.integers(1, 16)))
        assert apply_transform_coeff(s, apply_transform_coeff(s, v)) == v
    for parity in ("even", "odd"):
        v = random_vector(rng, parity, 5)
        assert apply_transform_coeff(s, apply_transform_coeff(s, v)) == v


def test_involution_on_series():
    s = TransformSpec("fock", "T", 1, 1, -0.5, theta=2.0)
    f = LaurentSeries(-1, [1, 2, 3, 4j])
    assert apply_transform_coeff(s, apply_transform_coeff(s, f)).allclose(f, 1e-13)


def test_parity_mismatch():
    with pytest.raises(ParityError):
        apply_transform_coeff(spec("disk", "G"), SubspaceVector("odd", [1.0]))
    with pytest.raises(ParityError):
        apply_transform_coeff(spec("disk", "J"), SubspaceVector("full", [1.0, 1.0]))
    # a full vector living in the right subspace is accepted
    out = apply_transform_coeff(spec("disk", "J"), SubspaceVector("full", [0.0, 2.0]))
    assert out == SubspaceVector("odd", [2.0])


@pytest.mark.parametrize("family", ["disk", "fock"])
@pytest.mark.parametrize("kind", KINDS)
def test_isometry(family, kind, rng):
    s = spec(family, kind)
    for _ in range(50):
        v = random_vector(rng, s.source_parity, int(rng.integers(1, 11)))
        a = vector_norm(v, s, s.p)
        b = vector_norm(apply_transform_coeff(s, v), s, s.q)
        assert b == pytest.approx(a, rel=1e-12)


# --- kernels ----------------------------------------------------------------------

@pytest.mark.parametrize("family", ["disk", "fock"])
@pytest.mark.parametrize("kind", KINDS)
def test_kernel_matches_basis_sum(family, kind, rng):
    s = spec(family, kind)
    for _ in range(6):
        z = 0.9 * math.sqrt(rng.uniform(0.05, 1)) * np.exp(2j * np.pi * rng.uniform())
        w = 0.9 * math.sqrt(rng.uniform(0.05, 1)) * np.exp(2j * np.pi * rng.uniform())
        a, b = transform_kernel(s, z, w), kernel_basis_sum(s, z, w)
        assert abs(a - b) <= 1e-9 * (1 + abs(b))


def test_kernel_vs_mpmath_sum():
    s = spec("disk", "even-odd", 1, 2)
    z, w = 0.6 * np.exp(0.4j), 0.7 * np.exp(-1.2j)
    with mpmath.workdps(30):
        def e(n, p, x):
            g = mpmath.sqrt(mpmath.rf(0.75, p) / mpmath.rf(2.25, p) * mpmath.rf(2.25, n) / mpmath.rf(0.75, n))
            return g * mpmath.mpc(x) ** (n - p)
        want = mpmath.nsum(lambda k: mpmath.conj(e(2 * int(k), 1, w)) * e(2 * int(k) + 1, 2, z), [0, mpmath.inf])
    assert transform_kernel(s, z, w) == pytest.approx(complex(want), rel=1e-12)


def test_full_kernel_with_equal_poles_is_reproducing_kernel():
    s = TransformSpec("disk", "D", 2, 2, -0.3, alpha=0.5)
    sp = BergmanDirichletParams(0.5, -0.3, 2, 1.0, 0)
    z, w = 0.5 * np.exp(0.3j), 0.6 * np.exp(1.1j)
    assert transform_kernel(s, z, w) == pytest.approx(bergman_kernel_m0_forms(z * np.conj(w), sp)[0], rel=1e-12)


def test_fock_full_kernel_exponential():
    s = TransformSpec("fock", "D", 0, 0, 0.0, theta=1.0)
    assert transform_kernel(s, 1.0, 1.0) == pytest.approx(math.e, rel=1e-14)


def test_kernel_domain():
    with pytest.raises(DomainError):
        transform_kernel(spec("disk", "full"), 1.2, 0.9)
    with pytest.raises(DomainError):
        transform_kernel(spec("disk", "full"), 0.3, 0.0)
    with pytest.raises(DomainError):
        displayed_kernel(spec("fock", "involution"), 0.3, 0.2)


def test_basis_sum_budget_exhaustion():
    s = TransformSpec("disk", "S", 0, 0, 0.0, alpha=0.5)
    with pytest.raises(ConvergenceError):
        kernel_basis_sum(s, 0.99999999, 0.99999999)


@pytest.mark.parametrize("family,kind", [("disk", "full"), ("disk", "even-even"), ("disk", "odd-odd"),
                                         ("fock", "full"), ("fock", "even-even")])
def test_displayed_kernel_agrees_where_it_holds(family, kind):
    s = spec(family, kind)
    z, w = 0.6 * np.exp(0.4j), 0.7 * np.exp(-1.2j)
    assert displayed_kernel(s, z, w) == pytest.approx(kernel_basis_sum(s, z, w), rel=1e-10)


@pytest.mark.parametrize("family,kind", [("disk", "even-odd"), ("disk", "involution"), ("fock", "odd-odd"),
                                         ("fock", "even-odd")])
def test_displayed_kernel_disagreement_is_detectable(family, kind):
    s = spec(family, kind)
    z, w = 0.6 * np.exp(0.4j), 0.7 * np.exp(-1.2j)
    a, b = displayed_kernel(s, z, w), kernel_basis_sum(s, z, w)
    assert abs(a - b) > 1e-6 * abs(b)


# --- identities -------------------------------------------------------------------

@pytest.mark.parametrize("kind", ["eq32", "eq33", "eq34", "fock1", "fock2"])
def test_identities_hold(kind, rng):
    for p in range(3):
        for q in range(3):
            for _ in range(5):
                xi = 0.8 * math.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
                lhs, rhs = series_identity(kind, xi, p, q, alpha=0.5, beta0=-0.25, theta=1.5)
                assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs))


def test_identity_examples():
    lhs, rhs = series_identity("eq32", 0.0, 1, 2, alpha=0.5, beta0=-0.25)
    assert lhs == pytest.approx(c_pq(1, 2, 0.5, -0.25)) and rhs == pytest.approx(lhs)
    lhs, rhs = series_identity("eq34", 0.6, 1, 2, alpha=0.5, beta0=-0.25)
    assert abs(lhs - rhs) < 1e-10 * abs(lhs)
    lhs, rhs = series_identity("fock1", 1.0, 0, 0, beta0=0.0, theta=1.0)
    assert lhs == pytest.approx(math.e) and rhs == pytest.approx(math.e)


@pytest.mark.parametrize("kind", ["eq35", "fock3", "fock4"])
def test_reference_identities_disagree_with_direct_sums(kind):
    lhs, rhs = series_identity(kind, 0.6 * np.exp(0.5j), 1, 2, alpha=0.5, beta0=-0.25, theta=1.5)
    assert abs(lhs - rhs) > 1e-3 * abs(lhs)


def test_identity_arguments():
    assert set(IDENTITY_KINDS) == {"eq32", "eq33", "eq34", "eq35", "fock1", "fock2", "fock3", "fock4"}
    with pytest.raises(DomainError):
        series_identity("eq36", 0.1, 0, 0, beta0=0.0, alpha=1.0)
    with pytest.raises(DomainError):
        series_identity("eq32", 1.1, 0, 0, beta0=0.0, alpha=1.0)
    with pytest.raises(DomainError):
        series_identity("fock1", 0.1, 0, 0, beta0=0.0)


# --- quadrature path ----------------------------------------------------------------

def test_quadrature_examples():
    s = TransformSpec("disk", "D", 1, 2, -0.25, alpha=0.5)
    rule = source_rule(s, 32, 64)
    e0 = LaurentSeries.monomial(-1, gamma_coeff(0, 1, 0.5, -0.25))
    want = gamma_coeff(0, 2, 0.5, -0.25) * 0.4 ** -2
    assert apply_transform_quadrature(s, e0, 0.4, rule) == pytest.approx(want, rel=1e-10)
    assert apply_transform_quadrature(s, LaurentSeries.zero(), 0.4, rule) == 0
    g = TransformSpec("disk", "G", 1, 2, -0.25, alpha=0.5)
    e2 = LaurentSeries.monomial(1, gamma_coeff(2, 1, 0.5, -0.25))
    want = gamma_coeff(2, 2, 0.5, -0.25) * 0.3 ** 0
    assert apply_transform_quadrature(g, e2, 0.3, rule) == pytest.approx(want, rel=1e-8)


@pytest.mark.parametrize("family", ["disk", "fock"])
@pytest.mark.parametrize("kind", KINDS)
def test_quadrature_matches_coefficients(family, kind, rng):
    s = spec(family, kind)
    v = random_vector(rng, s.source_parity, 10 if s.source_parity == "full" else 6)
    f = series_from_vector(v, s, s.p)
    g = apply_transform_coeff(s, f)
    rule = source_rule(s, 32, 64)
    z = 0.45 * np.exp(2j * np.pi * np.arange(5) / 5 + 0.2j)
    vals = apply_transform_quadrature(s, f, z, rule)
    np.testing.assert_allclose(vals, g(z), rtol=1e-7)


def test_quadrature_norm_path(rng):
    s = spec("disk", "even-odd")
    v = random_vector(rng, "even", 5)
    f = series_from_vector(v, s, s.p)
    g = quadrature_transform_series(s, f)
    target = s.space(s.q)
    n_target = math.sqrt(quadrature_inner_product(g, g, target).real)
    assert n_target == pytest.approx(vector_norm(v, s, s.p), rel=1e-7)


def test_quadrature_series_needs_enough_samples():
    s = spec("disk", "full")
    with pytest.raises(DomainError):
        quadrature_transform_series(s, LaurentSeries(0, np.ones(40)), n_samples=16)
