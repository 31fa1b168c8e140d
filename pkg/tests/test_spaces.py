import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dirichlet_rkhs.errors import DomainError, IndexRangeError
from dirichlet_rkhs.spaces import (
    BargmannDirichletParams,
    BergmanDirichletParams,
    HardyDirichletParams,
    LaurentSeries,
    base_norm,
    dirichlet_inner_product,
    dirichlet_norm,
    eta,
    hardy_norm_circle,
    laurent_from_samples,
    monomial_norm,
    monomial_norm_bargmann,
    monomial_norm_bergman,
    monomial_norm_hardy,
    monomial_norm_sq,
    norm_sq_table,
    quadrature_inner_product,
    radial_mean,
    space_rule,
    split_f1_f2,
)

coef = st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False)


def series(lo, coefficients):
    return LaurentSeries(lo, coefficients)


# --- LaurentSeries -------------------------------------------------------------

def test_evaluate_examples():
    assert LaurentSeries.monomial(0)(3.7 + 1j) == 1
    assert LaurentSeries.from_dict({-1: 1, 1: 1})(2.0) == pytest.approx(2.5)
    geo = LaurentSeries(0, np.ones(41))
    assert geo(0.5) == pytest.approx(2 * (1 - 0.5 ** 41), rel=1e-15)


def test_evaluate_rejects_zero_with_poles():
    with pytest.raises(DomainError):
        LaurentSeries.monomial(-2)(0.0)
    assert LaurentSeries(0, [1, 2])(0.0) == 1


def test_evaluate_vectorized():
    f = LaurentSeries(-1, [1, 0, 2j])
    z = np.array([0.5, 1j, -2.0])
    np.testing.assert_allclose(f(z), 1 / z + 2j * z)


def test_series_is_immutable():
    f = LaurentSeries(0, [1, 2])
    with pytest.raises(ValueError):
        f.coefficients[0] = 5


def test_accessors():
    f = LaurentSeries(-2, [0, 0, 1, 3])
    assert (f.min_index, f.max_index) == (-2, 1)
    assert f.coeff(1) == 3 and f.coeff(5) == 0 and f.coeff(-9) == 0
    assert f.lowest_nonzero() == 0
    assert LaurentSeries.zero().lowest_nonzero() is None
    assert f.restrict(0, 0) == LaurentSeries.monomial(0)
    assert list(f.indices) == [-2, -1, 0, 1]


def test_arithmetic():
    f = LaurentSeries(-1, [1, 2])
    g = LaurentSeries(0, [5, 0, 1])
    h = f + g
    assert h == LaurentSeries.from_dict({-1: 1, 0: 7, 2: 1})
    assert (h - g) == f
    assert (2 * f) == LaurentSeries(-1, [2, 4])
    assert (-f) == LaurentSeries(-1, [-1, -2])
    assert f.allclose(f + LaurentSeries.monomial(3, 1e-15))


@given(st.integers(-5, 5), st.lists(coef, min_size=1, max_size=8), st.integers(0, 3))
def test_derivative_matches_difference_quotient(lo, c, order):
    f = LaurentSeries(lo, c)
    d = f.derivative(order)
    z = 0.7 + 0.4j
    # compare against the termwise formula directly
    want = 0j
    for n, a in f.items():
        fac = 1.0
        for j in range(order):
            fac *= n - j
        if fac != 0:
            want += a * fac * z ** (n - order)
    assert d(z) == pytest.approx(want, rel=1e-12, abs=1e-12)


def test_derivative_of_polynomial_has_no_principal_part():
    f = LaurentSeries(0, [1, 2, 3])
    assert f.derivative(3).min_index >= 0
    assert f.derivative(1) == LaurentSeries(0, [2, 6])


@given(st.integers(-10, 10), st.lists(coef, min_size=1, max_size=10))
def test_json_round_trip(lo, c):
    f = LaurentSeries(lo, c)
    assert LaurentSeries.from_json(f.to_json()) == f


@pytest.mark.parametrize("bad", ['{"min_index": 0}', '{"min_index": 1.5, "coefficients": [1]}',
                                 '{"min_index": 0, "coefficients": [[1, 2, 3]]}', "[1, 2]", "{oops"])
def test_json_malformed(bad):
    with pytest.raises(DomainError):
        LaurentSeries.from_json(bad)


# --- parameters, eta, split -------------------------------------------------------

def test_params_validation_and_min_index():
    assert BergmanDirichletParams(0.5, -0.5, 3, 1.0, 1).min_index == -2
    assert BergmanDirichletParams(0.5, -0.5, 1, 1.0, 2).min_index == 0
    assert BargmannDirichletParams(1.0, 0.0, 2, 0).min_index == -2
    with pytest.raises(DomainError):
        BergmanDirichletParams(0.5, 0.0, 0, 1.0, -1)
    with pytest.raises(DomainError):
        BargmannDirichletParams(-1.0, 0.0)
    with pytest.raises(DomainError):
        HardyDirichletParams(0.3)


@pytest.mark.parametrize("s,beta,want", [(2, 0.0, 0), (2, -0.5 + 3, 3), (2, -0.25 + 1, 1), (1, 0.0, 1),
                                         (2, 0.1 + 0.9, 1)])
def test_eta(s, beta, want):
    assert eta(s, beta) == want


def test_split_examples():
    f = LaurentSeries(0, [1, 1])
    f1, f2 = split_f1_f2(f, 0, 0)
    assert f1 == LaurentSeries.zero() and f2 == f
    f1, f2 = split_f1_f2(LaurentSeries(0, [1, 1, 1, 1]), 2, 0)
    assert f1 == LaurentSeries(0, [1, 1]) and f2 == LaurentSeries(2, [1, 1])
    f1, f2 = split_f1_f2(LaurentSeries.from_dict({-2: 1, 0: 1, 1: 1}), 1, 3)
    assert f1 == LaurentSeries.monomial(0)
    assert f2 == LaurentSeries.from_dict({-2: 1, 1: 1})
    with pytest.raises(IndexRangeError):
        split_f1_f2(LaurentSeries.monomial(-3), 1, 3)


# --- monomial norms --------------------------------------------------------------

def test_bergman_norm_examples():
    assert monomial_norm_bergman(0, BergmanDirichletParams(0.5, -0.5, 0, 1.0, 2)) == pytest.approx(1.0)
    assert monomial_norm_bergman(3, BergmanDirichletParams(0.0, 0.0)) == pytest.approx(0.5)
    assert monomial_norm_bergman(-1, BergmanDirichletParams(0.0, 0.0, 1)) == pytest.approx(math.sqrt(2))


def test_bargmann_norm_examples():
    assert monomial_norm_bargmann(0, BargmannDirichletParams(1.3, -0.2, 1, 2)) == pytest.approx(1.0)
    assert monomial_norm_bargmann(2, BargmannDirichletParams(1.0, 0.0)) == pytest.approx(math.sqrt(2))
    for m in range(4):
        assert monomial_norm_bargmann(m, BargmannDirichletParams(2.0, -0.3, 2, m)) == pytest.approx(
            math.factorial(m))


def test_hardy_norm_examples():
    assert monomial_norm_hardy(0, HardyDirichletParams(0.0, 0, 1)) == 1.0
    assert monomial_norm_hardy(3, HardyDirichletParams(0.0, 0, 2)) == pytest.approx(6.0)
    assert monomial_norm_hardy(-1, HardyDirichletParams(-0.5, 2, 0)) == pytest.approx(1.0)
    with pytest.raises(DomainError):
        monomial_norm_sq(1, HardyDirichletParams(0.0, 0, 0, s=1))


def test_index_below_range_raises():
    with pytest.raises(IndexRangeError):
        monomial_norm(-3, BergmanDirichletParams(0.5, 0.0, 2))
    assert issubclass(IndexRangeError, DomainError)


@pytest.mark.parametrize("space", [
    BergmanDirichletParams(0.5, -0.5, 3, 1.3, 1),
    BergmanDirichletParams(2.0, 0.0, 0, 0.4, 2),
    BargmannDirichletParams(1.7, -0.25, 2, 1),
    HardyDirichletParams(-0.5, 3, 1),
])
def test_norm_table_matches_pointwise(space):
    lo = space.min_index
    table = norm_sq_table(space, lo, 60)
    for n in range(lo, 61):
        assert table[n - lo] == pytest.approx(monomial_norm_sq(n, space), rel=1e-12)


@pytest.mark.parametrize("space", [
    BergmanDirichletParams(0.5, -0.5, 3, 1.2, 2),
    BergmanDirichletParams(2.0, 0.0, 1, 0.8, 0),
    BargmannDirichletParams(1.5, -0.25, 2, 1),
    BargmannDirichletParams(0.6, 0.0, 0, 2),
])
def test_norms_vs_quadrature(space):
    rule = space_rule(space, 40, 64)
    for n in range(space.min_index, 12):
        z = LaurentSeries.monomial(n)
        q = quadrature_inner_product(z, z, space, rule).real
        assert q == pytest.approx(monomial_norm_sq(n, space), rel=1e-8)


@pytest.mark.parametrize("space", [HardyDirichletParams(-0.5, 2, 1), HardyDirichletParams(0.0, 0, 2)])
def test_hardy_norms_vs_circle(space):
    for n in range(space.min_index, 10):
        val = hardy_norm_circle(LaurentSeries.monomial(n), space) ** 2
        assert val == pytest.approx(monomial_norm_sq(n, space), rel=1e-8)


# --- inner products ---------------------------------------------------------------

def test_inner_product_examples():
    sp = BergmanDirichletParams(0.0, 0.0)
    f = LaurentSeries(0, [1, 1])
    assert dirichlet_inner_product(f, f, sp).real == pytest.approx(1.5)
    for n in range(0, 5):
        e_n = LaurentSeries.monomial(n, 1 / monomial_norm(n, sp))
        assert dirichlet_norm(e_n, sp) == pytest.approx(1.0)
        e_k = LaurentSeries.monomial(n + 1, 1 / monomial_norm(n + 1, sp))
        assert dirichlet_inner_product(e_n, e_k, sp) == 0


@settings(max_examples=30, deadline=None)
@given(st.lists(coef, min_size=1, max_size=12))
def test_parseval(c):
    sp = BergmanDirichletParams(1.5, -0.5, 2, 1.4, 1)
    f = LaurentSeries(sp.min_index, c)
    want = sum(abs(a) ** 2 * monomial_norm_sq(n, sp) for n, a in f.items())
    assert dirichlet_inner_product(f, f, sp).real == pytest.approx(want, rel=1e-12, abs=1e-300)


def test_inner_product_is_sesquilinear():
    sp = BargmannDirichletParams(1.2, -0.3, 2, 1)
    f = LaurentSeries(-1, [1, 2j, 3])
    g = LaurentSeries(0, [1 - 1j, 0.5])
    a = 0.3 + 2j
    assert dirichlet_inner_product(a * f, g, sp) == pytest.approx(a * dirichlet_inner_product(f, g, sp))
    assert dirichlet_inner_product(f, a * g, sp) == pytest.approx(np.conj(a) * dirichlet_inner_product(f, g, sp))
    assert dirichlet_inner_product(g, f, sp) == pytest.approx(np.conj(dirichlet_inner_product(f, g, sp)))


def test_inner_product_rejects_deep_poles():
    with pytest.raises(IndexRangeError):
        dirichlet_norm(LaurentSeries.monomial(-2), BergmanDirichletParams(0.5, 0.0, 1))


def test_quadrature_inner_product_random(rng):
    sp = BergmanDirichletParams(0.5, -0.25, 3, 1.1, 1)
    rule = space_rule(sp, 40, 64)
    f = LaurentSeries(sp.min_index, rng.uniform(-1, 1, 10) + 1j * rng.uniform(-1, 1, 10))
    g = LaurentSeries(sp.min_index, rng.uniform(-1, 1, 10) + 1j * rng.uniform(-1, 1, 10))
    want = dirichlet_inner_product(f, g, sp)
    assert abs(quadrature_inner_product(f, g, sp, rule) - want) <= 1e-9 * abs(want)


def test_space_rule_rejects_hardy():
    with pytest.raises(DomainError):
        space_rule(HardyDirichletParams(0.0))


def test_continuity_inequality(rng):
    for _ in range(50):
        sp = BergmanDirichletParams(float(rng.choice([0.5, 2.0])), float(rng.choice([0.0, -0.5])),
                                    int(rng.integers(0, 4)), float(rng.uniform(0.5, 2)), int(rng.integers(0, 3)))
        n = 20
        f = LaurentSeries(sp.min_index, rng.uniform(0, 1, n) + 1j * rng.uniform(0, 1, n))
        assert base_norm(f, sp) <= max(1.0, sp.R ** sp.m) * dirichlet_norm(f, sp) * (1 + 1e-12)


# --- circle means -----------------------------------------------------------------

def test_radial_mean_examples():
    assert radial_mean(LaurentSeries.monomial(0, 3 - 4j), 0.5) == pytest.approx(5.0)
    assert radial_mean(LaurentSeries.monomial(1), 0.5) == pytest.approx(0.5)
    assert radial_mean(LaurentSeries(0, [1, 1]), 0.5) == pytest.approx(math.sqrt(1.25))
    with pytest.raises(DomainError):
        radial_mean(LaurentSeries.monomial(0), 0.0)


def test_laurent_from_samples_round_trip():
    f = LaurentSeries(-3, [1, 2j, 0, 4, 5 - 1j])
    N = 32
    r = 0.8
    vals = f(r * np.exp(2j * np.pi * np.arange(N) / N))
    g = laurent_from_samples(vals, r, -3, 1)
    assert g.allclose(f, 1e-12)
