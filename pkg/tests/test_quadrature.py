"""Quadrature layer: tanh-sinh, Chebyshev-U and Gauss-Jacobi rules."""

import math

import numpy as np
import pytest

from lattice_zeta.errors import QuadratureError
from lattice_zeta.quadrature import (EvalResult, chebyshev_u_rule,
                                     gauss_jacobi_rule, tanh_sinh)


def test_smooth_gaussian():
    res = tanh_sinh(lambda x, dist: math.exp(-x * x), -6.0, 6.0)
    assert abs(res.value - math.sqrt(math.pi)) < 1e-13
    assert res.abs_err < 1e-12


def test_inverse_sqrt_endpoint_singularity():
    # integrand reads the distance argument: the abscissa itself can round
    # onto the endpoint at extreme nodes
    res = tanh_sinh(lambda x, dist: 1.0 / math.sqrt(dist[0]), 0.0, 1.0)
    assert abs(res.value - 2.0) < 1e-12


def test_log_singularity():
    res = tanh_sinh(lambda x, dist: -math.log(dist[0]), 0.0, 1.0)
    assert abs(res.value - 1.0) < 1e-12


def test_both_endpoints_singular():
    res = tanh_sinh(lambda x, dist: 1.0 / math.sqrt(dist[0] * dist[1]),
                    -1.0, 1.0)
    assert abs(res.value - math.pi) < 1e-11


def test_complex_integrand():
    s = 0.3 + 2.0j
    res = tanh_sinh(lambda x, dist: dist[0] ** (s - 1.0), 0.0, 1.0)
    assert isinstance(res.value, complex)
    assert abs(res.value - 1.0 / s) < 1e-12


def test_vectorized_matches_scalar():
    f_s = lambda x, dist: math.sin(3.0 * x) / math.sqrt(dist[1])
    f_v = lambda x, dist: np.sin(3.0 * x) / np.sqrt(dist[1])
    a = tanh_sinh(f_s, 0.0, 1.0)
    b = tanh_sinh(f_v, 0.0, 1.0, vectorized=True)
    assert abs(a.value - b.value) <= 1e-14 * max(1.0, abs(a.value))


def test_degenerate_and_reversed_interval():
    assert tanh_sinh(lambda x, dist: 1.0, 2.0, 2.0).value == 0.0
    with pytest.raises(ValueError):
        tanh_sinh(lambda x, dist: 1.0, 1.0, 0.0)


def test_convergence_failure_reports_best():
    # far too few levels for a hard singularity: must raise, carrying the
    # best value seen so far
    with pytest.raises(QuadratureError) as info:
        tanh_sinh(lambda x, dist: dist[0] ** -0.95, 0.0, 1.0,
                  tol=1e-15, max_level=2)
    assert info.value.best is not None
    assert info.value.err_estimate > 0.0


def test_eval_result_conversions():
    r = EvalResult(1.5 + 0.0j, 1e-14)
    assert float(r) == 1.5
    assert complex(r) == 1.5 + 0.0j


def test_chebyshev_u_rule_moments():
    x, w = chebyshev_u_rule(40)
    assert abs(np.sum(w) - math.pi / 2.0) < 1e-13
    assert abs(np.dot(w, x ** 2) - math.pi / 8.0) < 1e-13
    assert abs(np.dot(w, x ** 3)) < 1e-13


def _jacobi_moment(alpha, beta, k):
    """integral of x^k (1-x)^alpha (1+x)^beta over [-1,1] by tanh-sinh."""
    res = tanh_sinh(lambda x, d: x ** k * d[1] ** alpha * d[0] ** beta,
                    -1.0, 1.0, tol=1e-14)
    return res.value


def test_gauss_jacobi_total_mass():
    alpha, beta = 0.3, -0.5
    x, w = gauss_jacobi_rule(24, alpha, beta)
    mu0 = math.exp((alpha + beta + 1.0) * math.log(2.0)
                   + math.lgamma(alpha + 1.0) + math.lgamma(beta + 1.0)
                   - math.lgamma(alpha + beta + 2.0))
    assert abs(np.sum(w) - mu0) < 1e-13 * mu0


def test_gauss_jacobi_polynomial_moments():
    alpha, beta = 1.25, -0.25
    x, w = gauss_jacobi_rule(10, alpha, beta)
    for k in range(8):
        want = _jacobi_moment(alpha, beta, k)
        assert abs(np.dot(w, x ** k) - want) < 1e-12


def test_gauss_jacobi_chebyshev_shortcut_consistency():
    # alpha = beta = 1/2 short-circuits; a nearby eigen-solve must agree
    xc, wc = gauss_jacobi_rule(30, 0.5, 0.5)
    xe, we = gauss_jacobi_rule(30, 0.5 + 1e-9, 0.5 + 1e-9)
    f = np.exp(xc)
    fe = np.exp(xe)
    assert abs(np.dot(wc, f) - np.dot(we, fe)) < 1e-7


def test_gauss_jacobi_rejects_bad_exponents():
    with pytest.raises(ValueError):
        gauss_jacobi_rule(10, -1.0, 0.0)
    with pytest.raises(ValueError):
        gauss_jacobi_rule(10, 0.0, -1.5)


def test_gauss_jacobi_nodes_inside_interval():
    x, w = gauss_jacobi_rule(50, 2.0, 0.5)
    assert np.all(x > -1.0) and np.all(x < 1.0)
    assert np.all(w > 0.0)
    assert np.all(np.diff(x) > 0.0)
