"""Regular tree zeta: spectral density, both evaluation routes, Appell F1.

The F1 oracle is the plain Gauss hypergeometric series, written out here
term by term; the density oracles are exact moment identities (mass 1,
mean degree, closed walks of length two).
"""

import cmath
import math

import pytest

from lattice_zeta.errors import (MathDomainError, ParameterDomainError,
                                 QuadratureError)
from lattice_zeta.quadrature import tanh_sinh
from lattice_zeta.tree import (TreeSpec, appell_f1, tree_spectral_density,
                               zeta_tree_closed, zeta_tree_quadrature)


def gauss_2f1(a, b, c, z):
    """Series for 2F1 inside the unit disc, summed to machine accuracy."""
    term = 1.0 + 0.0j
    acc = term
    for k in range(2000):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z
        acc += term
        if abs(term) < 1e-17 * abs(acc):
            return acc
    raise AssertionError("series did not converge")


# ---------------------------------------------------------------------------
# TreeSpec


def test_spec_rejects_small_q():
    for q in (1.0, 0.5, -3.0, math.inf):
        with pytest.raises(ParameterDomainError):
            TreeSpec(q)


def test_spec_arguments_at_q4():
    spec = TreeSpec(4.0)
    assert abs(spec.u + 8.0) < 1e-14
    assert abs(spec.v - 8.0 / 9.0) < 1e-14


def test_spec_arguments_stay_in_domain():
    for q in (1.0001, 2.0, 9.0, 1e6):
        spec = TreeSpec(q)
        assert spec.u < 0.0
        assert 0.0 < spec.v < 1.0


# ---------------------------------------------------------------------------
# spectral density


def test_density_endpoints_vanish():
    # the rounded endpoint may land a few ulps inside the support, where
    # the square-root law still allows a value of order sqrt(eps)
    for q in (2.0, 3.0, 9.0):
        lam = 2.0 * math.sqrt(q)
        assert abs(tree_spectral_density(q, lam)) < 1e-7
        assert abs(tree_spectral_density(q, -lam)) < 1e-7


def test_density_outside_support_raises():
    with pytest.raises(MathDomainError):
        tree_spectral_density(4.0, 4.4)


def test_density_symmetric_and_positive():
    q = 3.0
    for lam in (0.0, 0.5, 1.0, 2.0, 3.3):
        a = tree_spectral_density(q, lam)
        assert a == tree_spectral_density(q, -lam)
        assert a > 0.0


def test_density_center_value():
    # at lambda = 0: (q+1) sqrt(4q) / (2 pi (q+1)^2)
    q = 2.0
    want = math.sqrt(4.0 * q) / (2.0 * math.pi * (q + 1.0))
    assert abs(tree_spectral_density(q, 0.0) - want) < 1e-15


def test_density_total_mass():
    for q in (2.0, 3.0, 5.0, 9.0):
        rq = 2.0 * math.sqrt(q)

        def f(x, dist):
            return tree_spectral_density(q, rq * x) * rq

        mass = float(tanh_sinh(f, -1.0, 1.0, tol=1e-13).value)
        assert abs(mass - 1.0) < 1e-10


# ---------------------------------------------------------------------------
# quadrature route: exact moments


def test_quadrature_moments():
    for q in (2.0, 3.0, 5.0, 9.0):
        deg = q + 1.0
        assert abs(float(zeta_tree_quadrature(q, 0.0)) - 1.0) < 1e-10
        assert abs(float(zeta_tree_quadrature(q, -1.0)) - deg) < 1e-9 * deg
        want2 = deg * deg + deg
        assert abs(float(zeta_tree_quadrature(q, -2.0)) - want2) < 1e-9 * want2


def test_quadrature_result_type():
    r = zeta_tree_quadrature(3.0, 0.7)
    assert isinstance(r.value, float)
    assert r.abs_err < 1e-10
    c = zeta_tree_quadrature(3.0, complex(0.7, 1.0))
    assert isinstance(c.value, complex)


def test_quadrature_conjugation():
    s = complex(0.5, 3.0)
    a = complex(zeta_tree_quadrature(3.0, s.conjugate()))
    b = complex(zeta_tree_quadrature(3.0, s)).conjugate()
    assert abs(a - b) <= 1e-11 * (1.0 + abs(b))


# ---------------------------------------------------------------------------
# Appell F1


def test_f1_no_arguments_is_one():
    assert abs(appell_f1(1.5, 2.0, 1.0, 3.0, 0.0, 0.0) - 1.0) < 1e-13


def test_f1_single_variable_reduction():
    # b1 = 0 leaves the plain Gauss function in v
    got = appell_f1(1.5, 0.0, 1.0, 3.0, -0.7, 0.3)
    want = gauss_2f1(1.5, 1.0, 3.0, 0.3)
    assert abs(got - want) <= 1e-12 * abs(want)


def test_f1_equal_arguments_reduction():
    # u = v merges the two parameters
    got = appell_f1(1.5, 1.5, 1.0, 3.0, 0.4, 0.4)
    want = gauss_2f1(1.5, 2.5, 3.0, 0.4)
    assert abs(got - want) <= 1e-12 * abs(want)


def test_f1_argument_symmetry():
    a = appell_f1(1.5, 2.0, 0.5, 3.5, 0.2, -0.6)
    b = appell_f1(1.5, 0.5, 2.0, 3.5, -0.6, 0.2)
    assert abs(a - b) <= 1e-12 * abs(a)


def test_f1_complex_parameter():
    s = complex(0.5, 3.0)
    a = appell_f1(1.5, s, 1.0, 3.0, -0.5, 0.4)
    b = appell_f1(1.5, s.conjugate(), 1.0, 3.0, -0.5, 0.4)
    assert abs(a - b.conjugate()) <= 1e-12 * (1.0 + abs(a))


def test_f1_domain_errors():
    with pytest.raises(ParameterDomainError):
        appell_f1(3.0, 1.0, 1.0, 2.0, 0.1, 0.1)
    with pytest.raises(ParameterDomainError):
        appell_f1(1.5, 1.0, 1.0, 3.0, 1.0, 0.1)
    with pytest.raises(ParameterDomainError):
        appell_f1(1.5, 1.0, 1.0, 3.0, 0.1, 1.2)


# ---------------------------------------------------------------------------
# two routes against each other


def test_routes_agree_spot_checks():
    for q, s in ((2.0, 0.5), (4.0, 1.0), (3.0, complex(0.5, 3.0)), (2.5, 2.0)):
        quad = complex(zeta_tree_quadrature(q, s))
        closed = complex(zeta_tree_closed(q, s))
        assert abs(closed - quad) <= 1e-8 * (1.0 + abs(quad))


def test_routes_agree_full_grid():
    for q in (2.0, 3.0, 5.0, 9.0):
        for s in (0.0, 1.0, -1.0, 0.5, complex(0.5, 3.0), 2.0):
            quad = complex(zeta_tree_quadrature(q, s))
            closed = complex(zeta_tree_closed(q, s))
            assert abs(closed - quad) <= 1e-8 * (1.0 + abs(quad))


def test_closed_real_in_real_out():
    assert isinstance(zeta_tree_closed(3.0, 0.5), float)
    assert isinstance(zeta_tree_closed(3.0, complex(0.5, 0.0)), complex)
