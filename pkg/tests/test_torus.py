"""Continuous torus: heat trace, eigenvalue enumeration, continued zeta.

Oracles: direct lattice sums in numpy with analytic tail corrections,
the Poisson dual of the theta sum written out longhand, and the exact
d = 1 special values 1/12 and 1/720.
"""

import math

import numpy as np
import pytest

from lattice_zeta.errors import ParameterDomainError, PoleError
from lattice_zeta.lattices import DiagonalLattice
from lattice_zeta.torus import (TorusEigenvalueEnumerator, torus_theta,
                                zeta_real_torus)

FOUR_PI_SQ = 4.0 * math.pi ** 2


def rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


# ---------------------------------------------------------------------------
# theta


def test_theta_matches_direct_sum():
    lat = DiagonalLattice((1.0,))
    for t in (0.05, 0.1, 0.7, 3.0):
        direct = 1.0 + 2.0 * sum(math.exp(-FOUR_PI_SQ * m * m * t)
                                 for m in range(1, 200))
        got = torus_theta(lat, t)
        assert rel(float(got), direct) < 1e-14
        assert got.abs_err >= 0.0


def test_theta_poisson_identity():
    # sum exp(-4 pi^2 m^2 t) = (4 pi t)^(-1/2) sum exp(-m^2 / 4t)
    lat = DiagonalLattice((1.0,))
    for t in (0.02, 0.05, 0.08):
        dual = sum(math.exp(-m * m / (4.0 * t)) for m in range(-60, 61))
        want = (4.0 * math.pi * t) ** -0.5 * dual
        assert rel(float(torus_theta(lat, t)), want) < 1e-13


def test_theta_product_structure():
    t = 0.11
    one = float(torus_theta(DiagonalLattice((1.0,)), t))
    two = float(torus_theta(DiagonalLattice((2.0,)), t))
    both = float(torus_theta(DiagonalLattice((1.0, 2.0)), t))
    assert rel(both, one * two) < 1e-14


def test_theta_small_time_law():
    lat = DiagonalLattice((1.0, 2.0))
    t = 0.001
    lead = lat.det() * (4.0 * math.pi * t) ** -1.0
    assert rel(float(torus_theta(lat, t)), lead) < 1e-12


def test_theta_strictly_decreasing():
    lat = DiagonalLattice((1.0, 2.0))
    ts = np.geomspace(1e-3, 3.0, 120)
    vals = [float(torus_theta(lat, t)) for t in ts]
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_theta_rejects_bad_time():
    with pytest.raises(ParameterDomainError):
        torus_theta(DiagonalLattice((1.0,)), 0.0)
    with pytest.raises(ParameterDomainError):
        torus_theta(DiagonalLattice((1.0,)), -1.0)


# ---------------------------------------------------------------------------
# eigenvalue enumerator


def test_enumerator_small_radius_by_hand():
    lat = DiagonalLattice((1.0,))
    ev = TorusEigenvalueEnumerator(lat, 10.0).eigenvalues()
    # modes k = -1, 0, 1
    assert len(ev) == 3
    assert ev[0] == 0.0
    assert rel(ev[1], FOUR_PI_SQ) < 1e-15
    assert rel(ev[2], FOUR_PI_SQ) < 1e-15


def test_enumerator_zero_mode_once():
    ev = TorusEigenvalueEnumerator(DiagonalLattice((1.0, 2.0)), 9.0).eigenvalues()
    assert np.count_nonzero(ev == 0.0) == 1
    assert np.all(ev <= 81.0)
    assert np.all(np.diff(ev) >= 0.0)


def test_enumerator_weyl_count():
    # eigenvalue count up to R^2 grows like det * R^2 / (4 pi)
    lat = DiagonalLattice((1.0, 2.0))
    r = 120.0
    n = len(TorusEigenvalueEnumerator(lat, r).eigenvalues())
    want = lat.det() * r * r / (4.0 * math.pi)
    assert abs(n / want - 1.0) < 0.05


def test_enumerator_rejects_bad_radius():
    with pytest.raises(ParameterDomainError):
        TorusEigenvalueEnumerator(DiagonalLattice((1.0,)), 0.0)


# ---------------------------------------------------------------------------
# zeta: convergent region against direct sums


def test_zeta_torus_d1_exact_values():
    lat = DiagonalLattice((1.0,))
    # 2 (2 pi)^(-2s) zeta(2s) at s = 1 and 2
    assert rel(zeta_real_torus(lat, 1.0), 1.0 / 12.0) < 1e-10
    assert rel(zeta_real_torus(lat, 2.0), 1.0 / 720.0) < 1e-10


def test_zeta_torus_d2_direct_sum_oracle():
    s = 2.5
    K = 800
    k = np.arange(-K, K + 1, dtype=float)
    q = k[:, None] ** 2 + k[None, :] ** 2
    inside = (q > 0.0) & (q <= K * K)
    sum_disc = np.sum(q[inside] ** -s)
    # integral tail over |x| > K plus curvature-size slack
    tail = 2.0 * math.pi * K ** (2.0 - 2.0 * s) / (2.0 * s - 2.0)
    want = FOUR_PI_SQ ** -s * (sum_disc + tail)
    got = zeta_real_torus(DiagonalLattice((1.0, 1.0)), s)
    assert rel(got, want) < 1e-8


def test_zeta_torus_matches_enumerator():
    lat = DiagonalLattice((1.0, 2.0))
    s = 3.0
    ev = TorusEigenvalueEnumerator(lat, 2.0 * math.pi * 30.0).eigenvalues()
    direct = np.sum(ev[ev > 0.0] ** -s)
    assert rel(zeta_real_torus(lat, s), direct) < 1e-6


# ---------------------------------------------------------------------------
# zeta: continuation


def test_zeta_torus_value_at_zero():
    for sides in ((1.0,), (1.0, 2.0), (0.5, 1.0, 2.0)):
        assert abs(zeta_real_torus(DiagonalLattice(sides), 0.0) + 1.0) < 1e-14


def test_zeta_torus_accepts_plain_tuple():
    a = zeta_real_torus((1.0, 2.0), 0.8)
    b = zeta_real_torus(DiagonalLattice((1.0, 2.0)), 0.8)
    assert a == b


def test_zeta_torus_pole_error():
    for sides, d in (((1.0,), 1), ((1.0, 2.0), 2), ((1.0, 1.0, 1.0), 3)):
        with pytest.raises(PoleError):
            zeta_real_torus(DiagonalLattice(sides), 0.5 * d)


def test_zeta_torus_residue():
    # residue at s = d/2 is det (4 pi)^(-d/2) / Gamma(d/2); both cases 1/(2 pi)
    cases = ((DiagonalLattice((1.0,)), 0.5), (DiagonalLattice((1.0, 2.0)), 1.0))
    res = 1.0 / (2.0 * math.pi)
    for lat, pole in cases:
        for delta in (1e-6, -1e-6, 1e-6j, -1e-6j):
            s = pole + delta
            v = complex(zeta_real_torus(lat, s)) * (s - pole)
            assert abs(v - res) < 1e-4


def test_zeta_torus_conjugation():
    lat = DiagonalLattice((1.0, 2.0))
    s = complex(0.7, 3.0)
    a = zeta_real_torus(lat, s.conjugate())
    b = zeta_real_torus(lat, s).conjugate()
    assert abs(a - b) <= 1e-12 * (1.0 + abs(b))


def test_zeta_torus_real_in_real_out():
    lat = DiagonalLattice((1.0,))
    assert isinstance(zeta_real_torus(lat, 0.3), float)
    assert isinstance(zeta_real_torus(lat, complex(0.3, 0.0)), complex)


def test_zeta_torus_scaling_law():
    # scaling every side by c multiplies eigenvalues by c^-2
    s = 0.8
    a = zeta_real_torus(DiagonalLattice((3.0, 6.0)), s)
    b = 3.0 ** (2.0 * s) * zeta_real_torus(DiagonalLattice((1.0, 2.0)), s)
    assert rel(a, b) < 1e-10
