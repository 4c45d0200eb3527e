"""Backend parity: the compiled kernels and the numpy twins must agree."""

import math
import random

from lattice_zeta import _kernels_py
from lattice_zeta import backend

try:
    from lattice_zeta import _kernels
    HAVE_COMPILED = True
except ImportError:
    _kernels = None
    HAVE_COMPILED = False


def test_backend_selection_is_consistent():
    assert backend.BACKEND in ("compiled", "python")
    if HAVE_COMPILED:
        assert backend.BACKEND == "compiled"
        assert backend.sps_real is _kernels.sps_real
    else:
        assert backend.sps_real is _kernels_py.sps_real


def _pairs():
    rng = random.Random(5150)
    for _ in range(40):
        n = rng.randint(2, 3000)
        s = complex(rng.uniform(-3.0, 3.0), rng.uniform(-30.0, 30.0))
        yield n, s


def test_sps_real_parity():
    if not HAVE_COMPILED:
        return
    for n, s in _pairs():
        a = _kernels.sps_real(n, s.real)
        b = _kernels_py.sps_real(n, s.real)
        assert abs(a - b) <= 1e-12 * (1.0 + abs(b))


def test_sps_complex_parity():
    if not HAVE_COMPILED:
        return
    for n, s in _pairs():
        a = _kernels.sps_complex(n, s)
        b = _kernels_py.sps_complex(n, s)
        assert abs(a - b) <= 1e-12 * (1.0 + abs(b))


def test_log_sps_parity():
    if not HAVE_COMPILED:
        return
    for n, s in _pairs():
        a = _kernels.log_sps_complex(n, s)
        b = _kernels_py.log_sps_complex(n, s)
        assert abs(a - b) <= 1e-12 * (1.0 + abs(b))


def test_torus2_parity():
    if not HAVE_COMPILED:
        return
    rng = random.Random(88)
    for _ in range(20):
        m1 = rng.randint(2, 80)
        m2 = rng.randint(2, 80)
        sigma = rng.uniform(-2.0, 3.0)
        a = _kernels.torus2_sum_real(m1, m2, sigma)
        b = _kernels_py.torus2_sum_real(m1, m2, sigma)
        assert abs(a - b) <= 1e-12 * (1.0 + abs(b))


def test_sps_real_exact_identity():
    # sum of 1/sin^2 has the closed value (n^2-1)/3
    for n in (2, 3, 10, 101, 10000):
        want = (n * n - 1.0) / 3.0
        assert abs(backend.sps_real(n, 2.0) - want) <= 1e-12 * want


def test_sps_complex_reduces_to_real():
    for n in (2, 7, 64, 999):
        a = backend.sps_complex(n, complex(1.3, 0.0))
        b = backend.sps_real(n, 1.3)
        assert abs(a.imag) < 1e-13 * abs(b)
        assert abs(a.real - b) <= 1e-12 * abs(b)


def test_torus2_direct_small_cases():
    for m1, m2, sigma in [(2, 2, 1.0), (3, 5, 0.7), (6, 4, -1.3), (2, 9, 2.0)]:
        direct = 0.0
        for k1 in range(m1):
            for k2 in range(m2):
                if k1 == 0 and k2 == 0:
                    continue
                base = (math.sin(math.pi * k1 / m1) ** 2
                        + math.sin(math.pi * k2 / m2) ** 2)
                direct += base ** (-sigma)
        got = backend.torus2_sum_real(m1, m2, sigma)
        assert abs(got - direct) <= 1e-12 * abs(direct)


def test_torus2_symmetry():
    assert abs(backend.torus2_sum_real(12, 30, 0.8)
               - backend.torus2_sum_real(30, 12, 0.8)) < 1e-11


def test_log_sps_is_minus_derivative_of_sps():
    # d/ds sin^(-s) = -log(sin) sin^(-s), so the log sum is -d/ds of sps
    n, s = 150, complex(0.6, 3.0)
    h = 1e-6
    fd = (backend.sps_complex(n, s + h) - backend.sps_complex(n, s - h)) / (2.0 * h)
    assert abs(-backend.log_sps_complex(n, s) - fd) < 1e-5 * (1.0 + abs(fd))
