"""Pure numpy implementations of the summation kernels.

The compiled module exports the same four callables; whichever is importable
wins (see backend.py).  Sums pair k with n - k so the sine argument stays in
(0, pi/2], where it is computed to full relative accuracy; numpy's pairwise
summation keeps accumulation error at the ulp level.
"""

import numpy as np

__all__ = ["sps_real", "sps_complex", "log_sps_complex", "torus2_sum_real"]


def _half_angles(n):
    k = np.arange(1, (n - 1) // 2 + 1)
    return np.sin(np.pi * (k / n))


def sps_real(n, sigma):
    """sum_{k=1}^{n-1} sin(pi k/n)^(-sigma) for real sigma."""
    s = _half_angles(n)
    total = 2.0 * np.sum(s ** (-sigma))
    if n % 2 == 0:
        total += 1.0
    return float(total)


def sps_complex(n, s):
    """Same sum for complex exponent."""
    ls = np.log(_half_angles(n))
    total = 2.0 * np.sum(np.exp((-s) * ls))
    if n % 2 == 0:
        total += 1.0
    return complex(total)


def log_sps_complex(n, s):
    """sum_{k=1}^{n-1} log(sin(pi k/n)) sin(pi k/n)^(-s)."""
    ls = np.log(_half_angles(n))
    total = 2.0 * np.sum(ls * np.exp((-s) * ls))
    # the middle term of an even n contributes log(1) * 1 = 0
    return complex(total)


def _axis_weights(m):
    """Compressed (sin^2 values, multiplicities) for one torus axis."""
    half = m // 2
    k = np.arange(0, half + 1)
    u = np.sin(np.pi * (k / m)) ** 2
    w = np.full(half + 1, 2.0)
    w[0] = 1.0
    if m % 2 == 0:
        w[half] = 1.0
    return u, w


def torus2_sum_real(m1, m2, sigma):
    """sum over (k1,k2) != (0,0) of (sin^2(pi k1/m1) + sin^2(pi k2/m2))^(-sigma)."""
    u1, w1 = _axis_weights(m1)
    u2, w2 = _axis_weights(m2)
    total = 0.0
    # k1 = 0 row separately: drop the (0,0) cell
    total += np.dot(w2[1:], u2[1:] ** (-sigma))
    for i in range(1, u1.shape[0]):
        total += w1[i] * np.dot(w2, (u1[i] + u2) ** (-sigma))
    return float(total)
