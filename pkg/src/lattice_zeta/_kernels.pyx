# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled summation kernels.

Same contract as _kernels_py: sums are paired k with n - k so sine arguments
stay in (0, pi/2]; Kahan compensation bounds the accumulation error.
"""

from libc.math cimport sin, log, exp, cos, pow, M_PI

import numpy as np

__all__ = ["sps_real", "sps_complex", "log_sps_complex", "torus2_sum_real"]


def sps_real(long n, double sigma):
    cdef double acc = 0.0, comp = 0.0, y, t, v
    cdef long k, half = (n - 1) // 2
    with nogil:
        for k in range(1, half + 1):
            v = pow(sin(M_PI * (<double> k / <double> n)), -sigma)
            y = v - comp
            t = acc + y
            comp = (t - acc) - y
            acc = t
    acc *= 2.0
    if n % 2 == 0:
        acc += 1.0
    return acc


def sps_complex(long n, double complex s):
    cdef double a = s.real, b = s.imag
    cdef double re = 0.0, im = 0.0, cre = 0.0, cim = 0.0
    cdef double L, r, vre, vim, y, t
    cdef long k, half = (n - 1) // 2
    with nogil:
        for k in range(1, half + 1):
            L = log(sin(M_PI * (<double> k / <double> n)))
            r = exp(-a * L)
            vre = r * cos(b * L)
            vim = -r * sin(b * L)
            y = vre - cre; t = re + y; cre = (t - re) - y; re = t
            y = vim - cim; t = im + y; cim = (t - im) - y; im = t
    re *= 2.0
    im *= 2.0
    if n % 2 == 0:
        re += 1.0
    return complex(re, im)


def log_sps_complex(long n, double complex s):
    cdef double a = s.real, b = s.imag
    cdef double re = 0.0, im = 0.0, cre = 0.0, cim = 0.0
    cdef double L, r, vre, vim, y, t
    cdef long k, half = (n - 1) // 2
    with nogil:
        for k in range(1, half + 1):
            L = log(sin(M_PI * (<double> k / <double> n)))
            r = L * exp(-a * L)
            vre = r * cos(b * L)
            vim = -r * sin(b * L)
            y = vre - cre; t = re + y; cre = (t - re) - y; re = t
            y = vim - cim; t = im + y; cim = (t - im) - y; im = t
    return complex(2.0 * re, 2.0 * im)


def torus2_sum_real(long m1, long m2, double sigma):
    cdef long h1 = m1 // 2, h2 = m2 // 2
    cdef double[::1] u1 = np.empty(h1 + 1), w1 = np.empty(h1 + 1)
    cdef double[::1] u2 = np.empty(h2 + 1), w2 = np.empty(h2 + 1)
    cdef long i, j
    cdef double acc = 0.0, comp = 0.0, y, t, v, s1
    with nogil:
        for i in range(h1 + 1):
            s1 = sin(M_PI * (<double> i / <double> m1))
            u1[i] = s1 * s1
            w1[i] = 2.0
        w1[0] = 1.0
        if m1 % 2 == 0:
            w1[h1] = 1.0
        for j in range(h2 + 1):
            s1 = sin(M_PI * (<double> j / <double> m2))
            u2[j] = s1 * s1
            w2[j] = 2.0
        w2[0] = 1.0
        if m2 % 2 == 0:
            w2[h2] = 1.0
        for j in range(1, h2 + 1):
            v = w2[j] * pow(u2[j], -sigma)
            y = v - comp; t = acc + y; comp = (t - acc) - y; acc = t
        for i in range(1, h1 + 1):
            for j in range(h2 + 1):
                v = w1[i] * w2[j] * pow(u1[i] + u2[j], -sigma)
                y = v - comp; t = acc + y; comp = (t - acc) - y; acc = t
    return acc
