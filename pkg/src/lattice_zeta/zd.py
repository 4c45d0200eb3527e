"""Spectral zeta function of the integer lattice in d dimensions.

The heat kernel diagonal of the d-dimensional lattice Laplacian factors as
(e^(-2t) I_0(2t))^d.  Its Mellin transform divided by Gamma(s) continues the
zeta function; the continuation is assembled from

* the exact Taylor series of the diagonal on [0, t_c] integrated termwise
  (convergent, so no subtraction noise at the left endpoint),
* a plain quadrature of the diagonal on [t_c, T],
* the large-t expansion subtracted on [T, T*], whose Mellin pieces carry the
  poles at s = n + d/2,
* nothing beyond T*: past the optimal truncation point of the (divergent)
  large-t series both the remainder and the achievable accuracy are below
  the working tolerance.

Rational-coefficient bookkeeping is exact; floats enter only at evaluation.
"""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ParameterDomainError, PoleError
from .quadrature import tanh_sinh
from .special import bessel_i_scaled, reciprocal_gamma

__all__ = ["SeriesSplit", "heat_diag_Zd", "small_t_coeffs", "large_t_coeffs", "zeta_Zd"]


@dataclass(frozen=True)
class SeriesSplit:
    """Truncated small-t and large-t expansions of the heat diagonal."""

    d: int
    N: int
    a: tuple
    b: tuple


def _check_dim(d):
    if d != int(d) or d < 1 or d > 16:
        raise ParameterDomainError("dimension must be an integer in [1, 16]")
    return int(d)


def heat_diag_Zd(d, t):
    """Heat kernel diagonal (e^(-2t) I_0(2t))^d; equals 1 at t = 0."""
    d = _check_dim(d)
    if t < 0.0:
        raise ParameterDomainError("time must be nonnegative")
    return bessel_i_scaled(0, 2.0 * t) ** d


@lru_cache(maxsize=None)
def _taylor_fractions(d, M):
    """Exact Taylor coefficients a_0..a_M of (e^(-2t) I_0(2t))^d."""
    one = []
    for m in range(M + 1):
        acc = Fraction(0)
        for i in range(0, m // 2 + 1):
            j = m - 2 * i
            acc += Fraction((-2) ** j, math.factorial(j) * math.factorial(i) ** 2)
        one.append(acc)
    res = [Fraction(1)] + [Fraction(0)] * M
    for _ in range(d):
        new = [Fraction(0)] * (M + 1)
        for i, ci in enumerate(res):
            if ci == 0:
                continue
            for j, cj in enumerate(one):
                if i + j > M:
                    break
                new[i + j] += ci * cj
        res = new
    return tuple(res)


@lru_cache(maxsize=None)
def _asym_floats(d, N):
    """b_0..b_{N-1} with (e^(-2t) I_0(2t))^d ~ sum b_n t^(-n-d/2)."""
    g = [Fraction(1)]
    for k in range(1, N):
        num = 1
        for j in range(1, k + 1):
            num *= (2 * j - 1) ** 2
        g.append(Fraction(num, math.factorial(k) * 16 ** k))
    res = [Fraction(1)] + [Fraction(0)] * (N - 1)
    for _ in range(d):
        new = [Fraction(0)] * N
        for i, ci in enumerate(res):
            if ci == 0:
                continue
            for j, cj in enumerate(g):
                if i + j >= N:
                    break
                new[i + j] += ci * cj
        res = new
    pref = (4.0 * math.pi) ** (-0.5 * d)
    return tuple(pref * float(x) for x in res)


def small_t_coeffs(d, N):
    """Taylor part of the split, N <= 60 terms."""
    d = _check_dim(d)
    if N < 1 or N > 60:
        raise ParameterDomainError("Taylor truncation order must be in [1, 60]")
    a = tuple(float(x) for x in _taylor_fractions(d, N - 1))
    return SeriesSplit(d=d, N=N, a=a, b=_asym_floats(d, N))


def large_t_coeffs(d, N):
    """Large-t part of the split, N <= 10 terms."""
    d = _check_dim(d)
    if N < 1 or N > 10:
        raise ParameterDomainError("asymptotic truncation order must be in [1, 10]")
    a = tuple(float(x) for x in _taylor_fractions(d, N - 1))
    return SeriesSplit(d=d, N=N, a=a, b=_asym_floats(d, N))


def _is_real_number(s):
    return isinstance(s, (int, float)) and not isinstance(s, bool)


def zeta_Zd(d, s):
    """Continued lattice zeta function; simple poles at s = n + d/2.

    Exact at nonpositive integers, where the value is a_m (-1)^m m!.
    """
    d = _check_dim(d)
    sc = complex(s)
    x = sc.real
    if abs(sc.imag) <= 1e-12:
        shift = x - 0.5 * d
        if shift >= -1e-12 and abs(shift - round(shift)) <= 1e-12:
            raise PoleError("zeta_Zd pole at s = n + d/2", location=sc)
        if x <= 0.0 and x == round(x):
            m = int(-round(x))
            # keep the product rational until the end; the moment is an integer
            v = float(_taylor_fractions(d, m)[m] * (-1) ** m * math.factorial(m))
            return v if _is_real_number(s) else complex(v, 0.0)
    N = max(8, int(math.ceil(abs(x))) + 8)
    T = 2.0 * N
    t_c = 1.0 if x < -2.0 else min(1.0, 1.0 / d)
    # Taylor integral over [0, t_c], continued termwise
    M = 100 + 12 * d
    a = _taylor_fractions(d, M)
    log_tc = math.log(t_c)
    head = float(a[0]) * reciprocal_gamma(sc + 1.0) * cmath.exp(sc * log_tc)
    series = 0.0j
    tp = t_c
    for n in range(1, M + 1):
        an = float(a[n])
        series += an * tp / (sc + n)
        tp *= t_c
        if n > 8 * d and abs(an) * tp < 1e-22:
            break
    series *= cmath.exp(sc * log_tc)
    # rational pole terms from the subtracted series on [T, infinity)
    b = _asym_floats(d, N)
    log_T = math.log(T)
    for n in range(N):
        series += b[n] * cmath.exp((sc - n - 0.5 * d) * log_T) / (n + 0.5 * d - sc)
    # plain quadrature of the diagonal between the two expansion zones
    def middle(v, dist):
        return heat_diag_Zd(d, math.exp(v)) * cmath.exp(sc * v)

    series += tanh_sinh(middle, log_tc, log_T, tol=1e-14).value
    # subtracted tail out to the optimal truncation point of the asymptotics
    T_star = (abs(b[N - 1]) * (4.0 * math.pi) ** (0.5 * d) / 1e-16) ** (1.0 / N)
    if T_star > 1.05 * T:
        def tail(v, dist):
            t = math.exp(v)
            acc = 0.0
            tp_ = t ** (-0.5 * d)
            for n_ in range(N):
                acc += b[n_] * tp_
                tp_ /= t
            r = heat_diag_Zd(d, t) - acc
            if r == 0.0:
                return 0.0j
            return r * cmath.exp(sc * v)

        series += tanh_sinh(tail, log_T, math.log(T_star), tol=1e-14).value
    val = head + reciprocal_gamma(sc) * series
    if _is_real_number(s):
        return val.real
    return val
