"""Spectral zeta functions of cycle graphs, discrete tori and the integer line.

The cycle on n vertices has Laplacian eigenvalues 4 sin^2(pi k/n), so its
zeta function is a finite sine sum; the line graph limit has the closed form

    zeta_line(s) = 4^(-s) Gamma(1/2 - s) / (sqrt(pi) Gamma(1 - s)),

meromorphic with poles at the positive half integers and zeros at the
positive integers.  Discrete tori in any dimension reduce to compressed
per-axis sine tables.
"""

import cmath
import math
from fractions import Fraction

import numpy as np

from . import backend
from ._kernels_py import _axis_weights
from .errors import ParameterDomainError, PoleError
from .special import digamma, log_gamma

__all__ = [
    "sine_power_sum",
    "zeta_cycle",
    "zeta_discrete_torus",
    "zeta_Z",
    "xi_Z",
    "zeta_Z_deriv",
    "inverse_even_sum_closed",
    "sine_sum_at_one",
    "waldvogel_model",
]

_EULER_GAMMA = 0.5772156649015329
_SQRT_PI = math.sqrt(math.pi)


def _check_order(n):
    if n != int(n) or n < 2:
        raise ParameterDomainError("graph order must be an integer >= 2")
    return int(n)


def _is_real_number(s):
    return isinstance(s, (int, float)) and not isinstance(s, bool)


def sine_power_sum(n, s):
    """sum_{k=1}^{n-1} sin(pi k/n)^(-s); real in, real out."""
    n = _check_order(n)
    if _is_real_number(s):
        return backend.sps_real(n, float(s))
    s = complex(s)
    if s.imag == 0.0:
        return complex(backend.sps_real(n, s.real), 0.0)
    return backend.sps_complex(n, s)


def zeta_cycle(n, s):
    """Spectral zeta function of the cycle graph on n vertices."""
    n = _check_order(n)
    if _is_real_number(s):
        return 4.0 ** (-s) * backend.sps_real(n, 2.0 * s)
    s = complex(s)
    return cmath.exp(-s * math.log(4.0)) * sine_power_sum(n, 2.0 * s)


def zeta_discrete_torus(sides, s):
    """Spectral zeta function of the discrete torus with the given sides.

    Eigenvalues are sums over axes of 4 sin^2(pi k_j / m_j), the zero mode
    excluded.  s = 0 returns the count of nonzero modes exactly.
    """
    sides = tuple(_check_order(m) for m in sides)
    if s == 0:
        count = 1.0
        for m in sides:
            count *= m
        return count - 1.0 if _is_real_number(s) else complex(count - 1.0, 0.0)
    if len(sides) == 1:
        return zeta_cycle(sides[0], s)
    real_s = _is_real_number(s) or complex(s).imag == 0.0
    sigma = float(s if _is_real_number(s) else complex(s).real)
    if len(sides) == 2 and real_s:
        v = 4.0 ** (-sigma) * backend.torus2_sum_real(sides[0], sides[1], sigma)
        return v if _is_real_number(s) else complex(v, 0.0)
    sc = complex(s)
    axes = [_axis_weights(m) for m in sides]
    # vectorize the axis with the largest compressed table
    vec = max(range(len(axes)), key=lambda i: axes[i][0].shape[0])
    uv, wv = axes[vec]
    rest = [axes[i] for i in range(len(axes)) if i != vec]
    total = 0.0j
    idx = [0] * len(rest)
    while True:
        base = 0.0
        wt = 1.0
        for j, (u, w) in enumerate(rest):
            base += u[idx[j]]
            wt *= w[idx[j]]
        lo = 1 if base == 0.0 else 0  # all-zero cell is the excluded zero mode
        row = base + uv[lo:]
        if sc.imag == 0.0:
            total += wt * np.sum(wv[lo:] * row ** (-sc.real))
        else:
            total += wt * np.sum(wv[lo:] * np.exp((-sc) * np.log(row)))
        # odometer over the non vectorized axes
        j = 0
        while j < len(rest):
            idx[j] += 1
            if idx[j] < rest[j][0].shape[0]:
                break
            idx[j] = 0
            j += 1
        else:
            break
    val = cmath.exp(-sc * math.log(4.0)) * total
    if _is_real_number(s):
        return val.real
    return val


def _near_real_point(s, x, radius=1e-12):
    sc = complex(s)
    return abs(sc.imag) <= radius and abs(sc.real - x) <= radius


def zeta_Z(s):
    """Spectral zeta function of the integer line.

    Poles at s = 1/2, 3/2, 5/2, ... (pole error inside a 1e-12 disc); exact
    0.0 at the positive integers.
    """
    sc = complex(s)
    if abs(sc.imag) <= 1e-12:
        x = sc.real
        half_shift = x - 0.5
        if half_shift >= -1e-12 and abs(half_shift - round(half_shift)) <= 1e-12:
            raise PoleError("zeta_Z pole at positive half integer", location=x)
        if x >= 0.5 and abs(x - round(x)) <= 1e-12:
            return 0.0 if _is_real_number(s) else 0.0j
        if -500.0 <= x <= 0.25 and abs(x - round(x)) <= 1e-12:
            # central binomial coefficient, exact at the nonpositive integers
            # (fits in binary64 up to -500; past that fall through to exp)
            m = int(round(-x))
            v = complex(float(math.comb(2 * m, m)), 0.0)
            return v.real if _is_real_number(s) else v
    v = cmath.exp(-sc * math.log(4.0) + log_gamma(0.5 - sc) - log_gamma(1.0 - sc)) / _SQRT_PI
    if _is_real_number(s):
        return v.real
    return v


def xi_Z(s):
    """Completed form 2^s cos(pi s/2) zeta_Z(s/2), entire and fixed by s -> 1-s.

    The cosine zero cancels the zeta_Z pole at odd positive integers; close
    to those points the value is taken as the mean of two offset samples.
    """
    sc = complex(s)
    if abs(sc.imag) < 1e-6:
        x = sc.real
        if x >= 0.5:
            near = round((x - 1.0) / 2.0) * 2.0 + 1.0
            if near >= 1.0 and abs(x - near) < 1e-6:
                left = xi_Z(complex(near - 1e-3, sc.imag))
                right = xi_Z(complex(near + 1e-3, sc.imag))
                v = 0.5 * (left + right)
                return v.real if _is_real_number(s) else v
    cosine = cmath.cos(0.5 * math.pi * sc)
    v = cmath.exp(sc * math.log(2.0)) * cosine * zeta_Z(sc / 2.0)
    if _is_real_number(s):
        return v.real
    return v


def zeta_Z_deriv(s):
    """Derivative of zeta_Z: zeta_Z(s) (-2 log 2 - psi(1/2-s) + psi(1-s)).

    At the positive integers the digamma pole meets the zeta_Z zero; the
    limit there is n! (n-1)! / (2n)!.
    """
    sc = complex(s)
    if abs(sc.imag) <= 1e-12:
        x = sc.real
        if x >= 0.5 and abs(x - round(x)) <= 1e-12:
            m = int(round(x))
            v = math.factorial(m) * math.factorial(m - 1) / math.factorial(2 * m)
            return v if _is_real_number(s) else complex(v, 0.0)
    z = zeta_Z(s)
    factor = -2.0 * math.log(2.0) - digamma(0.5 - sc) + digamma(1.0 - sc)
    v = complex(z) * factor
    if _is_real_number(s):
        return v.real
    return v


def _binom_exact(top_doubled, r):
    """Binomial with integer or half-integer top, exact; top passed doubled."""
    num = Fraction(1)
    for i in range(r):
        num *= Fraction(top_doubled - 2 * i, 2)
    return num / math.factorial(r)


def inverse_even_sum_closed(n, a):
    """Closed double-binomial form of sum_{k=1}^{n-1} 1/sin^(2a)(pi k/n).

    The alternating binomial sums cancel far past binary64, so the whole
    expression is evaluated in exact rational arithmetic (every ingredient
    is an integer or half-integer binomial) and converted at the end.
    Raises OverflowError when the result exceeds the float range.
    """
    n = _check_order(n)
    if a != int(a) or not (1 <= a <= 20):
        raise ParameterDomainError("exponent half a must be an integer in [1, 20]")
    a = int(a)
    total = Fraction(0)
    sign_4a = Fraction(-4) ** a
    for m in range(0, 2 * a + 1):
        outer = sign_4a / Fraction(n) ** m * math.comb(2 * a + 1, m + 1)
        inner = Fraction(0)
        for k in range(0, m + 2):
            inner += (Fraction((-1) ** k * math.comb(m + 1, k)
                               * (m + 1 - 2 * k), m + 1)
                      * _binom_exact(2 * (a + k * n) + m - 1, 2 * a + m))
        total += outer * inner
    val = -total / 2
    if val.denominator == 0 or abs(val) > Fraction(2) ** 1024:
        raise OverflowError("closed-form value exceeds the representable range")
    out = float(val)
    if not math.isfinite(out):
        raise OverflowError("closed-form value exceeds the representable range")
    return out


def sine_sum_at_one(n):
    """sum_{k=1}^{n-1} 1/sin(pi k/n), the case the expansion machinery skips."""
    n = _check_order(n)
    return backend.sps_real(n, 1.0)


def waldvogel_model(n, euler_sign=1):
    """Leading model (2n/pi)(log(2n/pi) + euler_sign * gamma) for the s = 1 sum.

    Both sign conventions for Euler's constant circulate; the default +1 is
    the one the residuals stay bounded under.  Pass euler_sign=-1 for the
    other reading.
    """
    n = _check_order(n)
    if euler_sign not in (1, -1):
        raise ParameterDomainError("euler_sign must be +1 or -1")
    x = 2.0 * n / math.pi
    return x * (math.log(x) + euler_sign * _EULER_GAMMA)
