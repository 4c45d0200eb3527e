"""Theta function and spectral (Epstein) zeta function of a continuous torus.

Eigenvalues of the flat torus obtained from diag(a_1..a_d) are
(2 pi)^2 sum_j (k_j/a_j)^2 over integer vectors k.  The zeta function is
continued through the standard four-term theta split at t = 1; the only pole
is at s = d/2.  The integrand on (0, 1] evaluates the difference
theta - det A (4 pi t)^(-d/2) through the modular (Poisson) dual sum for
small t, where direct subtraction would cancel catastrophically.
"""

import cmath
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterDomainError, PoleError
from .lattices import DiagonalLattice
from .quadrature import EvalResult, tanh_sinh
from .special import reciprocal_gamma

__all__ = ["TorusEigenvalueEnumerator", "torus_theta", "zeta_real_torus"]

_FOUR_PI_SQ = 4.0 * math.pi * math.pi


@dataclass(frozen=True)
class TorusEigenvalueEnumerator:
    """Eigenvalues lambda_k = (2 pi)^2 sum (k_j/a_j)^2 with lambda <= R^2.

    Bounding-box enumeration; each integer vector appears once.
    """

    lattice: DiagonalLattice
    radius: float

    def __post_init__(self):
        if self.radius <= 0.0:
            raise ParameterDomainError("cutoff radius must be positive")

    def eigenvalues(self):
        """Sorted array of eigenvalues within the cutoff, zero mode included."""
        a = self.lattice.a
        r2 = self.radius ** 2
        box = [int(math.ceil(self.radius * ai)) for ai in a]
        out = []
        for k in itertools.product(*[range(-b, b + 1) for b in box]):
            lam = _FOUR_PI_SQ * sum((ki / ai) ** 2 for ki, ai in zip(k, a))
            if lam <= r2:
                out.append(lam)
        return np.sort(np.array(out))


def _axis_theta(a, t):
    """sum_m exp(-4 pi^2 m^2 t / a^2), direct, truncated at 1e-18 relative."""
    total = 1.0
    m = 1
    coeff = _FOUR_PI_SQ * t / (a * a)
    while m < 100000:
        term = 2.0 * math.exp(-coeff * m * m)
        total += term
        if term < 1e-18 * total:
            return total, term
        m += 1
    raise ParameterDomainError("theta sum did not truncate; t too small")


def torus_theta(lattice, t):
    """Full heat trace including the zero mode, with a truncation estimate."""
    if t <= 0.0:
        raise ParameterDomainError("time must be positive")
    total = 1.0
    err = 0.0
    for a in lattice.a:
        v, tail = _axis_theta(a, t)
        err = err * v + abs(total) * tail
        total *= v
    return EvalResult(total, err)


def _theta_minus_leading(lattice, t):
    """theta(t) - det A (4 pi t)^(-d/2), stable for all t in (0, 1]."""
    d = lattice.d
    if t > 0.5:
        lead = lattice.det() * (4.0 * math.pi * t) ** (-0.5 * d)
        return float(torus_theta(lattice, t)) - lead
    # Poisson dual: theta = lead * prod_j (1 + 2 sum_k exp(-k^2 a_j^2 / 4t))
    log_prod = 0.0
    for a in lattice.a:
        delta = 0.0
        k = 1
        coeff = a * a / (4.0 * t)
        while True:
            term = 2.0 * math.exp(-coeff * k * k)
            delta += term
            if term < 1e-20 * (1.0 + delta):
                break
            k += 1
        log_prod += math.log1p(delta)
    if log_prod == 0.0:
        return 0.0
    lead = lattice.det() * (4.0 * math.pi * t) ** (-0.5 * d)
    return lead * math.expm1(log_prod)


def zeta_real_torus(lattice, s):
    """Meromorphic continuation of the torus zeta function.

    Four-term split: -1/(s Gamma(s)) routed through 1/Gamma(s+1) so the
    special value at s = 0 is exactly -1; pole term det A (4 pi)^(-d/2)
    /((s - d/2) Gamma(s)); two adaptive quadratures.
    """
    if not isinstance(lattice, DiagonalLattice):
        lattice = DiagonalLattice(tuple(lattice))
    d = lattice.d
    sc = complex(s)
    real_in = isinstance(s, (int, float)) and not isinstance(s, bool)
    if abs(sc - 0.5 * d) < 1e-12:
        raise PoleError("torus zeta pole at s = d/2", location=0.5 * d)
    x = sc.real
    det = lattice.det()
    # zero-mode term -1/(s Gamma(s)) = -1/Gamma(s+1)
    total = -reciprocal_gamma(sc + 1.0)
    # pole term and the two integrals carry a common 1/Gamma(s)
    bracket = det * (4.0 * math.pi) ** (-0.5 * d) / (sc - 0.5 * d)

    def low(t, dist):
        t = dist[0]
        v = _theta_minus_leading(lattice, t)
        if v == 0.0:
            return 0.0j
        return v * cmath.exp((sc - 1.0) * math.log(t))

    bracket += tanh_sinh(low, 0.0, 1.0, tol=1e-13).value
    lam_min = _FOUR_PI_SQ / max(ai * ai for ai in lattice.a)
    t_top = (46.0 + 4.0 * max(0.0, x)) / lam_min
    t_top = max(t_top, 2.0)

    def high(v, dist):
        t = math.exp(v)
        w = float(torus_theta(lattice, t)) - 1.0
        if w == 0.0:
            return 0.0j
        return w * cmath.exp(sc * v)

    bracket += tanh_sinh(high, 0.0, math.log(t_top), tol=1e-13).value
    total += reciprocal_gamma(sc) * bracket
    if real_in:
        return total.real
    return total
