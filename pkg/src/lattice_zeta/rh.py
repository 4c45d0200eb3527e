"""Asymptotics and functional-equation laboratory.

Everything here probes limit behavior of the finite-cycle and discrete-torus
zeta functions: the completed h_n sequence and its ratio experiment, the
general-profile variant h_n[f], the multiple-zero detector, the approximate
functional equation of completed cycle zetas, the two-term torus residual
checker, a monotonicity scan, and the elementary negativity bound.

The open-strip precondition 0 < Re s < 1 is enforced strictly wherever the
underlying expansions are only asserted there, even though several formulas
extend further.
"""

import cmath
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import backend
from .errors import CancellationWarning, ParameterDomainError
from .graphs import sine_power_sum, zeta_cycle, zeta_discrete_torus
from .lattices import DiagonalLattice
from .quadrature import tanh_sinh
from .special import (completed_xi, digamma, log_gamma, riemann_zeta)
from .torus import zeta_real_torus
from .zd import zeta_Zd

__all__ = [
    "FunctionSpec", "SIN_PROFILE", "QUARTIC_PROFILE", "profile_by_name",
    "ExpansionReport", "fitted_decay_order",
    "h_n", "alpha", "h_model", "h_ratio_sequence", "h_n_general",
    "c_factor", "multiple_zero_S", "xi_cycle", "approx_fe_diff",
    "approx_fe_report", "power_sum_three_term", "theorem1_check",
    "lemma_scan", "LemmaScanReport", "negativity_check", "NegativityReport",
    "wintner_probe", "WintnerReport",
]

_STRIP_MSG = "this quantity is only asserted in the open strip 0 < Re s < 1"
_N_CAP = 100000


def _require_strip(sc):
    if not (0.0 < sc.real < 1.0):
        raise ParameterDomainError(_STRIP_MSG)


def _check_n(n):
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise ParameterDomainError("need an integer n >= 2")
    if n > _N_CAP:
        raise ParameterDomainError("n capped at 1e5: beyond it the linear-term"
                                   " cancellation leaves too few digits")


@dataclass(frozen=True)
class FunctionSpec:
    """Symmetric profile on (0,1), positive inside, simple zero at both ends.

    d1_at_0 is the slope at 0 and d3_at_0 the third derivative there; the
    second derivative must vanish for the n^-2 model term to apply.
    ``evaluate`` must accept numpy arrays.
    """

    evaluate: object
    d1_at_0: float
    d3_at_0: float
    label: str

    def validate(self, samples=50):
        """Check the symmetry and slope invariants numerically."""
        x = np.linspace(0.01, 0.99, samples)
        f = self.evaluate
        if np.max(np.abs(f(x) - f(1.0 - x))) > 1e-12:
            raise ParameterDomainError(f"profile {self.label} is not symmetric")
        for x0 in (1e-4, 1e-5):
            if abs(float(f(np.array([x0]))[0]) / x0 / self.d1_at_0 - 1.0) > 1e-3:
                raise ParameterDomainError(f"profile {self.label}: slope at 0 "
                                           "does not match d1_at_0")
        return True


SIN_PROFILE = FunctionSpec(lambda x: np.sin(np.pi * x),
                           math.pi, -math.pi ** 3, "sin")
QUARTIC_PROFILE = FunctionSpec(lambda x: x - 2.0 * x ** 3 + x ** 4,
                               1.0, -12.0, "quartic")

_PROFILES = {"sin": SIN_PROFILE, "quartic": QUARTIC_PROFILE}


def profile_by_name(name):
    try:
        return _PROFILES[name]
    except KeyError:
        raise ParameterDomainError(
            f"unknown profile {name!r}; choose from {sorted(_PROFILES)}") from None


def fitted_decay_order(n_list, magnitudes, points=3):
    """Least-squares slope of log|value| against log n, largest ``points`` n.

    Entries that are exactly zero are dropped; if fewer than two points
    remain the order is reported as -inf (decay faster than measurable).
    """
    pairs = sorted(zip(n_list, magnitudes))[-points:]
    pts = [(math.log(n), math.log(abs(m))) for n, m in pairs if abs(m) > 0.0]
    if len(pts) < 2:
        return float("-inf")
    xs = np.array([p[0] for p in pts])
    ys = np.array([p[1] for p in pts])
    xs -= xs.mean()
    return float(np.dot(xs, ys - ys.mean()) / np.dot(xs, xs))


@dataclass(frozen=True)
class ExpansionReport:
    """A sequence of values, per-n named model terms, and the residuals.

    residuals[i] = values[i] - sum(model_terms[i].values()); fitted_order is
    the log-log slope of |residual| over the largest three n.
    """

    n_list: tuple
    values: tuple
    model_terms: tuple
    residuals: tuple = field(default=())
    fitted_order: float = field(default=float("nan"))


def _make_report(n_list, values, model_terms):
    residuals = tuple(v - sum(terms.values()) for v, terms in zip(values, model_terms))
    order = fitted_decay_order(n_list, [abs(r) for r in residuals])
    return ExpansionReport(tuple(n_list), tuple(values), tuple(model_terms),
                           residuals, order)


def _mean_inverse_sine_power(sc):
    """(1/pi) int_0^pi sin(x)^-s dx, the linear coefficient of the sum."""
    return cmath.exp(log_gamma(0.5 - 0.5 * sc)
                     - log_gamma(1.0 - 0.5 * sc)) / math.sqrt(math.pi)


def _warn_if_cancelling(sc, n):
    # subtracting two O(n) quantities leaves O(n^Re s): the difference keeps
    # 16 - (1 - Re s) log10 n digits
    est = 10.0 ** (-16.0 + (1.0 - sc.real) * math.log10(n))
    if est > 1e-6:
        warnings.warn("h_n cancellation exceeds 1e-6 at this (s, n)",
                      CancellationWarning, stacklevel=3)


def h_n(s, n):
    """pi^(s/2) Gamma(s/2) n^-s (sine_power_sum(n, s) - n * linear coeff)."""
    sc = complex(s)
    _require_strip(sc)
    _check_n(n)
    _warn_if_cancelling(sc, n)
    diff = sine_power_sum(n, sc) - n * _mean_inverse_sine_power(sc)
    pref = cmath.exp(0.5 * sc * math.log(math.pi) + log_gamma(0.5 * sc)
                     - sc * math.log(n))
    return pref * diff


def alpha(s):
    """(s/3) pi^(2-s/2) Gamma(s/2) zeta(s-2), the n^-2 coefficient of h_n."""
    sc = complex(s)
    _require_strip(sc)
    return (sc / 3.0) * cmath.exp((2.0 - 0.5 * sc) * math.log(math.pi)
                                  + log_gamma(0.5 * sc)) * riemann_zeta(sc - 2.0)


def h_model(s, n, xi_value=None):
    """Two-term model 2 xi(s) + alpha(s) n^-2; xi_value overrides the xi factor.

    Passing xi_value=0 imposes a zeta zero on the model, which turns the
    limiting h-ratio into |alpha(1-s)/alpha(s)| exactly.
    """
    sc = complex(s)
    _require_strip(sc)
    xi = completed_xi(sc) if xi_value is None else complex(xi_value)
    return 2.0 * xi + alpha(sc) / (n * n)


def h_ratio_sequence(s, n_list):
    """|h_n(1-s)/h_n(s)| per n; degenerate denominators yield inf + warning."""
    sc = complex(s)
    _require_strip(sc)
    out = []
    for n in n_list:
        den = h_n(sc, n)
        num = h_n(1.0 - sc, n)
        if abs(den) < 1e-14:
            warnings.warn("h_n(s) below 1e-14; ratio degenerate",
                          CancellationWarning, stacklevel=2)
            out.append(float("inf"))
        else:
            out.append(abs(num) / abs(den))
    return out


def h_n_general(f, s, n):
    """Profile variant: f'(0)^s pi^(-s/2) Gamma(s/2) n^-s (sum - n integral).

    The integral of f^-s over (0,1) uses symmetry, integrating over (0, 1/2)
    with the x -> 0 endpoint handled through the quadrature's distance
    argument (integrable since Re s < 1).
    """
    sc = complex(s)
    _require_strip(sc)
    _check_n(n)
    _warn_if_cancelling(sc, n)
    x = np.arange(1, n) / float(n)
    fx = np.asarray(f.evaluate(x), dtype=float)
    total = complex(np.sum(np.exp((-sc) * np.log(fx))))

    def integrand(x0, dist):
        v = float(f.evaluate(np.array([dist[0]]))[0])
        return cmath.exp(-sc * math.log(v))

    integral = 2.0 * tanh_sinh(integrand, 0.0, 0.5, tol=1e-14).value
    pref = cmath.exp(sc * math.log(f.d1_at_0) - 0.5 * sc * math.log(math.pi)
                     + log_gamma(0.5 * sc) - sc * math.log(n))
    return pref * (total - n * integral)


def c_factor(s):
    """Derivative of the negated linear coefficient of sine_power_sum.

    (1/(2 sqrt pi)) (Gamma(1/2-s/2)/Gamma(1-s/2)) (psi(1/2-s/2) - psi(1-s/2)).
    """
    sc = complex(s)
    _require_strip(sc)
    g = _mean_inverse_sine_power(sc)
    return 0.5 * g * (digamma(0.5 - 0.5 * sc) - digamma(1.0 - 0.5 * sc))


def multiple_zero_S(s, n):
    """c(s) n - sum_k log(sin(pi k/n)) / sin(pi k/n)^s.

    Stays bounded (tends to 0) only above a multiple zeta zero; at a simple
    zero it grows like n^Re(s) through the zeta-derivative term.
    """
    sc = complex(s)
    _require_strip(sc)
    _check_n(n)
    return c_factor(sc) * n - backend.log_sps_complex(n, sc)


def xi_cycle(n, s):
    """Completed cycle zeta 2^s cos(pi s/2) zeta_cycle(n, s/2)."""
    sc = complex(s)
    _require_strip(sc)
    _check_n(n)
    return (cmath.exp(sc * math.log(2.0)) * cmath.cos(0.5 * math.pi * sc)
            * zeta_cycle(n, 0.5 * sc))


def _completed_coeff(sc):
    # X(s) = 2 pi^-s cos(pi s/2) zeta(s)
    return (2.0 * cmath.exp(-sc * math.log(math.pi))
            * cmath.cos(0.5 * math.pi * sc) * riemann_zeta(sc))


def approx_fe_diff(s, n):
    """xi_cycle(n, s) - xi_cycle(n, 1-s), the finite functional-equation gap."""
    sc = complex(s)
    return xi_cycle(n, sc) - xi_cycle(n, 1.0 - sc)


def approx_fe_report(s, n_list):
    """The gap against its four-term model, per n."""
    sc = complex(s)
    _require_strip(sc)
    xf = _completed_coeff(sc)
    xr = _completed_coeff(1.0 - sc)
    xfc = _completed_coeff(sc - 2.0)
    xrc = _completed_coeff(-1.0 - sc)
    values = []
    terms = []
    for n in n_list:
        values.append(approx_fe_diff(sc, n))
        ln = math.log(n)
        terms.append({
            "forward": xf * cmath.exp(sc * ln),
            "reflected": -xr * cmath.exp((1.0 - sc) * ln),
            "forward_correction": -(sc / 6.0) * xfc * cmath.exp((sc - 2.0) * ln),
            "reflected_correction": ((1.0 - sc) / 6.0) * xrc
                                    * cmath.exp((-1.0 - sc) * ln),
        })
    return _make_report(n_list, values, terms)


def power_sum_three_term(s, n_list):
    """sine_power_sum against its linear + n^s + n^(s-2) model."""
    sc = complex(s)
    _require_strip(sc)
    lin = _mean_inverse_sine_power(sc)
    zmain = 2.0 * cmath.exp(-sc * math.log(math.pi)) * riemann_zeta(sc)
    zcurv = (sc / 3.0) * cmath.exp((2.0 - sc) * math.log(math.pi)) \
        * riemann_zeta(sc - 2.0)
    values = []
    terms = []
    for n in n_list:
        _check_n(n)
        values.append(sine_power_sum(n, sc))
        ln = math.log(n)
        terms.append({
            "linear": lin * n,
            "zeta": zmain * cmath.exp(sc * ln),
            "curvature": zcurv * cmath.exp((sc - 2.0) * ln),
        })
    return _make_report(n_list, values, terms)


def theorem1_check(lattice, s, n_list):
    """Residual of the discrete torus against its two-term limit model.

    value(n) = zeta of the discrete torus with sides a_i n; model is
    zeta_Zd(d, s) det A n^d plus zeta of the continuous torus times n^2s.
    Valid for Re s < d/2 + 1.
    """
    if not isinstance(lattice, DiagonalLattice):
        lattice = DiagonalLattice(tuple(lattice))
    sc = complex(s)
    d = lattice.d
    if not sc.real < 0.5 * d + 1.0:
        raise ParameterDomainError("two-term model needs Re s < d/2 + 1")
    det = lattice.det()
    z_lattice = zeta_Zd(d, sc if sc.imag != 0.0 else sc.real)
    z_torus = zeta_real_torus(lattice, sc if sc.imag != 0.0 else sc.real)
    values = []
    terms = []
    for n in n_list:
        sides = lattice.sides(n)
        values.append(zeta_discrete_torus(sides, sc if sc.imag != 0.0 else sc.real))
        npow = n ** d
        terms.append({
            "lattice": z_lattice * det * npow,
            "torus": z_torus * cmath.exp(2.0 * sc * math.log(n))
            if sc.imag != 0.0 else z_torus * n ** (2.0 * sc.real),
        })
    return _make_report(n_list, values, terms)


@dataclass(frozen=True)
class LemmaScanReport:
    """Tabulated |zeta(sigma+it+2)/zeta(sigma+it-2)| against 4 pi^2/|s^2-1|."""

    t: float
    sigma_grid: tuple
    lhs: tuple
    rhs: tuple
    lhs_increasing: bool
    rhs_decreasing: bool
    lhs_violations: tuple
    crossings: tuple
    crossing_sigma: float


def _lemma_lhs(sigma, t):
    s = complex(sigma, t)
    return abs(riemann_zeta(s + 2.0) / riemann_zeta(s - 2.0))


def _lemma_rhs(sigma, t):
    s = complex(sigma, t)
    return 4.0 * math.pi ** 2 / abs(s * s - 1.0)


def lemma_scan(t, sigma_grid):
    """Scan the two comparison functions and bisect their crossing.

    Monotonicity violations are recorded, not raised: they genuinely occur
    for small |t|.
    """
    t = float(t)
    grid = [float(x) for x in sigma_grid]
    if not grid or not all(0.0 < x < 1.0 for x in grid):
        raise ParameterDomainError("sigma grid must lie inside (0, 1)")
    grid = sorted(grid)
    lhs = [_lemma_lhs(x, t) for x in grid]
    rhs = [_lemma_rhs(x, t) for x in grid]
    viol = tuple(i for i in range(len(grid) - 1) if lhs[i + 1] <= lhs[i])
    r_dec = all(rhs[i + 1] < rhs[i] for i in range(len(grid) - 1))
    crossings = []
    for i in range(len(grid) - 1):
        fa = lhs[i] - rhs[i]
        fb = lhs[i + 1] - rhs[i + 1]
        if fa == 0.0:
            crossings.append(grid[i])
            continue
        if fa * fb < 0.0:
            a, b = grid[i], grid[i + 1]
            for _ in range(80):
                m = 0.5 * (a + b)
                fm = _lemma_lhs(m, t) - _lemma_rhs(m, t)
                if fm == 0.0:
                    break
                if (fm > 0.0) == (fa > 0.0):
                    a = m
                else:
                    b = m
                if b - a < 1e-13:
                    break
            crossings.append(0.5 * (a + b))
    return LemmaScanReport(t, tuple(grid), tuple(lhs), tuple(rhs),
                           len(viol) == 0, r_dec, viol, tuple(crossings),
                           crossings[0] if crossings else float("nan"))


@dataclass(frozen=True)
class NegativityReport:
    sigma: float
    zeta_value: float
    bound: float
    holds: bool


def negativity_check(sigma):
    """zeta(sigma) <= -sigma/(1-sigma) on the open interval (0,1)."""
    sigma = float(sigma)
    if not (0.0 < sigma < 1.0):
        raise ParameterDomainError("need 0 < sigma < 1")
    z = float(riemann_zeta(sigma).real)
    bound = -sigma / (1.0 - sigma)
    return NegativityReport(sigma, z, bound, z <= bound)


@dataclass(frozen=True)
class WintnerReport:
    """The normalized power-sum sequence at s = 1 + it and its oscillation."""

    t: float
    n_list: tuple
    sequence: tuple
    oscillation: tuple
    amplitudes: tuple
    amplitude_target: float


def wintner_probe(t, n_list):
    """(1/n) sine_power_sum(n, 1+it): bounded but non-convergent for t != 0.

    The linear drift is the mean-value coefficient; what remains oscillates
    like n^it with amplitude (2/pi)|zeta(1+it)|.
    """
    t = float(t)
    if t == 0.0:
        raise ParameterDomainError("t = 0 is the divergent harmonic case")
    sc = complex(1.0, t)
    drift = _mean_inverse_sine_power(sc)
    seq = []
    osc = []
    for n in n_list:
        _check_n(n)
        w = sine_power_sum(n, sc) / n
        seq.append(w)
        osc.append(w - drift)
    target = 2.0 / math.pi * abs(riemann_zeta(sc))
    return WintnerReport(t, tuple(n_list), tuple(seq), tuple(osc),
                         tuple(abs(v) for v in osc), target)
