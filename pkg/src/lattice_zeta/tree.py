"""Spectral zeta function of the (q+1)-regular tree, two independent routes.

Route one integrates (q+1-lambda)^(-s) against the vertex spectral measure
(semicircle-type density supported on |lambda| <= 2 sqrt(q)).  Route two is a
closed form in terms of the two-variable Appell F1 function, evaluated here
through its Euler integral.  The two routes share no code and cross-validate
each other.
"""

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import MathDomainError, ParameterDomainError, QuadratureError
from .quadrature import EvalResult, gauss_jacobi_rule

__all__ = ["TreeSpec", "tree_spectral_density", "zeta_tree_quadrature",
           "appell_f1", "zeta_tree_closed"]


@dataclass(frozen=True)
class TreeSpec:
    """Branching parameter q > 1; vertex degree is q + 1.

    Real q is accepted, not only integers: everything downstream is
    analytic in q.
    """

    q: float

    def __post_init__(self):
        q = float(self.q)
        if not (q > 1.0 and math.isfinite(q)):
            raise ParameterDomainError("branching parameter must satisfy q > 1")
        object.__setattr__(self, "q", q)

    @property
    def u(self):
        rq = math.sqrt(self.q)
        return -4.0 * rq / (rq - 1.0) ** 2

    @property
    def v(self):
        rq = math.sqrt(self.q)
        return 4.0 * rq / (rq + 1.0) ** 2


def tree_spectral_density(q, lam):
    """Vertex spectral density of the (q+1)-regular tree Laplacian spectrum.

    Supported on |lambda| <= 2 sqrt(q); vanishes like a square root at the
    endpoints.  The denominator (q+1)^2 - lambda^2 >= (q-1)^2 stays away
    from zero on the whole support.
    """
    spec = TreeSpec(q)
    q = spec.q
    edge = 4.0 * q - lam * lam
    if edge < 0.0:
        # the rounded endpoint 2 sqrt(q) itself may square to just above 4q
        if edge >= -4.0 * q * 1e-14:
            return 0.0
        raise MathDomainError("lambda outside the spectrum [-2 sqrt q, 2 sqrt q]")
    return (q + 1.0) / (2.0 * math.pi) * math.sqrt(edge) / ((q + 1.0) ** 2 - lam * lam)


@lru_cache(maxsize=64)
def _jacobi_rule_cached(m, alpha, beta):
    return gauss_jacobi_rule(m, alpha, beta)


def zeta_tree_quadrature(q, s):
    """Integral route: (q+1-lambda)^(-s) against the spectral density.

    Substituting lambda = 2 sqrt(q) x turns the measure into a Chebyshev-U
    weight sqrt(1-x^2) times a rational factor; Gauss-Jacobi nodes are
    doubled from 200 until two passes agree to 1e-12.
    """
    spec = TreeSpec(q)
    q = spec.q
    sc = complex(s)
    real_in = isinstance(s, (int, float)) and not isinstance(s, bool)
    rq = 2.0 * math.sqrt(q)
    front = 2.0 * q * (q + 1.0) / math.pi

    def pass_value(m):
        x, w = _jacobi_rule_cached(m, 0.5, 0.5)
        base = (q + 1.0) - rq * x
        rat = front / ((q + 1.0) ** 2 - rq * rq * x * x)
        if sc.imag == 0.0 and float(sc.real) == sc.real:
            vals = base ** (-sc.real)
        else:
            vals = np.exp((-sc) * np.log(base))
        return np.sum(w * rat * vals)

    m = 200
    prev = pass_value(m)
    while m <= 12800:
        m *= 2
        cur = pass_value(m)
        err = abs(cur - prev)
        if err <= 1e-12 * (1.0 + abs(cur)):
            out = complex(cur)
            if real_in:
                return EvalResult(out.real, float(err))
            return EvalResult(out, float(err))
        prev = cur
    raise QuadratureError("node doubling did not converge",
                          best=complex(prev), err_estimate=float(err))


def appell_f1(a, b1, b2, c, u, v):
    """Two-variable hypergeometric F1 through its Euler integral.

    (Gamma(c)/(Gamma(a)Gamma(c-a))) int_0^1 t^(a-1) (1-t)^(c-a-1)
    (1-ut)^(-b1) (1-vt)^(-b2) dt, with the endpoint exponents absorbed
    into a Gauss-Jacobi weight.  Requires Re c > Re a > 0 and u, v < 1,
    so both linear factors stay positive on (0,1): no branch crossings.
    """
    ac = complex(a)
    cc = complex(c)
    b1c = complex(b1)
    b2c = complex(b2)
    u = float(u)
    v = float(v)
    if not (cc.real > ac.real > 0.0):
        raise ParameterDomainError("need Re c > Re a > 0")
    if u >= 1.0 or v >= 1.0:
        raise ParameterDomainError("need u < 1 and v < 1")
    alpha = cc.real - ac.real - 1.0
    beta = ac.real - 1.0
    # purely imaginary leftovers when a or c is not real
    res_l = complex(ac - 1.0 - beta)
    res_r = complex(cc - ac - 1.0 - alpha)
    lg = (math.lgamma(cc.real) - math.lgamma(ac.real)
          - math.lgamma(cc.real - ac.real)) if ac.imag == 0.0 and cc.imag == 0.0 else None
    if lg is None:
        from .special import log_gamma
        front = cmath.exp(log_gamma(cc) - log_gamma(ac) - log_gamma(cc - ac))
    else:
        front = math.exp(lg)
    # the Euler integral runs over t in (0,1); map to x in (-1,1)
    scale = 0.5 ** (alpha + beta + 1.0)

    def pass_value(m):
        x, w = _jacobi_rule_cached(m, alpha, beta)
        t = 0.5 * (x + 1.0)
        one_minus_t = 0.5 * (1.0 - x)
        vals = np.exp((-b1c) * np.log1p(-u * t) + (-b2c) * np.log1p(-v * t))
        if res_l != 0.0:
            vals = vals * np.exp(res_l * np.log(t))
        if res_r != 0.0:
            vals = vals * np.exp(res_r * np.log(one_minus_t))
        return scale * np.sum(w * vals)

    m = 200
    prev = pass_value(m)
    while m <= 12800:
        m *= 2
        cur = pass_value(m)
        if abs(cur - prev) <= 1e-13 * (1.0 + abs(cur)):
            return front * complex(cur)
        prev = cur
    raise QuadratureError("node doubling did not converge",
                          best=front * complex(prev),
                          err_estimate=float(abs(cur - prev)))


def zeta_tree_closed(q, s):
    """Closed route: rational prefactor times F1(3/2; s+1, 1; 3; u, v)."""
    spec = TreeSpec(q)
    q = spec.q
    sc = complex(s)
    real_in = isinstance(s, (int, float)) and not isinstance(s, bool)
    rq = math.sqrt(q)
    pre = q * (q + 1.0) / ((q - 1.0) ** 2) * cmath.exp(-2.0 * sc * math.log(rq - 1.0))
    val = pre * appell_f1(1.5, sc + 1.0, 1.0, 3.0, spec.u, spec.v)
    if real_in:
        return val.real
    return val
