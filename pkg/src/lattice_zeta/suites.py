"""Named acceptance suites: quantitative pass/fail checks with runtime caps.

Each criterion function is self-timing and returns a CriterionResult; the
CLI ``check`` subcommand and the test suite both call these, so there is a
single source of truth for what "passing" means.
"""

import cmath
import math
import random
import time
from dataclasses import dataclass

import numpy as np

from .graphs import (inverse_even_sum_closed, sine_power_sum, xi_Z, zeta_Z)
from .lattices import DiagonalLattice
from .rh import (QUARTIC_PROFILE, SIN_PROFILE, alpha, fitted_decay_order,
                 h_n, h_n_general, h_ratio_sequence, lemma_scan,
                 negativity_check, power_sum_three_term, theorem1_check)
from .special import completed_xi, riemann_zeta, riemann_zeta_deriv
from .torus import zeta_real_torus
from .tree import zeta_tree_closed, zeta_tree_quadrature
from .errors import PoleError
from .zd import zeta_Zd

__all__ = ["CriterionResult", "SUITES", "run_criterion", "run_suite"]


@dataclass(frozen=True)
class CriterionResult:
    cid: int
    title: str
    passed: bool
    runtime: float
    limit: float
    detail: str

    @property
    def ok(self):
        return self.passed and self.runtime < self.limit


def _timed(cid, title, limit, body):
    t0 = time.perf_counter()
    passed, detail = body()
    dt = time.perf_counter() - t0
    return CriterionResult(cid, title, passed, dt, limit, detail)


def criterion_1():
    def body():
        worst = 0.0
        for n in range(11):
            ref = math.comb(2 * n, n)
            worst = max(worst, abs(zeta_Z(float(-n)) / ref - 1.0))
        for n in range(1, 11):
            ref = 4.0 ** (2 * n) / (2.0 * math.pi * n * math.comb(2 * n, n))
            worst = max(worst, abs(zeta_Z(-n + 0.5) / ref - 1.0))
        return worst <= 1e-11, f"worst rel {worst:.2e} (<= 1e-11)"
    return _timed(1, "special values at negative integers and half-integers",
                  1.0, body)


def criterion_2():
    def body():
        rng = random.Random(97)
        worst = 0.0
        for _ in range(200):
            s = complex(rng.uniform(-3.0, 3.0), rng.uniform(-30.0, 30.0))
            a = xi_Z(s)
            b = xi_Z(1.0 - s)
            worst = max(worst, abs(a - b) / (1.0 + abs(a)))
        return worst <= 1e-9, f"worst normalized gap {worst:.2e} (<= 1e-9)"
    return _timed(2, "functional equation of the completed path zeta", 1.0, body)


def criterion_3():
    def body():
        worst_a = 0.0
        for n in range(2, 10001):
            ref = (n * n - 1.0) / 3.0
            worst_a = max(worst_a, abs(float(sine_power_sum(n, 2.0).real) / ref - 1.0))
        if worst_a > 1e-10:
            return False, f"inverse-square identity worst rel {worst_a:.2e}"
        worst_b = 0.0
        for n in range(2, 65):
            for m in range(1, n):
                ref = n / 4.0 ** m * math.comb(2 * m, m)
                got = float(sine_power_sum(n, float(-2 * m)).real)
                worst_b = max(worst_b, abs(got / ref - 1.0))
        if worst_b > 1e-10:
            return False, f"even-power moment worst rel {worst_b:.2e}"
        worst_c = 0.0
        for a in range(1, 6):
            for n in range(2, 101):
                closed = inverse_even_sum_closed(n, a)
                direct = float(sine_power_sum(n, float(2 * a)).real)
                worst_c = max(worst_c, abs(closed / direct - 1.0))
        ok = worst_c <= 1e-8
        return ok, (f"worst rels: inverse-square {worst_a:.2e}, moments "
                    f"{worst_b:.2e}, closed-vs-direct {worst_c:.2e}")
    return _timed(3, "finite sine identities", 10.0, body)


def criterion_4():
    def body():
        one = DiagonalLattice((1.0,))
        worst = 0.0
        for re in (0.15, 0.35, 0.55, 0.75):
            for im in (0.5, 1.5, 2.5, 4.0, 6.0):
                s = complex(re, im)
                got = zeta_real_torus(one, s)
                ref = 2.0 * cmath.exp(-2.0 * s * math.log(2.0 * math.pi)) \
                    * riemann_zeta(2.0 * s)
                worst = max(worst, abs(got - ref) / abs(ref))
        if worst > 1e-8:
            return False, f"strip comparison worst rel {worst:.2e}"
        z1 = zeta_real_torus(one, 0.0)
        z2 = zeta_real_torus(DiagonalLattice((1.0, 2.0)), 0.0)
        dev = max(abs(z1 + 1.0), abs(z2 + 1.0))
        return dev <= 1e-8, (f"strip worst rel {worst:.2e}; "
                             f"value-at-0 dev {dev:.1e}")
    return _timed(4, "continuous torus against the even zeta closed form",
                  30.0, body)


def criterion_5():
    def body():
        pts = [0.3, -0.7, -2.3, 1.2, 2.7, complex(0.3, 2.0), complex(1.8, -1.5),
               complex(-1.1, 3.0), 3.9, -3.6]
        worst = 0.0
        for s in pts:
            got = zeta_Zd(1, s)
            ref = zeta_Z(s)
            worst = max(worst, abs(complex(got) - complex(ref)) / abs(complex(ref)))
        if worst > 1e-8:
            return False, f"d=1 comparison worst rel {worst:.2e}"
        dev0 = max(abs(zeta_Zd(d, 0.0) - 1.0) for d in (1, 2, 3, 4))
        if dev0 > 1e-8:
            return False, f"value at 0 deviates by {dev0:.1e}"
        worst_inv = 0.0
        for d in (1, 2, 3):
            pole = 0.5 * d
            try:
                zeta_Zd(d, pole)
                return False, f"no pole error raised at d/2 for d={d}"
            except PoleError:
                pass
            for delta in (1e-9, -1e-9, 1e-9j, -1e-9j):
                inv = 1.0 / abs(zeta_Zd(d, pole + delta))
                worst_inv = max(worst_inv, inv)
        ok = worst_inv < 1e-6
        return ok, (f"d=1 worst rel {worst:.2e}; |value(0)-1| {dev0:.1e}; "
                    f"worst |1/zeta| near poles {worst_inv:.1e}")
    return _timed(5, "integer-lattice continuation consistency", 60.0, body)


def criterion_6():
    def body():
        n_list = [64, 128, 256, 512, 1024, 2048, 4096]
        for a, s in (((1.0,), 0.4), ((1.0, 2.0), 0.7)):
            lat = DiagonalLattice(a)
            rep = theorem1_check(lat, s, n_list)
            norm = [abs(r) / n ** (2.0 * s) for r, n in zip(rep.residuals, n_list)]
            if not all(norm[i + 1] < norm[i] for i in range(len(norm) - 1)):
                return False, f"a={a}, s={s}: normalized residual not monotone {norm}"
            rep0 = theorem1_check(lat, 0.0, n_list)
            if any(r != 0.0 for r in rep0.residuals):
                return False, f"a={a}, s=0: residual not exactly zero {rep0.residuals}"
        return True, "normalized residuals strictly decreasing; s=0 exact"
    return _timed(6, "two-term torus expansion residuals", 120.0, body)


def criterion_7():
    def body():
        n_list = [1000, 2000, 4000, 10000]
        rows = []
        ok = True
        for s in (0.3, complex(0.5, 4.0), complex(0.7, 10.0)):
            rep = power_sum_three_term(s, n_list)
            order = fitted_decay_order(n_list, [abs(r) for r in rep.residuals],
                                       points=4)
            bound = complex(s).real - 2.0 + 0.1
            good = order <= bound
            ok = ok and good
            rows.append(f"s={s}: order {order:+.2f} vs bound {bound:+.2f} "
                        f"{'ok' if good else 'FAIL'}")
        return ok, "; ".join(rows)
    return _timed(7, "three-term power-sum model decay orders", 60.0, body)


def criterion_8():
    def body():
        pts = [complex(re, im) for re in (0.2, 0.35, 0.5, 0.65, 0.8)
               for im in (3.0, 7.0, 11.0, 17.0)]
        worst = 0.0
        for s in pts:
            if abs(riemann_zeta(s)) <= 0.1:
                return False, f"sample point {s} violates |zeta|>0.1"
            r = h_ratio_sequence(s, [4000])[0]
            worst = max(worst, abs(r - 1.0))
        if worst >= 5e-3:
            return False, f"ratio worst |r-1| {worst:.2e} (need < 5e-3)"
        r0 = h_ratio_sequence(complex(0.5, 14.134725), [4000])[0]
        if abs(r0 - 1.0) >= 2e-2:
            return False, f"first-zero ratio |r-1| {abs(r0 - 1.0):.2e} (need < 2e-2)"
        worst_m = 0.0
        for s in (complex(0.3, 3.0), complex(0.5, 4.0), complex(0.65, 7.0),
                  complex(0.2, 5.0), complex(0.8, 6.0)):
            lhs = 4000.0 ** 2 * (h_n(s, 4000) - 2.0 * completed_xi(s))
            worst_m = max(worst_m, abs(lhs / alpha(s) - 1.0))
        ok = worst_m < 0.01
        return ok, (f"ratio worst {worst:.2e}; first-zero {abs(r0 - 1):.2e}; "
                    f"alpha-model worst {worst_m:.2e}")
    return _timed(8, "h-ratio convergence and the n^-2 coefficient", 120.0, body)


def criterion_9():
    def body():
        worst = 0.0
        for q in (2.0, 3.0, 5.0, 9.0):
            for s in (0.0, 1.0, -1.0, 0.5, complex(0.5, 3.0), 2.0):
                quad = complex(zeta_tree_quadrature(q, s).value)
                closed = complex(zeta_tree_closed(q, s))
                worst = max(worst, abs(closed - quad) / (1.0 + abs(closed)))
        if worst > 1e-8:
            return False, f"route disagreement {worst:.2e}"
        worst_m = 0.0
        for q in (2.0, 3.0, 5.0, 9.0):
            worst_m = max(
                worst_m,
                abs(complex(zeta_tree_quadrature(q, 0.0).value) - 1.0),
                abs(complex(zeta_tree_quadrature(q, -1.0).value) - (q + 1.0)),
                abs(complex(zeta_tree_quadrature(q, -2.0).value)
                    - ((q + 1.0) ** 2 + q + 1.0)))
        ok = worst_m <= 1e-8
        return ok, f"route gap {worst:.2e}; moment worst {worst_m:.2e}"
    return _timed(9, "tree zeta route equivalence and moments", 10.0, body)


def criterion_10():
    def body():
        grid = np.linspace(0.0025, 0.9975, 200)
        rep = lemma_scan(30.0, grid)
        if not rep.lhs_increasing:
            return False, f"left side not increasing ({len(rep.lhs_violations)} violations)"
        if not rep.rhs_decreasing:
            return False, "right side not decreasing"
        dev = abs(rep.crossing_sigma - 0.5)
        if not dev < 1e-6:
            return False, f"crossing at {rep.crossing_sigma} (|dev| {dev:.1e})"
        ratio = -float(riemann_zeta_deriv(2.0).real) / float(riemann_zeta(2.0).real)
        ok = 0.5699 < ratio < 0.5700
        return ok, (f"crossing dev {dev:.1e}; -zeta'(2)/zeta(2) = {ratio:.7f}")
    return _timed(10, "monotone comparison scan and the derivative ratio",
                  10.0, body)


def criterion_11():
    def body():
        bad = []
        for k in range(1, 20):
            sigma = 0.05 * k
            rep = negativity_check(sigma)
            if not rep.holds:
                bad.append(sigma)
        if bad:
            return False, f"bound violated at sigma = {bad}"
        dev = abs(float(riemann_zeta(0.5).real) + 1.4603545)
        return dev <= 1e-6, f"bound holds at 19 points; zeta(1/2) dev {dev:.1e}"
    return _timed(11, "elementary negativity bound on (0,1)", 1.0, body)


def criterion_12():
    def body():
        s = complex(0.6, 3.0)
        lhs = 4000.0 ** 2 * (h_n_general(QUARTIC_PROFILE, s, 4000)
                             - 2.0 * completed_xi(s))
        target = -(QUARTIC_PROFILE.d3_at_0
                   / (QUARTIC_PROFILE.d1_at_0 * math.pi ** 2)) * alpha(s)
        dev_q = abs(lhs / target - 1.0)
        if not dev_q < 0.02:
            return False, f"quartic coefficient off by {dev_q:.2%}"
        worst = 0.0
        for sv, n in ((complex(0.4, 2.0), 500), (complex(0.6, 3.0), 4000),
                      (complex(0.25, 1.0), 1000)):
            worst = max(worst, abs(h_n_general(SIN_PROFILE, sv, n) - h_n(sv, n)))
        ok = worst <= 1e-10
        return ok, f"quartic dev {dev_q:.2%}; sine-profile identity gap {worst:.1e}"
    return _timed(12, "profile-generalized h against its model", 60.0, body)


_CRITERIA = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4,
    5: criterion_5, 6: criterion_6, 7: criterion_7, 8: criterion_8,
    9: criterion_9, 10: criterion_10, 11: criterion_11, 12: criterion_12,
}

SUITES = {
    "identities": (1, 2, 3, 4, 5, 11),
    "asymptotics": (6, 7),
    "rh": (8, 10, 12),
    "tree": (9,),
    "all": tuple(range(1, 13)),
}


def run_criterion(cid):
    return _CRITERIA[cid]()


def run_suite(name):
    """Run a named suite; returns (results, all_ok)."""
    ids = SUITES[name]
    results = [run_criterion(cid) for cid in ids]
    return results, all(r.ok for r in results)
