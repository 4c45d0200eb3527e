"""Spectral zeta functions of lattice graphs, trees, and continuous tori.

Finite cycles and discrete tori are summed exactly; their infinite-volume
limits (the integer lattice Z^d, the regular tree) and the continuous torus
are evaluated through analytic continuations.  On top of these sit the
asymptotic-expansion and functional-equation experiments in ``rh``.
"""

from .backend import BACKEND
from .errors import (CancellationWarning, MathDomainError,
                     ParameterDomainError, PoleError, QuadratureError)
from .graphs import (inverse_even_sum_closed, sine_power_sum, sine_sum_at_one,
                     waldvogel_model, xi_Z, zeta_cycle, zeta_discrete_torus,
                     zeta_Z, zeta_Z_deriv)
from .lattices import DiagonalLattice
from .quadrature import EvalResult, tanh_sinh
from .rh import (ExpansionReport, FunctionSpec, QUARTIC_PROFILE, SIN_PROFILE,
                 alpha, approx_fe_diff, approx_fe_report, c_factor,
                 fitted_decay_order, h_model, h_n, h_n_general,
                 h_ratio_sequence, lemma_scan, multiple_zero_S,
                 negativity_check, power_sum_three_term, profile_by_name,
                 theorem1_check, wintner_probe, xi_cycle)
from .special import (bernoulli_even, bessel_i_scaled, completed_xi, digamma,
                      gamma, log_gamma, reciprocal_gamma, riemann_zeta,
                      riemann_zeta_deriv)
from .torus import TorusEigenvalueEnumerator, torus_theta, zeta_real_torus
from .tree import (TreeSpec, appell_f1, tree_spectral_density,
                   zeta_tree_closed, zeta_tree_quadrature)
from .zd import SeriesSplit, heat_diag_Zd, large_t_coeffs, small_t_coeffs, zeta_Zd

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "__version__",
    "CancellationWarning", "MathDomainError", "ParameterDomainError",
    "PoleError", "QuadratureError",
    "DiagonalLattice", "EvalResult", "tanh_sinh",
    "sine_power_sum", "zeta_cycle", "zeta_discrete_torus", "zeta_Z", "xi_Z",
    "zeta_Z_deriv", "inverse_even_sum_closed", "sine_sum_at_one",
    "waldvogel_model",
    "SeriesSplit", "heat_diag_Zd", "small_t_coeffs", "large_t_coeffs",
    "zeta_Zd",
    "TorusEigenvalueEnumerator", "torus_theta", "zeta_real_torus",
    "TreeSpec", "tree_spectral_density", "zeta_tree_quadrature", "appell_f1",
    "zeta_tree_closed",
    "FunctionSpec", "SIN_PROFILE", "QUARTIC_PROFILE", "profile_by_name",
    "ExpansionReport", "fitted_decay_order", "h_n", "alpha", "h_model",
    "h_ratio_sequence", "h_n_general", "c_factor", "multiple_zero_S",
    "xi_cycle", "approx_fe_diff", "approx_fe_report", "power_sum_three_term",
    "theorem1_check", "lemma_scan", "negativity_check", "wintner_probe",
    "bernoulli_even", "bessel_i_scaled", "completed_xi", "digamma", "gamma",
    "log_gamma", "reciprocal_gamma", "riemann_zeta", "riemann_zeta_deriv",
]
