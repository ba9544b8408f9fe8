"""Generalized polygamma function psi(z, q), entire in the order z.

Core evaluators live in :mod:`genpolygamma.genpoly` (built on the Hurwitz zeta
function in :mod:`genpolygamma.hurwitz`), alternative representations in
:mod:`genpolygamma.expansions`, and quadrature-based identity checks in
:mod:`genpolygamma.verify`.
"""
from .config import DEFAULT_CONFIG, EvalConfig
from .errors import DomainError, HypothesisError, NoConvergenceError, NonFiniteIntegrandError, PoleError
from .expansions import (
    AsymptoticResult,
    SeriesResult,
    asymptotic_psi,
    fourier_psi,
    grossman_asymptotic,
    grossman_psi,
    psi_difference,
    psi_difference_polynomial,
    small_q_psi,
    taylor_psi,
)
from .genpoly import (
    Branch,
    GenPolyValue,
    balanced_negapolygamma,
    duplication_lhs_rhs,
    gen_polygamma,
    gosper_negapolygamma,
    multiplication_lhs_rhs,
    negapoly_polynomial,
    polygamma,
    psi_at_one,
    psi_at_one_reflected,
    q_derivative,
    shift_rhs,
    zeta_over_gamma,
)
from .hurwitz import (
    ZetaValue,
    hurwitz_zeta,
    hurwitz_zeta_all,
    hurwitz_zeta_dq,
    hurwitz_zeta_ds,
    riemann_zeta,
    riemann_zeta_ds,
)
from .kernel import (
    BERNOULLI,
    EULER_GAMMA,
    bernoulli_poly,
    digamma,
    gamma,
    harmonic,
    harmonic_number,
    log_gamma,
    recip_gamma,
    reg_ratio,
)

__version__ = "0.1.0"
