"""Quadrature engine, integral identities and randomized identity suites."""
from .identities import (
    IdentityReport,
    check_hurwitz_int_rep,
    check_loggamma_square,
    check_mellin,
    check_orthogonality,
    check_primitive,
    check_product_integral,
    check_psi_int_rep,
    check_zeta_psi_diagonal,
    check_zeta_psi_integral,
    loggamma_square_closed_form,
    make_report,
    mellin_closed_form,
    product_closed_form,
    zeta_psi_closed_form,
)
from .quadrature import QuadratureResult, quad_finite, quad_semiinfinite, quad_zero_to_inf
from .suites import SUITES, integral_suite, run_suite
