"""Integral identities: integrands, closed forms and the registry tying them together."""
from .closed_forms import (
    rhs_catalan_case,
    rhs_cosh_case,
    rhs_diff_sinh_sinh,
    rhs_gr_3514_4,
    rhs_hurwitz_a2m1,
    rhs_log_gamma_ex1,
    rhs_log_gamma_ex2,
    rhs_log_gamma_ex3,
    rhs_log_gamma_ex4,
    rhs_log_sinh_sinh,
    rhs_master,
    rhs_mellin_tanh_sech,
    rhs_new_entry,
    rhs_new_entry_lerch,
    rhs_trigamma_alg,
    rhs_x_sinh_sinh_k0,
    rhs_x_sinh_sinh_k1,
    rhs_xk_sinh,
    rhs_xk_sinh_sinh,
    rhs_zeta3_alg,
)
from .registry import (
    DEFAULT_PERTURBATIONS,
    DEFAULT_SEED,
    REGISTRY,
    Family,
    Identity,
    IntegralCase,
    family_ids,
    get,
    lhs_integrand,
    rhs_value,
)

__all__ = [name for name in dir() if not name.startswith("_")]
