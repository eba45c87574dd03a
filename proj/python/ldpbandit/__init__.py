"""Python bindings for the ldpbandit simulation core."""

from ._core import (
    AuditResult,
    audit,
    b_privacy_factor,
    ctb_output_kl,
    ctb_success_prob,
    kl_bernoulli,
    l_privacy_factor,
    ldp_l_index,
    lower_bound_coeff,
    mixture_kl_bound,
    ratio_kl_bound,
    reproduce,
    run,
    sigmoid,
    ub_ldp_b,
    ub_ldp_l,
    ucb1_index,
)

__all__ = [
    "AuditResult",
    "audit",
    "b_privacy_factor",
    "ctb_output_kl",
    "ctb_success_prob",
    "kl_bernoulli",
    "l_privacy_factor",
    "ldp_l_index",
    "lower_bound_coeff",
    "mixture_kl_bound",
    "ratio_kl_bound",
    "reproduce",
    "run",
    "sigmoid",
    "ub_ldp_b",
    "ub_ldp_l",
    "ucb1_index",
]
