"""Closed-form quadrature for Bernstein-Szego weights and its numerical verification."""

from ._bszego import (
    Error,
    Family,
    QuadratureRule,
    VerificationRecord,
    corollary,
    dump_rule,
    moment_match,
    pf_reciprocal_U,
    pick_eval,
    ramanujan_353,
    report,
    rho,
    rule_cos_plus_cosh,
    rule_cosh_minus_cos,
    rule_squared,
    run_verify,
    s_sum,
    suites,
    sum_form,
    sum_form_beta,
    szego_factor,
    theta_integral,
)

__all__ = [
    "Error",
    "Family",
    "QuadratureRule",
    "VerificationRecord",
    "corollary",
    "dump_rule",
    "moment_match",
    "pf_reciprocal_U",
    "pick_eval",
    "ramanujan_353",
    "report",
    "rho",
    "rule_cos_plus_cosh",
    "rule_cosh_minus_cos",
    "rule_squared",
    "run_verify",
    "s_sum",
    "suites",
    "sum_form",
    "sum_form_beta",
    "szego_factor",
    "theta_integral",
]
