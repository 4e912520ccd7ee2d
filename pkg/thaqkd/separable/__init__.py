"""Distinguishability bounds for separable attack states."""

from thaqkd.separable.bound import (
    ConstructiveBound,
    SubspaceState,
    beta_max,
    constructive_delta,
    lucamarini_delta,
    returned_matrix,
    rho_sub,
    separable_delta_bound,
    worst_case_rho_sub,
)
from thaqkd.separable.survival import (
    SurvivalAudit,
    SurvivalCheck,
    bimodal_inequality_check,
    survival_audit,
    survival_bound_check,
)

__all__ = [
    "ConstructiveBound",
    "SubspaceState",
    "SurvivalAudit",
    "SurvivalCheck",
    "beta_max",
    "bimodal_inequality_check",
    "constructive_delta",
    "lucamarini_delta",
    "returned_matrix",
    "rho_sub",
    "separable_delta_bound",
    "survival_audit",
    "survival_bound_check",
    "worst_case_rho_sub",
]
