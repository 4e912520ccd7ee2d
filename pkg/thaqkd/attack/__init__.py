"""Gaussian Trojan-horse attack: returned states and their fidelity."""

from thaqkd.attack.config import AttackConfig
from thaqkd.attack.fidelities import (
    ClosedFormGap,
    closed_form_fidelity,
    closed_form_gap,
    distinguishability,
    simplified_fidelity,
)
from thaqkd.attack.optimize import SplitOptimum, circuit_fidelity, optimal_p
from thaqkd.attack.returned import BudgetAudit, ReturnedPair, budget_audit, build_returned_pair

__all__ = [
    "AttackConfig",
    "BudgetAudit",
    "ClosedFormGap",
    "ReturnedPair",
    "SplitOptimum",
    "budget_audit",
    "build_returned_pair",
    "circuit_fidelity",
    "closed_form_fidelity",
    "closed_form_gap",
    "distinguishability",
    "optimal_p",
    "simplified_fidelity",
]
