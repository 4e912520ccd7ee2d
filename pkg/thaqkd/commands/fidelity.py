"""Fidelity command: every fidelity of one Gaussian attack configuration."""

from thaqkd.attack import budget_audit, closed_form_gap, distinguishability
from thaqkd.commands.common import Table, run_dataset
from thaqkd.runconfig import RunConfig

COLUMNS = [
    "N",
    "p",
    "eta",
    "mu_T",
    "omega",
    "mu_D",
    "F_closed_form",
    "F_tabulated",
    "F_simplified",
    "F_circuit",
    "delta_closed_form",
    "budget_mismatch",
]


def build_fidelity(cfg: RunConfig) -> Table:
    attack = cfg.attack()
    gap = closed_form_gap(attack)
    audit = budget_audit(attack)
    notes: list[str] = []
    if not gap.tabulated_physical:
        notes.append("tabulated states violate the uncertainty relation; F_tabulated left empty")
    if not audit.consistent:
        notes.append(f"squeezing photons differ from p N by {audit.mismatch:.6g}")
    row = [
        attack.N,
        attack.p,
        attack.eta,
        attack.mu_T,
        attack.omega,
        attack.mu_D,
        gap.closed_form,
        gap.tabulated,
        gap.simplified,
        gap.circuit,
        distinguishability(min(1.0, max(0.0, gap.closed_form))),
        audit.mismatch,
    ]
    return Table(columns=COLUMNS, rows=[row], notes=notes)


def cmd_fidelity(args: list[str]) -> int:
    """Handle the fidelity subcommand.

    Args:
        args: Flags such as --N, --p, --eta, --mu_T, --phi

    Returns:
        Exit code (0 success, 2 invalid input, 3 numerical failure)
    """
    return run_dataset("fidelity", args, build_fidelity)
