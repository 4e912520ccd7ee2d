"""Fig3 command: baseline and noise-optimized key rate against distance.

One column group per memory lifetime; the dephasing length of group i is
c tau_i.
"""

import sys

from thaqkd.commands.common import Table, run_dataset
from thaqkd.commands.optimize_thermal import distance_grid, range_notes
from thaqkd.errors import NumericalError
from thaqkd.keyrate import distance_sweep, sweep_rate
from thaqkd.runconfig import RunConfig

# Optimized rates are compared with the baseline to this slack.
DOMINANCE_TOL = 1e-12


def fig3_columns(labels: int) -> list[str]:
    columns = ["L_km"]
    for i in range(1, labels + 1):
        columns += [f"K_base_tau{i}", f"K_opt_tau{i}", f"mu_T_opt_tau{i}"]
    return columns


def build_fig3(cfg: RunConfig) -> Table:
    distances = distance_grid(cfg)
    columns_by_label: list[list[list[float]]] = []
    notes: list[str] = []
    for i, (tau, L_Q) in enumerate(cfg.dephasing_lengths(), start=1):
        base = distance_sweep(cfg.mu_D, distances, cfg.L0_km, L_Q, cfg.detector, optimize=False)
        opt = distance_sweep(cfg.mu_D, distances, cfg.L0_km, L_Q, cfg.detector)
        for b, o in zip(base, opt, strict=True):
            if o.K < b.K - DOMINANCE_TOL:
                raise NumericalError(
                    "optimize_thermal", f"optimized rate below baseline at L={b.L_km} km"
                )
        notes.append(f"tau{i} = {tau:.6g} us, L_Q = {L_Q:.6g} km")
        notes += range_notes(
            f" tau{i}",
            base,
            opt,
            sweep_rate(cfg.mu_D, cfg.L0_km, L_Q, cfg.detector, optimize=False),
            sweep_rate(cfg.mu_D, cfg.L0_km, L_Q, cfg.detector),
        )
        columns_by_label.append([[b.K, o.K, o.mu_T_opt] for b, o in zip(base, opt, strict=True)])
        print(f"  tau{i} = {tau:.6g} us done", file=sys.stderr)

    rows: list[list[float]] = []
    for j, L in enumerate(distances):
        row = [L]
        for group in columns_by_label:
            row += group[j]
        rows.append(row)
    return Table(columns=fig3_columns(len(cfg.tau_us)), rows=rows, notes=notes)


def cmd_fig3(args: list[str]) -> int:
    """Handle the fig3 subcommand.

    Args:
        args: Flags such as --mu_D, --L0_km, --tau_us 2,5,10, --L_max_km

    Returns:
        Exit code (0 success, 2 invalid input, 3 numerical failure)
    """
    return run_dataset("fig3", args, build_fig3)
