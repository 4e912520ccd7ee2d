"""Separable command: distinguishability bounds for separable attack states."""

from thaqkd.commands.common import Table, run_dataset
from thaqkd.runconfig import RunConfig
from thaqkd.separable import beta_max, constructive_delta, lucamarini_delta

COLUMNS = [
    "mu",
    "beta_max",
    "delta_separable",
    "delta_constructive",
    "constructive_gap",
    "delta_lucamarini",
]


def mu_grid(cfg: RunConfig) -> list[float]:
    """mu_points evenly spaced values in (0, mu_max]."""
    return [cfg.mu_max * i / cfg.mu_points for i in range(1, cfg.mu_points + 1)]


def build_separable(cfg: RunConfig) -> Table:
    rows: list[list[float]] = []
    exceeded = 0
    for mu in mu_grid(cfg):
        built = constructive_delta(mu)
        if built.gap < 0:
            exceeded += 1
        rows.append(
            [mu, beta_max(mu), built.closed_form, built.delta, built.gap, lucamarini_delta(mu)]
        )
    notes = [f"constructive pair exceeds the closed form at {exceeded} of {len(rows)} points"]
    return Table(columns=COLUMNS, rows=rows, notes=notes)


def cmd_separable(args: list[str]) -> int:
    """Handle the separable subcommand.

    Args:
        args: Flags such as --mu_points, --mu_max

    Returns:
        Exit code (0 success, 2 invalid input, 3 numerical failure)
    """
    return run_dataset("separable", args, build_separable)
