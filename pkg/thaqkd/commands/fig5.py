"""Fig5 command: reflection staircase and key rate against travel time."""

from thaqkd.commands.common import Table, run_dataset
from thaqkd.runconfig import RunConfig
from thaqkd.shutter import travel_time_sweep, uniform_travel_times

COLUMNS = ["t_L_over_tP", "R", "mu", "K_raw", "K_convolved"]


def build_fig5(cfg: RunConfig) -> Table:
    sweep = travel_time_sweep(cfg.shutter(), uniform_travel_times(cfg.t_L_points))
    rows = [[r.t_L_over_tP, r.R, r.mu, r.K_raw, r.K_convolved] for r in sweep]
    best = max((r.K_convolved for r in sweep), default=0.0)
    return Table(columns=COLUMNS, rows=rows, notes=[f"max K_convolved: {best:.6g}"])


def cmd_fig5(args: list[str]) -> int:
    """Handle the fig5 subcommand.

    Args:
        args: Flags such as --shutter_N, --delta, --eta_R, --t_L_points

    Returns:
        Exit code (0 success, 2 invalid input, 3 numerical failure)
    """
    return run_dataset("fig5", args, build_fig5)
