"""Shutter command: reflections and key rate for one travel time."""

from thaqkd.commands.common import Table, run_dataset
from thaqkd.runconfig import RunConfig
from thaqkd.shutter import reflection_count, returned_mean_photons, shutter_key_rate

COLUMNS = ["t_L_over_tP", "R", "mu", "delta", "K_raw", "K"]


def build_shutter(cfg: RunConfig) -> Table:
    shutter = cfg.shutter()
    reflections = reflection_count(shutter)
    mu = returned_mean_photons(shutter.N, shutter.eta_R, reflections)
    result = shutter_key_rate(shutter)
    row = [
        shutter.t_L / shutter.t_P,
        reflections,
        mu,
        result.delta_used,
        result.K_raw,
        result.K,
    ]
    return Table(columns=COLUMNS, rows=[row])


def cmd_shutter(args: list[str]) -> int:
    """Handle the shutter subcommand.

    Args:
        args: Flags such as --t_L, --t_S, --eta_R, --shutter_N

    Returns:
        Exit code (0 success, 2 invalid input, 3 numerical failure)
    """
    return run_dataset("shutter", args, build_shutter)
