"""Calibrate-shutter command: search the photon budget behind the shutter targets."""

from thaqkd.commands.common import EXIT_NUMERICAL, Table, run_dataset
from thaqkd.runconfig import RunConfig
from thaqkd.shutter import calibrate_photon_budget, uniform_travel_times

COLUMNS = ["N", "best_K_convolved_primary", "best_K_convolved_secondary"]

PRIMARY_WIDTH = 0.01
SECONDARY_WIDTH = 0.02


def build_calibration(cfg: RunConfig) -> Table:
    calibration = calibrate_photon_budget(
        cfg.shutter(),
        uniform_travel_times(cfg.t_L_points),
        widths=(PRIMARY_WIDTH, SECONDARY_WIDTH),
    )
    row = [calibration.N, calibration.best_primary, calibration.best_secondary]
    if not calibration.found:
        return Table(
            columns=COLUMNS,
            rows=[row],
            notes=["no photon budget meets both targets"],
            exit_code=EXIT_NUMERICAL,
        )
    return Table(
        columns=COLUMNS,
        rows=[row],
        notes=[
            f"calibrated N: {calibration.N:.12g}",
            f"windows: {PRIMARY_WIDTH:g} and {SECONDARY_WIDTH:g}",
        ],
    )


def cmd_calibrate_shutter(args: list[str]) -> int:
    """Handle the calibrate-shutter subcommand.

    Args:
        args: Flags such as --eta_R, --epsilon, --t_L_points

    Returns:
        Exit code (0 when a budget is found, 2 invalid input, 3 when none is)
    """
    return run_dataset("calibrate-shutter", args, build_calibration)
