"""Optimize-thermal command: best noise level per distance and the secure ranges."""

import sys
from collections.abc import Callable

import numpy as np

from thaqkd.commands.common import Table, run_dataset
from thaqkd.keyrate import SweepRow, distance_sweep, secure_range, sweep_rate
from thaqkd.runconfig import RunConfig

COLUMNS = ["L_km", "K_base", "K_opt", "mu_T_opt", "eps_opt", "p_succ_opt"]

RateAt = Callable[[float], float]


def distance_grid(cfg: RunConfig) -> list[float]:
    """L_points distances from 0 to L_max_km inclusive."""
    return [float(v) for v in np.linspace(0.0, cfg.L_max_km, cfg.L_points)]


def describe_range(rows: list[SweepRow], rate_at: RateAt) -> tuple[float | None, str]:
    """Secure range of a sweep and a one-line description of it."""
    try:
        reach = secure_range(rows, rate_at)
    except ValueError as e:
        return None, str(e)
    return reach, f"{reach:.6g} km"


def range_notes(
    label: str,
    base: list[SweepRow],
    opt: list[SweepRow],
    base_rate: RateAt,
    opt_rate: RateAt,
) -> list[str]:
    """Header notes comparing the baseline and optimized secure ranges."""
    base_reach, base_text = describe_range(base, base_rate)
    opt_reach, opt_text = describe_range(opt, opt_rate)
    notes = [
        f"secure range{label} baseline: {base_text}",
        f"secure range{label} optimized: {opt_text}",
    ]
    if base_reach and opt_reach:
        notes.append(f"secure range{label} ratio: {opt_reach / base_reach:.6g}")
    return notes


def build_optimize_thermal(cfg: RunConfig) -> Table:
    distances = distance_grid(cfg)
    base = distance_sweep(
        cfg.mu_D, distances, cfg.L0_km, cfg.L_Q_km, cfg.detector, optimize=False
    )
    opt = distance_sweep(cfg.mu_D, distances, cfg.L0_km, cfg.L_Q_km, cfg.detector)
    rows = [
        [b.L_km, b.K, o.K, o.mu_T_opt, o.eps, o.p_succ]
        for b, o in zip(base, opt, strict=True)
    ]
    notes = range_notes(
        "",
        base,
        opt,
        sweep_rate(cfg.mu_D, cfg.L0_km, cfg.L_Q_km, cfg.detector, optimize=False),
        sweep_rate(cfg.mu_D, cfg.L0_km, cfg.L_Q_km, cfg.detector),
    )
    for note in notes:
        print(f"  {note}", file=sys.stderr)
    return Table(columns=COLUMNS, rows=rows, notes=notes)


def cmd_optimize_thermal(args: list[str]) -> int:
    """Handle the optimize-thermal subcommand.

    Args:
        args: Flags such as --mu_D, --L_max_km, --L_points, --L_Q_km

    Returns:
        Exit code (0 success, 2 invalid input, 3 numerical failure)
    """
    return run_dataset("optimize-thermal", args, build_optimize_thermal)
