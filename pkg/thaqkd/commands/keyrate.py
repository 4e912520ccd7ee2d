"""Keyrate command: secret key rate at one distance and noise level."""

from thaqkd.commands.common import Table, run_dataset
from thaqkd.keyrate import ChannelModel, thermal_key_rate
from thaqkd.runconfig import RunConfig

COLUMNS = ["L_km", "mu_T", "T", "Q", "p_succ", "eps", "delta", "eps_tilde", "K_raw", "K"]


def build_keyrate(cfg: RunConfig) -> Table:
    channel = ChannelModel(L=cfg.L_km, L0=cfg.L0_km, L_Q=cfg.L_Q_km)
    result = thermal_key_rate(cfg.mu_D, cfg.mu_T, channel, cfg.detector)
    notes = ["distinguishability saturated, K clamped to 0"] if result.saturated else []
    row = [
        cfg.L_km,
        cfg.mu_T,
        channel.T,
        channel.Q,
        result.p_succ,
        result.eps,
        result.delta_used,
        result.eps_tilde,
        result.K_raw,
        result.K,
    ]
    return Table(columns=COLUMNS, rows=[row], notes=notes)


def cmd_keyrate(args: list[str]) -> int:
    """Handle the keyrate subcommand.

    Args:
        args: Flags such as --L_km, --mu_D, --mu_T, --detector

    Returns:
        Exit code (0 success, 2 invalid input, 3 numerical failure)
    """
    return run_dataset("keyrate", args, build_keyrate)
