"""Fig4 command: distinguishability bounds against returned mean photons."""

from thaqkd.attack import distinguishability, simplified_fidelity
from thaqkd.commands.common import Table, run_dataset
from thaqkd.commands.separable import mu_grid
from thaqkd.runconfig import RunConfig
from thaqkd.separable import lucamarini_delta, separable_delta_bound

COLUMNS = ["mu", "delta_separable", "delta_lucamarini", "delta_thermal_mu1", "delta_thermal_mu5"]


def fig4_row(mu: float) -> list[float]:
    return [
        mu,
        separable_delta_bound(mu),
        lucamarini_delta(mu),
        distinguishability(simplified_fidelity(mu, 1.0)),
        distinguishability(simplified_fidelity(mu, 5.0)),
    ]


def build_fig4(cfg: RunConfig) -> Table:
    rows = [fig4_row(mu) for mu in mu_grid(cfg)]
    ordered = all(r[1] > r[2] > r[3] > r[4] for r in rows)
    notes = [f"strict ordering separable > lucamarini > thermal: {'yes' if ordered else 'no'}"]
    return Table(columns=COLUMNS, rows=rows, notes=notes)


def cmd_fig4(args: list[str]) -> int:
    """Handle the fig4 subcommand.

    Args:
        args: Flags such as --mu_points, --mu_max

    Returns:
        Exit code (0 success, 2 invalid input, 3 numerical failure)
    """
    return run_dataset("fig4", args, build_fig4)
