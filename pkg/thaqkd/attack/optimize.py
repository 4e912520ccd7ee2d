"""Search Eve's split between squeezing and displacement."""

from dataclasses import dataclass

import numpy as np

from thaqkd.attack.config import AttackConfig
from thaqkd.attack.returned import build_returned_pair
from thaqkd.gaussian import fidelity
from thaqkd.utils.search import minimize_on_grid

DEFAULT_P_POINTS = 64


@dataclass(frozen=True)
class SplitOptimum:
    """Best squeezing fraction and the fidelity it reaches."""

    p: float
    fidelity: float


def circuit_fidelity(N: float, p: float, eta: float, mu_T: float, phi: float = 0.0) -> float:
    """Fidelity of the physical returned pair for one budget split."""
    pair = build_returned_pair(AttackConfig(N=N, p=p, phi=phi, eta=eta, mu_T=mu_T))
    return fidelity(pair.state_0, pair.state_quarter)


def optimal_p(
    N: float,
    eta: float,
    mu_T: float,
    points: int = DEFAULT_P_POINTS,
    phi: float = 0.0,
    refine: bool = True,
) -> SplitOptimum:
    """Find the squeezing fraction p in [0, 1] that minimizes the fidelity.

    A uniform grid of ``points`` values is scanned first; with ``refine`` the
    best bracket is polished by golden-section search. Ties go to the
    smaller p, so a budget of zero reports p = 0.

    Raises:
        ValueError: If points < 1
    """
    if points < 1:
        raise ValueError("p grid is empty")
    grid = [float(v) for v in np.linspace(0.0, 1.0, points)] if points > 1 else [0.0]

    def objective(p: float) -> float:
        return circuit_fidelity(N, p, eta, mu_T, phi)

    if not refine:
        values = [objective(p) for p in grid]
        best = int(np.argmin(values))
        return SplitOptimum(p=grid[best], fidelity=values[best])
    p_best, f_best = minimize_on_grid(objective, grid)
    return SplitOptimum(p=p_best, fidelity=f_best)
