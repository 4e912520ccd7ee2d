"""Thermal-noise defense: choose Alice's noise level and map the secure range."""

from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np

from thaqkd.attack.fidelities import distinguishability, simplified_fidelity
from thaqkd.keyrate.bb84 import KeyRateResult, secret_key_rate
from thaqkd.keyrate.detectors import ChannelModel, DetectorKind, detection_stats
from thaqkd.utils.search import maximize_on_grid

MU_T_MIN = 1e-4
MU_T_MAX = 1e3
MU_T_POINTS = 128
POSITIVE_RATE = 1e-9
BISECTION_STEPS = 60


def thermal_key_rate(
    mu_D: float, mu_T: float, channel: ChannelModel, detector: DetectorKind = "bucket"
) -> KeyRateResult:
    """Key rate when Eve's coherent attack meets mu_T thermal photons."""
    stats = detection_stats(detector, mu_T, channel.T, channel.Q)
    delta = distinguishability(simplified_fidelity(mu_D, mu_T))
    return secret_key_rate(stats.p_succ, stats.eps, delta)


@dataclass(frozen=True)
class ThermalOptimum:
    """Best noise level at one distance, with the noiseless rate for reference."""

    mu_T: float
    result: KeyRateResult
    baseline: KeyRateResult


def mu_T_grid(
    mu_min: float = MU_T_MIN, mu_max: float = MU_T_MAX, points: int = MU_T_POINTS
) -> list[float]:
    """Zero followed by ``points`` logarithmically spaced noise levels."""
    if points < 1 or not 0 < mu_min <= mu_max:
        raise ValueError("mu_T search range is empty")
    return [0.0, *(float(v) for v in np.geomspace(mu_min, mu_max, points))]


def optimize_thermal(
    mu_D: float,
    channel: ChannelModel,
    detector: DetectorKind = "bucket",
    grid: Sequence[float] | None = None,
) -> ThermalOptimum:
    """Pick the mu_T that maximizes the clamped key rate.

    The grid always contains mu_T = 0, so the optimum is never worse than
    sending no noise. The best grid point is polished by golden-section
    search in its bracket; ties go to the smaller mu_T.

    Raises:
        ValueError: If the grid is empty
    """
    grid = list(grid) if grid is not None else mu_T_grid()
    if not grid:
        raise ValueError("mu_T search range is empty")
    grid = sorted(grid)

    def rate(mu_T: float) -> float:
        return thermal_key_rate(mu_D, mu_T, channel, detector).K

    mu_best, _ = maximize_on_grid(rate, grid)
    baseline = thermal_key_rate(mu_D, 0.0, channel, detector)
    return ThermalOptimum(
        mu_T=mu_best,
        result=thermal_key_rate(mu_D, mu_best, channel, detector),
        baseline=baseline,
    )


@dataclass(frozen=True)
class SweepRow:
    """One distance of a key-rate sweep."""

    L_km: float
    K: float
    K_raw: float
    eps: float
    eps_tilde: float
    p_succ: float
    mu_T_opt: float

    @classmethod
    def from_result(cls, L_km: float, result: KeyRateResult, mu_T: float) -> "SweepRow":
        return cls(
            L_km=L_km,
            K=result.K,
            K_raw=result.K_raw,
            eps=result.eps,
            eps_tilde=result.eps_tilde,
            p_succ=result.p_succ,
            mu_T_opt=mu_T,
        )


def distance_sweep(
    mu_D: float,
    distances: Sequence[float],
    L0: float,
    L_Q: float,
    detector: DetectorKind = "bucket",
    optimize: bool = True,
    mu_T: float = 0.0,
) -> list[SweepRow]:
    """Key rate at each distance, in input order.

    With ``optimize`` the noise level is chosen per distance; otherwise the
    fixed ``mu_T`` is used and reported.
    """
    rows: list[SweepRow] = []
    for L in distances:
        channel = ChannelModel(L=L, L0=L0, L_Q=L_Q)
        if optimize:
            best = optimize_thermal(mu_D, channel, detector)
            rows.append(SweepRow.from_result(L, best.result, best.mu_T))
        else:
            fixed = thermal_key_rate(mu_D, mu_T, channel, detector)
            rows.append(SweepRow.from_result(L, fixed, mu_T))
    return rows


def sweep_rate(
    mu_D: float,
    L0: float,
    L_Q: float,
    detector: DetectorKind = "bucket",
    optimize: bool = True,
    mu_T: float = 0.0,
) -> Callable[[float], float]:
    """Clamped key rate as a function of distance, matching distance_sweep rows."""

    def rate(L: float) -> float:
        channel = ChannelModel(L=L, L0=L0, L_Q=L_Q)
        if optimize:
            return optimize_thermal(mu_D, channel, detector).result.K
        return thermal_key_rate(mu_D, mu_T, channel, detector).K

    return rate


def secure_range(
    rows: Sequence[SweepRow],
    rate_at: Callable[[float], float],
    threshold: float = POSITIVE_RATE,
) -> float:
    """Largest distance with K above ``threshold``.

    The last positive row and its successor bracket the cutoff, which is
    then located by bisection on ``rate_at``.

    Raises:
        ValueError: If no row is positive or the sweep ends while still positive
    """
    positive = [i for i, row in enumerate(rows) if row.K > threshold]
    if not positive:
        raise ValueError("no secure range")
    last = positive[-1]
    if last == len(rows) - 1:
        raise ValueError(f"sweep ends at {rows[last].L_km} km with K still positive")

    lo, hi = rows[last].L_km, rows[last + 1].L_km
    for _ in range(BISECTION_STEPS):
        mid = (lo + hi) / 2
        if rate_at(mid) > threshold:
            lo = mid
        else:
            hi = mid
    return lo
