"""Shutter defense: light that arrives while the shutter is closed bounces back.

Each bounce off the rear of the shutter costs a factor eta_R, so Eve only
gets back N eta_R^(R - 1) photons, where R is the number of round trips
until the shutter happens to be open. Times are in units of the shutter
period.
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass, replace

import numpy as np
import numpy.typing as npt

from thaqkd.errors import NumericalError
from thaqkd.keyrate.bb84 import KeyRateResult, secret_key_rate
from thaqkd.separable.bound import MU_MAX, separable_delta_bound

FloatArray = npt.NDArray[np.float64]

MOD_SNAP = 1e-12
WINDOW_TOL = 1e-12


@dataclass(frozen=True)
class ShutterConfig:
    """Timing and photon budget of the shutter defense.

    Attributes:
        t_S: How long the shutter stays open
        t_P: Shutter period
        t_L: Round-trip travel time between shutter and encoder
        eta_R: Reflectivity of the shutter's rear face, in (0, 1)
        N: Mean photons Eve injects
        delta: Half-width of the travel-time uncertainty window
        R_max: Largest reflection count searched
        eps: Bit-error rate assumed for the key rate
    """

    t_S: float = 0.1
    t_P: float = 1.0
    t_L: float = 0.9
    eta_R: float = 0.5
    N: float = 1e6
    delta: float = 0.01
    R_max: int = 10_000
    eps: float = 0.0

    def __post_init__(self) -> None:
        if not 0 < self.t_S < self.t_P:
            raise ValueError(f"need 0 < t_S < t_P, got t_S={self.t_S}, t_P={self.t_P}")
        if self.t_L <= 0:
            raise ValueError(f"t_L must be positive, got {self.t_L}")
        if not 0 < self.eta_R < 1:
            raise ValueError(f"eta_R must be in (0, 1), got {self.eta_R}")
        if self.N < 0:
            raise ValueError(f"N must be non-negative, got {self.N}")
        if self.delta < 0:
            raise ValueError(f"delta must be non-negative, got {self.delta}")
        if self.R_max < 1:
            raise ValueError(f"R_max must be at least 1, got {self.R_max}")
        if not 0.0 <= self.eps <= 1.0:
            raise ValueError(f"eps must be in [0, 1], got {self.eps}")


def _phase_in_period(elapsed: float, period: float) -> float:
    remainder = elapsed - math.floor(elapsed / period) * period
    if abs(remainder) < MOD_SNAP * period or abs(remainder - period) < MOD_SNAP * period:
        return 0.0
    return remainder


def escapes(cfg: ShutterConfig, r: int) -> bool:
    """True if light making r round trips meets the shutter open."""
    remainder = _phase_in_period(r * cfg.t_L, cfg.t_P)
    return 0.0 <= remainder <= cfg.t_S + MOD_SNAP * cfg.t_P


def reflection_count(cfg: ShutterConfig) -> int:
    """Smallest R >= 1 with 0 <= R t_L mod t_P <= t_S, both bounds inclusive.

    Raises:
        NumericalError: If no R up to R_max lets the light out
    """
    for r in range(1, cfg.R_max + 1):
        if escapes(cfg, r):
            return r
    raise NumericalError("reflection_count", f"no escape within cap R_max={cfg.R_max}")


def returned_mean_photons(N: float, eta_R: float, R: int) -> float:
    """Photons that make it back after R round trips, N eta_R^(R - 1)."""
    if R < 1:
        raise ValueError(f"reflection count must be at least 1, got {R}")
    return N * eta_R ** (R - 1)


def _rate_for_mu(mu: float, eps: float) -> KeyRateResult:
    delta = separable_delta_bound(mu) if mu <= MU_MAX else 0.5
    return secret_key_rate(1.0, eps, delta)


def shutter_key_rate(cfg: ShutterConfig) -> KeyRateResult:
    """Key rate with every valid bit counted and the separable bound for delta."""
    mu = returned_mean_photons(cfg.N, cfg.eta_R, reflection_count(cfg))
    return _rate_for_mu(mu, cfg.eps)


def minimizing_convolution(
    t: Sequence[float] | FloatArray, values: Sequence[float] | FloatArray, delta: float
) -> FloatArray:
    """Replace each value by the minimum over samples within delta of its t.

    Windows are truncated at the ends of the sample range.

    Raises:
        ValueError: If t is not sorted, the lengths differ or delta < 0
    """
    ts = np.asarray(t, dtype=np.float64)
    vs = np.asarray(values, dtype=np.float64)
    if ts.shape != vs.shape:
        raise ValueError("t and values must have the same length")
    if delta < 0:
        raise ValueError(f"delta must be non-negative, got {delta}")
    if np.any(np.diff(ts) < 0):
        raise ValueError("samples must be sorted by t")
    lo = np.searchsorted(ts, ts - delta - WINDOW_TOL, side="left")
    hi = np.searchsorted(ts, ts + delta + WINDOW_TOL, side="right")
    return np.array([vs[a:b].min() for a, b in zip(lo, hi, strict=True)])


@dataclass(frozen=True)
class ShutterRow:
    """One travel time of the shutter sweep."""

    t_L_over_tP: float
    R: int
    mu: float
    K_raw: float
    K_convolved: float


def uniform_travel_times(points: int) -> list[float]:
    """Travel times i / points for i = 1..points, in units of t_P."""
    if points < 1:
        raise ValueError(f"need at least one travel time, got {points}")
    return [i / points for i in range(1, points + 1)]


def reflection_staircase(cfg: ShutterConfig, t_values: Sequence[float]) -> list[int]:
    """Reflection count at each travel time (units of t_P)."""
    return [reflection_count(replace(cfg, t_L=t * cfg.t_P)) for t in t_values]


def travel_time_sweep(
    cfg: ShutterConfig,
    t_values: Sequence[float],
    staircase: Sequence[int] | None = None,
) -> list[ShutterRow]:
    """Reflection count, returned photons and key rate over travel times.

    ``staircase`` may carry precomputed reflection counts for ``t_values``.
    """
    counts = list(staircase) if staircase is not None else reflection_staircase(cfg, t_values)
    if len(counts) != len(t_values):
        raise ValueError("staircase does not match the travel times")
    mus = [returned_mean_photons(cfg.N, cfg.eta_R, r) for r in counts]
    rates = [_rate_for_mu(mu, cfg.eps).K for mu in mus]
    convolved = minimizing_convolution(t_values, rates, cfg.delta) if counts else np.array([])
    return [
        ShutterRow(t_L_over_tP=t, R=r, mu=mu, K_raw=k, K_convolved=float(kc))
        for t, r, mu, k, kc in zip(t_values, counts, mus, rates, convolved, strict=True)
    ]


@dataclass(frozen=True)
class ShutterCalibration:
    """Photon budget that reproduces the target worst-case key rates.

    Attributes:
        N: Chosen budget, or None when no grid value meets both targets
        best_primary: Largest convolved rate at the first window width
        best_secondary: Largest convolved rate at the second window width
    """

    N: float | None
    best_primary: float
    best_secondary: float

    @property
    def found(self) -> bool:
        return self.N is not None


def calibrate_photon_budget(
    cfg: ShutterConfig,
    t_values: Sequence[float],
    widths: tuple[float, float] = (0.01, 0.02),
    primary_min: float = 0.9,
    secondary_range: tuple[float, float] = (0.65, 0.85),
    budgets: Sequence[float] | None = None,
) -> ShutterCalibration:
    """Smallest budget whose best convolved rates hit both targets.

    The first window width must keep a rate of at least ``primary_min``
    somewhere; the second must peak inside ``secondary_range``. If no budget
    qualifies, the rates of the last budget tried are reported with N = None.
    """
    if budgets is None:
        budgets = [float(v) for v in np.geomspace(1e2, 1e8, 241)]
    grid = list(budgets)
    if not grid:
        raise ValueError("budget grid is empty")
    staircase = reflection_staircase(cfg, t_values)
    primary = secondary = 0.0
    for budget in grid:
        rates = [
            _rate_for_mu(returned_mean_photons(budget, cfg.eta_R, r), cfg.eps).K
            for r in staircase
        ]
        primary = float(minimizing_convolution(t_values, rates, widths[0]).max())
        secondary = float(minimizing_convolution(t_values, rates, widths[1]).max())
        if primary >= primary_min and secondary_range[0] <= secondary <= secondary_range[1]:
            return ShutterCalibration(N=budget, best_primary=primary, best_secondary=secondary)
    return ShutterCalibration(N=None, best_primary=primary, best_secondary=secondary)
