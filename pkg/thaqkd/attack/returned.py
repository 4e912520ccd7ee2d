"""The two states Eve gets back for Alice's phase settings 0 and pi/2.

Mode 0 is the signal that passed through Alice's device, mode 1 is Eve's
idler. The idler is never displaced: a displacement on it is a local
unitary Eve can undo and so carries no information.
"""

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from thaqkd.attack.config import AttackConfig
from thaqkd.gaussian import (
    GaussianState,
    add_thermal_additive,
    add_thermal_tms,
    displace,
    is_physical,
    mean_photons,
    phase_rotate,
    pure_loss,
    two_mode_squeeze,
    vacuum,
)

Variant = Literal["physical", "paper_exact", "tabulated"]
Noise = Literal["additive", "tms"]

BUDGET_TOL = 1e-9


@dataclass(frozen=True)
class ReturnedPair:
    """Returned states for theta = 0 and theta = pi/2."""

    state_0: GaussianState
    state_quarter: GaussianState

    @property
    def physical(self) -> bool:
        return is_physical(self.state_0) and is_physical(self.state_quarter)


def _physical_state(cfg: AttackConfig, theta: float, noise: Noise) -> GaussianState:
    state = two_mode_squeeze(vacuum(2), (0, 1), cfg.xi_E)
    state = displace(state, 0, cfg.alpha)
    state = pure_loss(state, 0, cfg.eta)
    state = phase_rotate(state, 0, theta)
    if noise == "additive":
        return add_thermal_additive(state, 0, cfg.mu_T)
    return add_thermal_tms(state, 0, cfg.mu_T)


def _xpxp_to_xxpp(values: list[float]) -> list[float]:
    return [values[0], values[2], values[1], values[3]]


def _literal_state(cfg: AttackConfig, quarter: bool) -> GaussianState:
    """Mean and covariance exactly as tabulated for the attack, vacuum variance 1."""
    omega, mu_t, eta = cfg.omega, cfg.mu_T, cfg.eta
    s = (1 + mu_t) * omega * eta + mu_t
    a = math.sqrt((1 + mu_t) * (omega**2 - 1) * eta)
    r = math.sqrt(2 * cfg.mu_D)
    sin, cos = math.sin(cfg.phi), math.cos(cfg.phi)
    if quarter:
        mean = [(cos - sin) * r, (cos + sin) * r, 0.0, 0.0]
    else:
        mean = [(sin + cos) * r, (sin - cos) * r, 0.0, 0.0]

    # xxpp blocks: sigma_Z couples x with x and p with -p; sigma_X swaps x and p.
    cov = np.diag([s, omega, s, omega])
    if quarter:
        cov[0, 3] = cov[3, 0] = a
        cov[2, 1] = cov[1, 2] = a
    else:
        cov[0, 1] = cov[1, 0] = a
        cov[2, 3] = cov[3, 2] = -a
    return GaussianState(2, _xpxp_to_xxpp(mean), cov)


def build_returned_pair(
    cfg: AttackConfig,
    variant: Variant = "physical",
    noise: Noise = "additive",
) -> ReturnedPair:
    """Build Eve's two returned states.

    Args:
        cfg: Attack parameters
        variant: "physical" runs the circuit (two-mode squeeze, displace,
            attenuate, encode the phase, add noise); "paper_exact" emits
            the tabulated moments unchanged, which need not be physical;
            "tabulated" is an alias for it
        noise: Thermal channel of the physical variant, "additive" or "tms"

    Raises:
        ValueError: For an unknown variant or noise model
    """
    if variant == "physical":
        if noise not in ("additive", "tms"):
            raise ValueError(f"unknown noise model: {noise!r}")
        return ReturnedPair(
            _physical_state(cfg, 0.0, noise), _physical_state(cfg, math.pi / 2, noise)
        )
    if variant in ("paper_exact", "tabulated"):
        return ReturnedPair(_literal_state(cfg, False), _literal_state(cfg, True))
    raise ValueError(f"unknown variant: {variant!r}")


@dataclass(frozen=True)
class BudgetAudit:
    """How many photons the physical circuit really puts into the signal mode.

    Attributes:
        budget: The nominal N
        squeezing_photons: sinh^2(xi_E) from the two-mode squeezer
        displacement_photons: |alpha|^2
        actual: Mean photons of the signal mode before the attenuator
        mismatch: p N - squeezing_photons; zero only when p N = 0
    """

    budget: float
    squeezing_photons: float
    displacement_photons: float
    actual: float
    mismatch: float

    @property
    def consistent(self) -> bool:
        return abs(self.mismatch) <= BUDGET_TOL * max(1.0, self.budget)


def budget_audit(cfg: AttackConfig) -> BudgetAudit:
    """Compare the nominal photon split with the photons actually injected."""
    state = displace(two_mode_squeeze(vacuum(2), (0, 1), cfg.xi_E), 0, cfg.alpha)
    squeezing = (cfg.omega - 1) / 2
    return BudgetAudit(
        budget=cfg.N,
        squeezing_photons=squeezing,
        displacement_photons=abs(cfg.alpha) ** 2,
        actual=mean_photons(state, 0),
        mismatch=cfg.p * cfg.N - squeezing,
    )
