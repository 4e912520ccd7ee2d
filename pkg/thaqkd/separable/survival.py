"""Numerical checks of the low-photon survival probability.

Light with mean photon number <n> that crosses an attenuator of
transmissivity eta keeps at most two photons with probability at least
exp(-eta <n>). The checks below evaluate both sides on concrete states.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from thaqkd.fock.density import (
    FockDensityMatrix,
    attenuate_kraus,
    diagonal_fock,
    photon_statistics,
)

SURVIVAL_TOL = 1e-10
SURVIVAL_CUTOFF = 20


@dataclass(frozen=True)
class SurvivalCheck:
    """Both sides of the survival inequality for one state.

    Attributes:
        lhs: Population of 0, 1 and 2 photons after attenuation
        rhs: exp(-eta <n>)
        finite_rhs: (1 - eta)^<n>, the weaker bound before the large-<n> limit
    """

    lhs: float
    rhs: float
    finite_rhs: float

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs - SURVIVAL_TOL

    @property
    def margin(self) -> float:
        return self.lhs - self.rhs


def survival_bound_check(rho: FockDensityMatrix, eta: float) -> SurvivalCheck:
    """Compare the survival probability of a single-mode state with exp(-eta <n>).

    Raises:
        ValueError: For a multimode state or eta outside [0, 1]
    """
    if rho.n_modes != 1:
        raise ValueError("survival_bound_check needs a single-mode state")
    mean = photon_statistics(rho).mean
    attenuated = photon_statistics(attenuate_kraus(rho, eta))
    return SurvivalCheck(
        lhs=float(np.sum(attenuated.diagonal[:3])),
        rhs=math.exp(-eta * mean),
        finite_rhs=(1 - eta) ** mean,
    )


def bimodal_inequality_check(y: float, p: float) -> float:
    """f(p) = -y^p + p y - p + 1, which is non-negative on [0, 1]^2.

    At y = 0 the limit 1 - p is used for p > 0 and 0 for p = 0.

    Examples:
        >>> round(bimodal_inequality_check(0.5, 0.5), 6)
        0.042893
    """
    if not 0.0 <= y <= 1.0 or not 0.0 <= p <= 1.0:
        raise ValueError(f"y and p must lie in [0, 1], got y={y}, p={p}")
    if y == 0.0:
        return 0.0 if p == 0.0 else 1 - p
    return -(y**p) + p * y - p + 1


@dataclass
class SurvivalAudit:
    """Outcome of a seeded batch of survival checks."""

    seed: int
    cutoff: int
    checks: list[SurvivalCheck] = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(1 for check in self.checks if not check.holds)

    @property
    def worst_margin(self) -> float:
        return min((check.margin for check in self.checks), default=0.0)


def survival_audit(
    seed: int,
    count: int = 1000,
    cutoff: int = SURVIVAL_CUTOFF,
    eta_range: tuple[float, float] = (1e-4, 0.1),
) -> SurvivalAudit:
    """Check random diagonal states with log-uniform transmissivities.

    Every state draws from its own generator spawned off ``seed``.
    """
    lo, hi = eta_range
    if not 0.0 < lo <= hi <= 1.0:
        raise ValueError(f"invalid eta range {eta_range}")
    audit = SurvivalAudit(seed=seed, cutoff=cutoff)
    for child in np.random.SeedSequence(seed).spawn(count):
        rng = np.random.default_rng(child)
        probabilities = rng.dirichlet(np.ones(cutoff + 1))
        eta = float(math.exp(rng.uniform(math.log(lo), math.log(hi))))
        audit.checks.append(survival_bound_check(diagonal_fock(probabilities, cutoff), eta))
    return audit
