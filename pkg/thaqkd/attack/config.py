"""Eve's attack parameters."""

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class AttackConfig:
    """Photon budget and circuit settings of a Gaussian Trojan-horse attack.

    Attributes:
        N: Mean photons Eve injects
        p: Fraction of the budget spent on squeezing
        phi: Angle between displacement and squeezing (radians)
        eta: Transmissivity of Alice's attenuator, in (0, 1]
        mu_T: Mean thermal photons Alice adds to the returning light
    """

    N: float
    p: float = 0.0
    phi: float = 0.0
    eta: float = 1.0
    mu_T: float = 0.0

    def __post_init__(self) -> None:
        if not math.isfinite(self.N) or self.N < 0:
            raise ValueError(f"N must be a non-negative photon number, got {self.N}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must be in [0, 1], got {self.p}")
        if not 0.0 < self.eta <= 1.0:
            raise ValueError(f"eta must be in (0, 1], got {self.eta}")
        if self.mu_T < 0:
            raise ValueError(f"mu_T must be non-negative, got {self.mu_T}")

    @property
    def omega(self) -> float:
        """Normalized squeezed quadrature variance cosh(arcsinh(2 sqrt(pN)))."""
        return math.cosh(math.asinh(2 * math.sqrt(self.p * self.N)))

    @property
    def xi_E(self) -> float:
        """Two-mode squeezing parameter with cosh(2 xi_E) = omega."""
        return math.asinh(2 * math.sqrt(self.p * self.N)) / 2

    @property
    def alpha(self) -> complex:
        """Displacement amplitude before the attenuator."""
        amplitude = math.sqrt((1 - self.p) * self.N)
        return complex(amplitude * math.cos(self.phi), amplitude * math.sin(self.phi))

    @property
    def mu_D(self) -> float:
        """Mean displacement photons after the attenuator, (1 - p) N eta."""
        return (1 - self.p) * self.N * self.eta
