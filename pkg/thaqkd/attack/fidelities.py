"""Fidelity between Eve's returned states, and the distinguishability it bounds."""

import math
from dataclasses import dataclass

from thaqkd.attack.config import AttackConfig
from thaqkd.attack.returned import build_returned_pair
from thaqkd.errors import NumericalError
from thaqkd.gaussian import fidelity


def closed_form_fidelity(omega: float, mu_D: float, mu_T: float, eta: float) -> float:
    """Closed-form fidelity of the tabulated returned pair.

    F = (sqrt(C) + |4 mu_T omega + 4 eta (1 + mu_T) - 1|) exp(-2 mu_D omega / B) / (4 B)
    with B = 2 mu_T omega + (1 + mu_T)(omega^2 + 1) eta and
    C = 16 eta^2 (1 + mu_T)^2 + 8 eta (1 + mu_T) omega (4 mu_T + omega) + (1 + 4 mu_T omega)^2.

    It matches the generic Gaussian fidelity of the tabulated states at
    omega = 1 whenever those states are physical; see closed_form_gap for
    the comparison elsewhere.

    Raises:
        ValueError: If an argument is outside its domain
        NumericalError: If B vanishes
    """
    if omega < 1:
        raise ValueError(f"omega must be at least 1, got {omega}")
    if mu_D < 0 or mu_T < 0:
        raise ValueError("mu_D and mu_T must be non-negative")
    if not 0.0 <= eta <= 1.0:
        raise ValueError(f"eta must be in [0, 1], got {eta}")
    b = 2 * mu_T * omega + (1 + mu_T) * (omega**2 + 1) * eta
    if b == 0:
        raise NumericalError("closed_form_fidelity", "B vanishes")
    c = (
        16 * eta**2 * (1 + mu_T) ** 2
        + 8 * eta * (1 + mu_T) * omega * (4 * mu_T + omega)
        + (1 + 4 * mu_T * omega) ** 2
    )
    tail = abs(4 * mu_T * omega + 4 * eta * (1 + mu_T) - 1)
    return (math.sqrt(c) + tail) * math.exp(-2 * mu_D * omega / b) / (4 * b)


def simplified_fidelity(mu_D: float, mu_T: float) -> float:
    """Fidelity of the coherent-state attack, exp(-mu_D / (1 + 2 mu_T)).

    Examples:
        >>> round(simplified_fidelity(0.1, 0.0), 6)
        0.904837
    """
    if mu_D < 0 or mu_T < 0:
        raise ValueError("mu_D and mu_T must be non-negative")
    return math.exp(-mu_D / (1 + 2 * mu_T))


def distinguishability(f: float) -> float:
    """Upper bound (1 - F) / 2 on how well Eve tells the two settings apart."""
    if not 0.0 <= f <= 1.0:
        raise ValueError(f"fidelity must be in [0, 1], got {f}")
    return (1 - f) / 2


@dataclass(frozen=True)
class ClosedFormGap:
    """Side-by-side fidelities for one attack configuration.

    Attributes:
        closed_form: closed_form_fidelity at the configuration
        tabulated: Generic fidelity of the tabulated states, or None when
            those states violate the uncertainty relation
        simplified: simplified_fidelity(mu_D, mu_T)
        circuit: Generic fidelity of the physical circuit with additive noise
    """

    closed_form: float
    tabulated: float | None
    simplified: float
    circuit: float

    @property
    def tabulated_physical(self) -> bool:
        return self.tabulated is not None

    @property
    def gap(self) -> float | None:
        """|closed_form - tabulated|, or None for non-physical tabulated states."""
        if self.tabulated is None:
            return None
        return abs(self.closed_form - self.tabulated)


def closed_form_gap(cfg: AttackConfig) -> ClosedFormGap:
    """Evaluate every fidelity the toolkit knows for one configuration."""
    tabulated_pair = build_returned_pair(cfg, variant="paper_exact")
    tabulated = None
    if tabulated_pair.physical:
        tabulated = fidelity(tabulated_pair.state_0, tabulated_pair.state_quarter)
    circuit_pair = build_returned_pair(cfg)
    return ClosedFormGap(
        closed_form=closed_form_fidelity(cfg.omega, cfg.mu_D, cfg.mu_T, cfg.eta),
        tabulated=tabulated,
        simplified=simplified_fidelity(cfg.mu_D, cfg.mu_T),
        circuit=fidelity(circuit_pair.state_0, circuit_pair.state_quarter),
    )
