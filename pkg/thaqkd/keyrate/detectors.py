"""Bob's detection statistics when Alice's thermal noise reaches him.

The signal photon lands in the correct detector with probability T(1 - Q),
in the wrong one with probability TQ and is lost with probability 1 - T.
Each detector also sees a thermal field with mean mu_tilde = T mu_T / 2.
A bit is valid when exactly one detector clicks.
"""

import math
from dataclasses import dataclass
from typing import Literal

DetectorKind = Literal["bucket", "pnrd"]


@dataclass(frozen=True)
class ChannelModel:
    """Fibre between Alice and Bob.

    Attributes:
        L: Distance in km
        L0: Attenuation length in km
        L_Q: Length over which stored qubits dephase, c times the memory lifetime
    """

    L: float
    L0: float = 25.0
    L_Q: float = 2.99792458

    def __post_init__(self) -> None:
        if self.L < 0:
            raise ValueError(f"distance must be non-negative, got {self.L}")
        if self.L0 <= 0:
            raise ValueError(f"L0 must be positive, got {self.L0}")
        if self.L_Q <= 0:
            raise ValueError(f"L_Q must be positive, got {self.L_Q}")

    @property
    def T(self) -> float:
        """Transmissivity exp(-L / L0)."""
        return math.exp(-self.L / self.L0)

    @property
    def Q(self) -> float:
        """Bit-flip probability without noise, (1 - exp(-L / L_Q)) / 2."""
        return (1 - math.exp(-self.L / self.L_Q)) / 2

    @classmethod
    def from_memory_lifetime(
        cls, L: float, L0: float, tau_us: float, light_speed_km_per_us: float = 0.299792458
    ) -> "ChannelModel":
        """Channel whose dephasing length is c tau."""
        if tau_us <= 0:
            raise ValueError(f"memory lifetime must be positive, got {tau_us}")
        return cls(L=L, L0=L0, L_Q=light_speed_km_per_us * tau_us)


@dataclass(frozen=True)
class DetectionStats:
    """Probability of a valid bit and its error rate."""

    p_succ: float
    eps: float
    detector_kind: DetectorKind


def _check(mu_T: float, T: float, Q: float) -> None:
    if mu_T < 0:
        raise ValueError(f"mu_T must be non-negative, got {mu_T}")
    if not 0.0 < T <= 1.0:
        raise ValueError(f"T must be in (0, 1], got {T}")
    if not 0.0 <= Q <= 0.5:
        raise ValueError(f"Q must be in [0, 0.5], got {Q}")


def bucket_stats(mu_T: float, T: float, Q: float) -> DetectionStats:
    """Closed-form statistics for click/no-click detectors.

    Examples:
        >>> stats = bucket_stats(2.0, 0.5, 0.1)
        >>> round(stats.p_succ, 6), round(stats.eps, 6)
        (0.555556, 0.26)
    """
    _check(mu_T, T, Q)
    p_succ = 2 * T * (2 + 2 * mu_T - T * mu_T) / (2 + T * mu_T) ** 2
    eps = (2 * Q + mu_T * (1 - T + Q * T)) / (2 + mu_T * (2 - T))
    return DetectionStats(p_succ=p_succ, eps=eps, detector_kind="bucket")


def _silent(mu_tilde: float) -> float:
    """Probability a detector sees no noise photon."""
    return 1 / (mu_tilde + 1)


def _noise_click(mu_tilde: float) -> float:
    """Probability the other detector stays silent while this one gets noise."""
    return mu_tilde / (mu_tilde + 1) ** 2


def bucket_stats_from_sums(mu_T: float, T: float, Q: float) -> DetectionStats:
    """Bucket statistics assembled from the per-outcome probabilities.

    A valid bit arises when the signal fires one detector and the other sees
    no noise, or when the signal is lost and noise fires exactly one detector.
    """
    _check(mu_T, T, Q)
    mu_tilde = T * mu_T / 2
    right, wrong, lost = T * (1 - Q), T * Q, 1 - T
    silent, noise = _silent(mu_tilde), _noise_click(mu_tilde)
    p_succ = right * silent + wrong * silent + lost * noise + lost * noise
    eps = (wrong * silent + lost * noise) / p_succ
    return DetectionStats(p_succ=p_succ, eps=eps, detector_kind="bucket")


def pnrd_stats(mu_T: float, T: float, Q: float) -> DetectionStats:
    """Statistics for photon-number-resolving detectors.

    Only a total of exactly one photon across both detectors counts: either
    the signal with no noise anywhere, or a lost signal with exactly one
    noise photon.
    """
    _check(mu_T, T, Q)
    mu_tilde = T * mu_T / 2
    right, wrong, lost = T * (1 - Q), T * Q, 1 - T
    none_both = 1 / (mu_tilde + 1) ** 2
    single = mu_tilde / (mu_tilde + 1) ** 3
    p_succ = (right + wrong) * none_both + 2 * lost * single
    eps = (wrong * none_both + lost * single) / p_succ
    return DetectionStats(p_succ=p_succ, eps=eps, detector_kind="pnrd")


def detection_stats(kind: DetectorKind, mu_T: float, T: float, Q: float) -> DetectionStats:
    """Dispatch on the detector kind."""
    if kind == "bucket":
        return bucket_stats(mu_T, T, Q)
    if kind == "pnrd":
        return pnrd_stats(mu_T, T, Q)
    raise ValueError(f"unknown detector kind: {kind!r}")
