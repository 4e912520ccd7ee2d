"""Asymptotic BB84 key rates with a side-channel penalty."""

import math
from dataclasses import dataclass


def binary_entropy(x: float) -> float:
    """Binary entropy H2(x) in bits, with H2(0) = H2(1) = 0.

    Raises:
        ValueError: If x is outside [0, 1]
    """
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"probability must be in [0, 1], got {x}")
    if x in (0.0, 1.0):
        return 0.0
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


def effective_error(eps: float, delta: float) -> float:
    """Error rate inflated by the distinguishability delta, clamped to [0, 1].

    eps + 4 delta (1 - delta)(1 - 2 eps) + 4 (1 - 2 delta) sqrt(delta (1 - delta) eps (1 - eps))

    The value is not capped at 1/2: it reaches 1 at eps = 0, delta = 1/2.
    secret_key_rate caps it at 1/2 only where it enters the entropy.

    Raises:
        ValueError: If eps is outside [0, 1] or delta outside [0, 1/2]
    """
    if not 0.0 <= eps <= 1.0:
        raise ValueError(f"error rate must be in [0, 1], got {eps}")
    if not 0.0 <= delta <= 0.5:
        raise ValueError(f"distinguishability must be in [0, 0.5], got {delta}")
    value = (
        eps
        + 4 * delta * (1 - delta) * (1 - 2 * eps)
        + 4 * (1 - 2 * delta) * math.sqrt(delta * (1 - delta) * eps * (1 - eps))
    )
    return min(max(value, 0.0), 1.0)


@dataclass(frozen=True)
class KeyRateResult:
    """Secret key rate and the quantities it was assembled from.

    Attributes:
        K: Secret bits per channel use, never negative
        K_raw: Rate before clamping at zero
        eps: Bit-error rate
        eps_tilde: Effective error rate (uncapped; H2 sees min(eps_tilde, 1/2))
        delta_used: delta / p_succ, capped at 1/2
        p_succ: Probability Bob registers a valid bit
        saturated: True when delta / p_succ reached 1/2
    """

    K: float
    K_raw: float
    eps: float
    eps_tilde: float
    delta_used: float
    p_succ: float
    saturated: bool


def secret_key_rate(p_succ: float, eps: float, delta: float) -> KeyRateResult:
    """Key rate p_succ [1 - H2(eps) - H2(eps_tilde(eps, delta / p_succ))].

    Discarded signals may have been picked by Eve, so delta is rescaled by
    1 / p_succ; beyond 1/2 it saturates and the result is flagged. An
    effective error above 1/2 carries no more information than 1/2 does, so
    the entropy penalty is evaluated at min(eps_tilde, 1/2). The result still
    reports eps_tilde uncapped.

    At saturation (delta / p_succ >= 1/2, eps = 0) the capped penalty is a
    full bit, so K_raw = 0 and K = 0. Uncapped, the same point would give
    H2(1) = 0 and K_raw = p_succ.

    Raises:
        ValueError: If a probability is out of range
    """
    if not 0.0 <= p_succ <= 1.0:
        raise ValueError(f"p_succ must be in [0, 1], got {p_succ}")
    if not 0.0 <= delta <= 0.5:
        raise ValueError(f"distinguishability must be in [0, 0.5], got {delta}")
    if p_succ == 0.0:
        return KeyRateResult(0.0, 0.0, eps, effective_error(eps, 0.5), 0.5, 0.0, True)

    scaled = delta / p_succ
    saturated = scaled >= 0.5
    delta_used = min(scaled, 0.5)
    eps_tilde = effective_error(eps, delta_used)
    k_raw = p_succ * (1 - binary_entropy(eps) - binary_entropy(min(eps_tilde, 0.5)))
    return KeyRateResult(
        K=max(k_raw, 0.0),
        K_raw=k_raw,
        eps=eps,
        eps_tilde=eps_tilde,
        delta_used=delta_used,
        p_succ=p_succ,
        saturated=saturated,
    )


def vanilla_key_rate(rate: float, eps: float) -> float:
    """Plain BB84 rate R [1 - 2 H2(eps)], clamped at zero."""
    if rate < 0:
        raise ValueError(f"raw rate must be non-negative, got {rate}")
    return max(rate * (1 - 2 * binary_entropy(eps)), 0.0)
