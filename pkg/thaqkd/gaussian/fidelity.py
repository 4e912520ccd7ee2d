"""Uhlmann fidelity between arbitrary Gaussian states.

The closed formula works in the convention where the vacuum covariance is
I/2 and quadratures are (a + a†)/sqrt(2). States are stored with vacuum
covariance I, so covariances are halved and means divided by sqrt(2) before
the formula is applied.
"""

import math

import numpy as np

from thaqkd.errors import NumericalError
from thaqkd.gaussian.state import GaussianState, min_physical_eigenvalue, symplectic_form

MAX_CONDITION = 1e12
EIGENVALUE_CLIP = 1e-9


def fidelity(first: GaussianState, second: GaussianState) -> float:
    """Fidelity Tr sqrt(sqrt(rho1) rho2 sqrt(rho1)) of two Gaussian states.

    Args:
        first: First state
        second: Second state with the same number of modes

    Returns:
        Fidelity in [0, 1]

    Raises:
        ValueError: If the mode counts differ or either state is non-physical
        NumericalError: If V1 + V2 is too ill-conditioned to invert, or the
            auxiliary spectrum is inconsistent with two physical states

    Examples:
        >>> from thaqkd.gaussian.operations import coherent
        >>> round(fidelity(coherent(1), coherent(1j)), 6)
        0.367879
    """
    if first.n_modes != second.n_modes:
        raise ValueError(
            f"fidelity needs equal mode counts, got {first.n_modes} and {second.n_modes}"
        )
    for label, state in (("first", first), ("second", second)):
        lowest = min_physical_eigenvalue(state)
        if lowest < -1e-9:
            raise ValueError(
                f"{label} state is not physical (cov + iΩ has eigenvalue {lowest:.3g})"
            )

    n = first.n_modes
    v1 = first.cov / 2
    v2 = second.cov / 2
    du = (first.mean - second.mean) / math.sqrt(2)
    vsum = v1 + v2

    condition = float(np.linalg.cond(vsum))
    if not math.isfinite(condition) or condition > MAX_CONDITION:
        raise NumericalError("fidelity", f"V1 + V2 is ill-conditioned (cond={condition:.3g})")
    vsum_inv = np.linalg.inv(vsum)

    omega = symplectic_form(n)
    w = -2j * omega.T @ vsum_inv @ (omega / 4 + v2 @ omega @ v1) @ omega
    spectrum = np.sort(np.linalg.eigvals(w).real)[::-1][:n]

    prefactor = 1.0
    for wk in spectrum:
        value = float(wk)
        if value < 1.0:
            if value < 1.0 - EIGENVALUE_CLIP:
                raise NumericalError("fidelity", f"auxiliary eigenvalue {value:.12g} below 1")
            value = 1.0
        prefactor *= math.sqrt(value + math.sqrt(value * value - 1.0))

    det = float(np.linalg.det(vsum))
    exponent = -0.25 * float(du @ vsum_inv @ du)
    result = prefactor / det**0.25 * math.exp(exponent)
    return min(max(result, 0.0), 1.0)
