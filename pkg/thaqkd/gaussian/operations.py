"""Gaussian channels and unitaries used to build attack states.

Every function returns a new GaussianState; inputs are never modified.
Symplectic maps act as mean -> S @ mean and cov -> S @ cov @ S.T.
"""

import math
from collections.abc import Sequence

import numpy as np

from thaqkd.gaussian.state import FloatArray, GaussianState, vacuum


def _apply_symplectic(state: GaussianState, s: FloatArray) -> GaussianState:
    return GaussianState(state.n_modes, s @ state.mean, s @ state.cov @ s.T)


def displace(state: GaussianState, mode: int, alpha: complex) -> GaussianState:
    """Apply the displacement D(alpha) to one mode.

    Args:
        state: Input state
        mode: Mode index
        alpha: Complex displacement amplitude

    Returns:
        State with mean[x] += 2 Re(alpha) and mean[p] += 2 Im(alpha)
    """
    mean = state.mean.copy()
    mean[state.x_index(mode)] += 2 * alpha.real
    mean[state.p_index(mode)] += 2 * alpha.imag
    return GaussianState(state.n_modes, mean, state.cov)


def phase_rotate(state: GaussianState, mode: int, theta: float) -> GaussianState:
    """Apply the phase shift exp(i theta a†a) to one mode (alpha -> e^{i theta} alpha)."""
    x, p = state.x_index(mode), state.p_index(mode)
    s = np.eye(2 * state.n_modes)
    c, sn = math.cos(theta), math.sin(theta)
    s[x, x], s[x, p] = c, -sn
    s[p, x], s[p, p] = sn, c
    return _apply_symplectic(state, s)


def two_mode_squeeze(state: GaussianState, modes: tuple[int, int], xi: float) -> GaussianState:
    """Apply the two-mode squeezer exp(xi (a†b† - ab)) with real xi.

    Args:
        state: Input state
        modes: Pair (i, j) of distinct mode indices
        xi: Squeezing parameter

    Raises:
        ValueError: If i == j or either index is out of range
    """
    i, j = modes
    if i == j:
        raise ValueError("two_mode_squeeze needs two distinct modes")
    xa, xb = state.x_index(i), state.x_index(j)
    pa, pb = state.p_index(i), state.p_index(j)
    ch, sh = math.cosh(xi), math.sinh(xi)
    s = np.eye(2 * state.n_modes)
    s[xa, xa], s[xa, xb] = ch, sh
    s[xb, xa], s[xb, xb] = sh, ch
    s[pa, pa], s[pa, pb] = ch, -sh
    s[pb, pa], s[pb, pb] = -sh, ch
    return _apply_symplectic(state, s)


def pure_loss(state: GaussianState, mode: int, eta: float) -> GaussianState:
    """Send one mode through a beam splitter of transmissivity eta with vacuum.

    Raises:
        ValueError: If eta is outside [0, 1]
    """
    if not 0.0 <= eta <= 1.0:
        raise ValueError(f"transmissivity must be in [0, 1], got {eta}")
    x, p = state.x_index(mode), state.p_index(mode)
    scale = np.ones(2 * state.n_modes)
    scale[[x, p]] = math.sqrt(eta)
    noise = np.zeros(2 * state.n_modes)
    noise[[x, p]] = 1.0 - eta
    cov = scale[:, None] * state.cov * scale[None, :] + np.diag(noise)
    return GaussianState(state.n_modes, scale * state.mean, cov)


def add_thermal_additive(state: GaussianState, mode: int, mu_t: float) -> GaussianState:
    """Add classical Gaussian noise worth mu_t thermal photons to one mode.

    cov gains 2 mu_t on the mode's diagonal block; the mean is untouched.

    Raises:
        ValueError: If mu_t is negative
    """
    if mu_t < 0:
        raise ValueError(f"thermal photon number must be non-negative, got {mu_t}")
    x, p = state.x_index(mode), state.p_index(mode)
    cov = state.cov.copy()
    cov[x, x] += 2 * mu_t
    cov[p, p] += 2 * mu_t
    return GaussianState(state.n_modes, state.mean, cov)


def add_thermal_tms(state: GaussianState, mode: int, mu_t: float) -> GaussianState:
    """Mix in thermal noise by two-mode squeezing with a vacuum ancilla.

    The ancilla is traced out afterwards. Unlike add_thermal_additive this
    amplifies the mode's mean by cosh(arcsinh(sqrt(mu_t))).

    Raises:
        ValueError: If mu_t is negative
    """
    if mu_t < 0:
        raise ValueError(f"thermal photon number must be non-negative, got {mu_t}")
    state.x_index(mode)
    n = state.n_modes
    widened = tensor(state, vacuum(1))
    squeezed = two_mode_squeeze(widened, (mode, n), math.asinh(math.sqrt(mu_t)))
    return partial_trace(squeezed, range(n))


def tensor(first: GaussianState, second: GaussianState) -> GaussianState:
    """Product state with first's modes followed by second's modes."""
    n1, n2 = first.n_modes, second.n_modes
    n = n1 + n2
    order1 = list(range(n1)) + [n + k for k in range(n1)]
    order2 = [n1 + k for k in range(n2)] + [n + n1 + k for k in range(n2)]
    mean = np.zeros(2 * n)
    cov = np.zeros((2 * n, 2 * n))
    mean[order1] = first.mean
    mean[order2] = second.mean
    cov[np.ix_(order1, order1)] = first.cov
    cov[np.ix_(order2, order2)] = second.cov
    return GaussianState(n, mean, cov)


def partial_trace(state: GaussianState, keep: Sequence[int] | range) -> GaussianState:
    """Discard every mode not listed in keep.

    Kept modes are renumbered 0..k-1 in ascending order of their old index.

    Raises:
        ValueError: If keep is empty or names an unknown mode
    """
    kept = sorted(set(keep))
    if not kept:
        raise ValueError("partial_trace needs at least one mode to keep")
    for mode in kept:
        state.x_index(mode)
    idx = kept + [state.n_modes + m for m in kept]
    return GaussianState(len(kept), state.mean[idx], state.cov[np.ix_(idx, idx)])


def mean_photons(state: GaussianState, mode: int) -> float:
    """Mean photon number <a†a> of one mode."""
    x, p = state.x_index(mode), state.p_index(mode)
    second = state.cov[x, x] + state.cov[p, p] + state.mean[x] ** 2 + state.mean[p] ** 2
    return float(second / 4 - 0.5)


def coherent(alpha: complex) -> GaussianState:
    """Single-mode coherent state |alpha>."""
    return displace(vacuum(1), 0, alpha)


def thermal(mu_t: float) -> GaussianState:
    """Single-mode thermal state with mean photon number mu_t."""
    return add_thermal_additive(vacuum(1), 0, mu_t)
