"""Distinguishability bound for arbitrary separable attack states.

After the attenuator Eve's light is split into the part with at most two
photons and the rest. The rest is assumed to reveal Alice's setting
completely; it carries weight at most 1 - exp(-mu). The low-photon part is
a 3x3 matrix whose only unknown, the |0><2| coherence beta, is set to the
largest value positivity allows.
"""

import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from thaqkd.fock.density import matrix_fidelity

FloatArray = npt.NDArray[np.float64]

PSD_TOL = 1e-10
MU_MAX = 2.0


def beta_max(mu: float) -> float:
    """Largest coherence keeping the low-photon block positive, sqrt(mu (2 - mu)) / 2."""
    if not 0.0 <= mu <= MU_MAX:
        raise ValueError(f"mu must be in [0, 2], got {mu}")
    return math.sqrt(mu * (2 - mu)) / 2


@dataclass(frozen=True)
class SubspaceState:
    """Returned state restricted to |0>, |1>, |2>.

    Attributes:
        matrix: 3x3 real symmetric block
        mu: Mean photons Eve gets back
        eta: Attenuator transmissivity
        alpha_term: v + <n>^2 + <n> of Eve's input, v = <n^2> - <n>
        beta: |0><2| coherence, negated for the pi/2 setting
    """

    matrix: FloatArray
    mu: float
    eta: float
    alpha_term: float
    beta: float

    @property
    def min_eigenvalue(self) -> float:
        return float(np.min(np.linalg.eigvalsh(self.matrix)))


def rho_sub(
    mu: float, eta: float, alpha_term: float, beta: float, quarter: bool = False
) -> SubspaceState:
    """Build the low-photon block for setting 0 (or pi/2 with ``quarter``).

    Raises:
        ValueError: If the block is not positive semi-definite
    """
    second = eta**2 * alpha_term
    coherence = -beta if quarter else beta
    matrix = np.array(
        [
            [1 - mu + second / 2, 0.0, coherence],
            [0.0, mu - second, 0.0],
            [coherence, 0.0, second / 2],
        ]
    )
    state = SubspaceState(matrix=matrix, mu=mu, eta=eta, alpha_term=alpha_term, beta=coherence)
    lowest = state.min_eigenvalue
    if lowest < -PSD_TOL:
        raise ValueError(
            f"low-photon block is not positive semi-definite (eigenvalue {lowest:.3g})"
        )
    return state


def worst_case_rho_sub(mu: float, quarter: bool = False, eta: float = 1.0) -> SubspaceState:
    """Low-photon block with an empty |1> population and maximal coherence."""
    return rho_sub(mu, eta, mu / eta**2, beta_max(mu), quarter)


def separable_delta_bound(mu: float) -> float:
    """Closed-form bound (1 - exp(-mu) sqrt(1 - 3 mu (2 - mu) / 4)) / 2.

    Examples:
        >>> round(separable_delta_bound(1.0), 6)
        0.40803
    """
    if not 0.0 <= mu <= MU_MAX:
        raise ValueError(f"mu must be in [0, 2], got {mu}")
    return (1 - math.exp(-mu) * math.sqrt(1 - 3 * mu * (2 - mu) / 4)) / 2


def lucamarini_delta(mu: float) -> float:
    """Coherent-state distinguishability (1 - exp(-mu) cos(mu)) / 2, clamped to [0, 1/2]."""
    if mu < 0:
        raise ValueError(f"mu must be non-negative, got {mu}")
    return min(max((1 - math.exp(-mu) * math.cos(mu)) / 2, 0.0), 0.5)


def returned_matrix(mu: float, quarter: bool) -> FloatArray:
    """Worst-case returned state on |0>, |1>, |2> plus two orthogonal flags.

    The flags stand for the many-photon outcome, which reveals the setting:
    index 3 for setting 0 and index 4 for pi/2.
    """
    survive = math.exp(-mu)
    matrix = np.zeros((5, 5))
    matrix[:3, :3] = survive * worst_case_rho_sub(mu, quarter).matrix
    flag = 4 if quarter else 3
    matrix[flag, flag] = 1 - survive
    return matrix


@dataclass(frozen=True)
class ConstructiveBound:
    """Distinguishability of the explicitly built worst-case pair.

    Attributes:
        mu: Mean returned photons
        delta: (1 - F) / 2 of the built pair
        closed_form: separable_delta_bound(mu)
    """

    mu: float
    delta: float
    closed_form: float

    @property
    def gap(self) -> float:
        """closed_form - delta; negative when the built pair exceeds the closed form."""
        return self.closed_form - self.delta


def constructive_delta(mu: float) -> ConstructiveBound:
    """Build the worst-case returned pair and measure its distinguishability.

    The two low-photon blocks are pure with overlap |1 - mu|, so the built
    pair gives (1 - exp(-mu) |1 - mu|) / 2.
    """
    f = matrix_fidelity(returned_matrix(mu, False), returned_matrix(mu, True))
    return ConstructiveBound(mu=mu, delta=(1 - f) / 2, closed_form=separable_delta_bound(mu))
