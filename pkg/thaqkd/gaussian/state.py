"""Gaussian state representation in the xxpp quadrature ordering.

Convention: x = a + a†, p = -i(a - a†), so the vacuum has mean 0 and
covariance equal to the identity. A state on n modes stores its mean vector
as [x_1 .. x_n, p_1 .. p_n] and its covariance in the same ordering.
"""

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

FloatArray = npt.NDArray[np.float64]

SYMMETRY_RTOL = 1e-12
PHYSICALITY_TOL = 1e-9


@dataclass(frozen=True)
class SymplecticForm:
    """The symplectic form [[0, I], [-I, 0]] for n modes in xxpp ordering."""

    n_modes: int

    def __post_init__(self) -> None:
        if self.n_modes < 1:
            raise ValueError(f"n_modes must be positive, got {self.n_modes}")

    @property
    def matrix(self) -> FloatArray:
        n = self.n_modes
        eye = np.eye(n)
        zero = np.zeros((n, n))
        return np.block([[zero, eye], [-eye, zero]])


@dataclass(frozen=True)
class GaussianState:
    """Mean vector and covariance matrix of an n-mode Gaussian state.

    Arrays are copied on construction and made read-only, so a state never
    changes after it is built. Physicality is not enforced here because some
    callers deliberately build matrices as printed in the literature; use
    is_physical() where it matters.

    Attributes:
        n_modes: Number of bosonic modes
        mean: Length-2n mean vector
        cov: 2n x 2n symmetric covariance matrix
    """

    n_modes: int
    mean: FloatArray
    cov: FloatArray

    def __post_init__(self) -> None:
        if self.n_modes < 1:
            raise ValueError(f"n_modes must be positive, got {self.n_modes}")
        dim = 2 * self.n_modes
        mean = np.array(self.mean, dtype=np.float64).reshape(-1)
        cov = np.array(self.cov, dtype=np.float64)
        if mean.shape != (dim,):
            raise ValueError(f"mean must have length {dim}, got shape {mean.shape}")
        if cov.shape != (dim, dim):
            raise ValueError(f"cov must be {dim}x{dim}, got shape {cov.shape}")
        scale = max(1.0, float(np.max(np.abs(cov))))
        if float(np.max(np.abs(cov - cov.T))) > SYMMETRY_RTOL * scale:
            raise ValueError("cov is not symmetric")
        cov = (cov + cov.T) / 2
        mean.flags.writeable = False
        cov.flags.writeable = False
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "cov", cov)

    def x_index(self, mode: int) -> int:
        self._check_mode(mode)
        return mode

    def p_index(self, mode: int) -> int:
        self._check_mode(mode)
        return self.n_modes + mode

    def _check_mode(self, mode: int) -> None:
        if not 0 <= mode < self.n_modes:
            raise ValueError(f"mode {mode} out of range for {self.n_modes}-mode state")


def symplectic_form(n_modes: int) -> FloatArray:
    """Return the 2n x 2n symplectic form matrix for n modes."""
    return SymplecticForm(n_modes).matrix


def vacuum(n: int) -> GaussianState:
    """Build the n-mode vacuum.

    Args:
        n: Number of modes (must be >= 1)

    Returns:
        State with zero mean and identity covariance

    Raises:
        ValueError: If n < 1
    """
    if n < 1:
        raise ValueError(f"vacuum needs at least one mode, got {n}")
    return GaussianState(n, np.zeros(2 * n), np.eye(2 * n))


def min_physical_eigenvalue(state: GaussianState) -> float:
    """Smallest eigenvalue of cov + iΩ (non-negative for physical states)."""
    omega = symplectic_form(state.n_modes)
    return float(np.min(np.linalg.eigvalsh(state.cov + 1j * omega)))


def is_physical(state: GaussianState, tol: float = PHYSICALITY_TOL) -> bool:
    """Check the uncertainty relation cov + iΩ ⪰ 0 to within tol."""
    return min_physical_eigenvalue(state) >= -tol


def serialize_state(state: GaussianState) -> str:
    """Render a state as plain text for fixtures.

    The first line holds the mean vector; each following line is one row of
    the covariance matrix. Numbers use 17 significant digits.
    """
    lines = [" ".join(f"{v:.17g}" for v in state.mean)]
    lines.extend(" ".join(f"{v:.17g}" for v in row) for row in state.cov)
    return "\n".join(lines) + "\n"


def deserialize_state(text: str) -> GaussianState:
    """Parse the output of serialize_state back into a state.

    Raises:
        ValueError: If the text does not describe a square covariance
    """
    rows = [line.split() for line in text.strip().splitlines() if line.strip()]
    if not rows:
        raise ValueError("empty state text")
    mean = np.array([float(v) for v in rows[0]])
    cov = np.array([[float(v) for v in row] for row in rows[1:]])
    if mean.size % 2 or cov.shape != (mean.size, mean.size):
        raise ValueError("state text has inconsistent dimensions")
    return GaussianState(mean.size // 2, mean, cov)
