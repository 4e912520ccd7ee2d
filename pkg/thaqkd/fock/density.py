"""Truncated photon-number-basis density matrices.

This is the brute-force engine that every Gaussian closed form is checked
against. One or two modes are supported; two-mode matrices use the basis
|n_0, n_1> flattened as n_0 * (cutoff + 1) + n_1.

Each result carries the probability mass lost to truncation so far
(``leakage``). After an operation the matrix is renormalized to unit trace.
"""

import math
from dataclasses import dataclass, replace
from typing import Literal

import numpy as np
import numpy.typing as npt
import scipy.linalg
import scipy.special

ComplexArray = npt.NDArray[np.complex128]
FloatArray = npt.NDArray[np.float64]

Generator = Literal["phase", "displacement", "two_mode_squeeze"]

HERMITIAN_TOL = 1e-8
EIGENVALUE_FLOOR = -1e-8
NEGLIGIBLE_EIGENVALUE = 1e-14
DEFAULT_PAD = 8


@dataclass(frozen=True)
class FockDensityMatrix:
    """Density matrix truncated at ``cutoff`` photons per mode.

    Attributes:
        cutoff: Largest photon number kept per mode (inclusive)
        n_modes: 1 or 2
        entries: Square complex matrix of side (cutoff + 1) ** n_modes
        leakage: Accumulated 1 - trace lost to truncation before renormalizing
    """

    cutoff: int
    n_modes: int
    entries: ComplexArray
    leakage: float = 0.0

    def __post_init__(self) -> None:
        if self.cutoff < 1:
            raise ValueError(f"cutoff must be at least 1, got {self.cutoff}")
        if self.n_modes not in (1, 2):
            raise ValueError(f"only 1 or 2 modes are supported, got {self.n_modes}")
        dim = (self.cutoff + 1) ** self.n_modes
        entries = np.array(self.entries, dtype=np.complex128)
        if entries.shape != (dim, dim):
            raise ValueError(f"entries must be {dim}x{dim}, got shape {entries.shape}")
        if float(np.max(np.abs(entries - entries.conj().T))) > HERMITIAN_TOL:
            raise ValueError("density matrix is not Hermitian")
        entries = (entries + entries.conj().T) / 2
        entries.flags.writeable = False
        object.__setattr__(self, "entries", entries)

    @property
    def dim(self) -> int:
        return (self.cutoff + 1) ** self.n_modes


def _renormalized(rho: FockDensityMatrix, entries: ComplexArray) -> FockDensityMatrix:
    trace = float(np.trace(entries).real)
    if trace <= 0:
        raise ValueError("operation left no probability inside the truncated space")
    return replace(rho, entries=entries / trace, leakage=rho.leakage + max(0.0, 1.0 - trace))


def _annihilation(levels: int) -> FloatArray:
    return np.diag(np.sqrt(np.arange(1, levels, dtype=np.float64)), k=1)


def _from_amplitudes(amplitudes: ComplexArray, cutoff: int) -> FockDensityMatrix:
    kept = float(np.sum(np.abs(amplitudes) ** 2))
    entries = np.outer(amplitudes, amplitudes.conj()) / kept
    return FockDensityMatrix(cutoff, 1, entries, leakage=max(0.0, 1.0 - kept))


def vacuum_fock(cutoff: int, n_modes: int = 1) -> FockDensityMatrix:
    """Vacuum on one or two modes."""
    dim = (cutoff + 1) ** n_modes
    entries = np.zeros((dim, dim), dtype=np.complex128)
    entries[0, 0] = 1.0
    return FockDensityMatrix(cutoff, n_modes, entries)


def number_fock(k: int, cutoff: int) -> FockDensityMatrix:
    """Single-mode number state |k><k|."""
    if not 0 <= k <= cutoff:
        raise ValueError(f"photon number {k} outside 0..{cutoff}")
    entries = np.zeros((cutoff + 1, cutoff + 1), dtype=np.complex128)
    entries[k, k] = 1.0
    return FockDensityMatrix(cutoff, 1, entries)


def diagonal_fock(probabilities: npt.ArrayLike, cutoff: int) -> FockDensityMatrix:
    """Single-mode state diagonal in the number basis."""
    probs = np.asarray(probabilities, dtype=np.float64)
    if probs.shape != (cutoff + 1,):
        raise ValueError(f"need {cutoff + 1} probabilities, got {probs.shape}")
    if np.any(probs < 0):
        raise ValueError("probabilities must be non-negative")
    total = float(probs.sum())
    return FockDensityMatrix(cutoff, 1, np.diag(probs / total).astype(np.complex128))


def thermal_fock(mu: float, cutoff: int) -> FockDensityMatrix:
    """Single-mode thermal state with mean photon number mu (geometric diagonal)."""
    if mu < 0:
        raise ValueError(f"thermal photon number must be non-negative, got {mu}")
    n = np.arange(cutoff + 1)
    probs = (mu / (1 + mu)) ** n / (1 + mu)
    kept = float(probs.sum())
    entries = np.diag(probs / kept).astype(np.complex128)
    return FockDensityMatrix(cutoff, 1, entries, leakage=max(0.0, 1.0 - kept))


def coherent_fock(alpha: complex, cutoff: int) -> FockDensityMatrix:
    """Coherent state |alpha><alpha| truncated at cutoff.

    Raises:
        ValueError: If |alpha|^2 > cutoff / 4, where truncation would dominate
    """
    if abs(alpha) ** 2 > cutoff / 4:
        raise ValueError(
            f"|alpha|^2 = {abs(alpha) ** 2:.4g} exceeds cutoff/4 = {cutoff / 4:.4g}"
        )
    amplitudes = np.empty(cutoff + 1, dtype=np.complex128)
    amplitudes[0] = math.exp(-abs(alpha) ** 2 / 2)
    for n in range(1, cutoff + 1):
        amplitudes[n] = amplitudes[n - 1] * alpha / math.sqrt(n)
    return _from_amplitudes(amplitudes, cutoff)


def tensor_fock(first: FockDensityMatrix, second: FockDensityMatrix) -> FockDensityMatrix:
    """Two-mode product of two single-mode matrices with the same cutoff."""
    if first.n_modes != 1 or second.n_modes != 1:
        raise ValueError("tensor_fock combines two single-mode matrices")
    if first.cutoff != second.cutoff:
        raise ValueError("tensor_fock needs equal cutoffs")
    return FockDensityMatrix(
        first.cutoff,
        2,
        np.kron(first.entries, second.entries),
        leakage=first.leakage + second.leakage,
    )


def partial_trace_fock(rho: FockDensityMatrix, keep: int) -> FockDensityMatrix:
    """Reduce a two-mode matrix to mode ``keep``."""
    if rho.n_modes != 2:
        raise ValueError("partial_trace_fock needs a two-mode matrix")
    if keep not in (0, 1):
        raise ValueError(f"mode {keep} out of range for two modes")
    d = rho.cutoff + 1
    tensor = rho.entries.reshape(d, d, d, d)
    reduced = np.einsum("ikjk->ij", tensor) if keep == 0 else np.einsum("kikj->ij", tensor)
    return FockDensityMatrix(rho.cutoff, 1, reduced, leakage=rho.leakage)


def _single_mode_block(generator: ComplexArray, levels: int) -> ComplexArray:
    return scipy.linalg.expm(generator)[:levels, :levels]


def _sandwich(rho: FockDensityMatrix, op: ComplexArray, mode: int) -> ComplexArray:
    """op rho op† with a single-mode op acting on ``mode``."""
    if rho.n_modes == 1:
        if mode != 0:
            raise ValueError(f"mode {mode} out of range for one mode")
        return op @ rho.entries @ op.conj().T
    d = rho.cutoff + 1
    # axes: row mode 0, row mode 1, column mode 0, column mode 1
    t = rho.entries.reshape(d, d, d, d)
    if mode == 0:
        s = np.tensordot(op, t, axes=([1], [0]))
        out = np.tensordot(s, op.conj(), axes=([2], [1])).transpose(0, 1, 3, 2)
    elif mode == 1:
        s = np.tensordot(op, t, axes=([1], [1]))
        out = np.tensordot(s, op.conj(), axes=([3], [1])).transpose(1, 0, 2, 3)
    else:
        raise ValueError(f"mode {mode} out of range for two modes")
    return out.reshape(d * d, d * d)


def _two_mode_squeeze_block(xi: float, levels: int, big: int) -> ComplexArray:
    # a†b† - ab keeps n0 - n1 fixed, so each difference sector is exponentiated alone
    u = np.zeros((levels * levels, levels * levels), dtype=np.complex128)
    for diff in range(-(big - 1), big):
        i0, j0 = max(diff, 0), max(-diff, 0)
        size = big - abs(diff)
        gen = np.zeros((size, size))
        for m in range(size - 1):
            c = xi * math.sqrt((i0 + m + 1) * (j0 + m + 1))
            gen[m + 1, m] = c
            gen[m, m + 1] = -c
        kept = [m for m in range(size) if i0 + m < levels and j0 + m < levels]
        if not kept:
            continue
        block = scipy.linalg.expm(gen)[np.ix_(kept, kept)]
        flat = [(i0 + m) * levels + j0 + m for m in kept]
        u[np.ix_(flat, flat)] = block
    return u


def unitary_matrix(
    generator: Generator,
    parameter: complex,
    cutoff: int,
    pad: int = DEFAULT_PAD,
) -> ComplexArray:
    """Truncated unitary for one of the supported generators.

    The generator is exponentiated in a space padded by ``pad`` extra levels
    per mode and then cut back, so states near the cutoff are not reflected
    off the edge of the truncated space.

    Args:
        generator: "phase" (i theta a†a), "displacement" (alpha a† - alpha* a)
            or "two_mode_squeeze" (xi (a†b† - ab))
        parameter: theta, alpha or xi respectively
        cutoff: Photon cutoff per mode
        pad: Extra levels used while exponentiating

    Raises:
        ValueError: For an unsupported generator
    """
    levels = cutoff + 1
    if generator == "phase":
        theta = float(parameter.real)
        return np.diag(np.exp(1j * theta * np.arange(levels)))
    big = levels + pad
    if generator == "displacement":
        a = _annihilation(big)
        alpha = complex(parameter)
        return _single_mode_block(alpha * a.T - alpha.conjugate() * a, levels)
    if generator == "two_mode_squeeze":
        return _two_mode_squeeze_block(float(parameter.real), levels, big)
    raise ValueError(f"unsupported generator: {generator!r}")


def apply_unitary_generator(
    rho: FockDensityMatrix,
    generator: Generator,
    parameter: complex,
    mode: int = 0,
    pad: int = DEFAULT_PAD,
) -> FockDensityMatrix:
    """Apply exp(generator) to rho and renormalize.

    Single-mode generators act on ``mode``; the two-mode squeezer acts on
    modes 0 and 1 of a two-mode matrix.
    """
    u = unitary_matrix(generator, parameter, rho.cutoff, pad)
    if generator == "two_mode_squeeze":
        if rho.n_modes != 2:
            raise ValueError("two_mode_squeeze needs a two-mode matrix")
        return _renormalized(rho, u @ rho.entries @ u.conj().T)
    return _renormalized(rho, _sandwich(rho, u, mode))


def loss_kraus_operators(eta: float, cutoff: int) -> list[FloatArray]:
    """Kraus operators A_k of the pure-loss channel, k = 0..cutoff.

    A_k = sum_j sqrt(C(j, k)) sqrt(eta)^(j-k) sqrt(1-eta)^k |j-k><j|.
    """
    if not 0.0 <= eta <= 1.0:
        raise ValueError(f"transmissivity must be in [0, 1], got {eta}")
    levels = cutoff + 1
    operators: list[FloatArray] = []
    for k in range(levels):
        op = np.zeros((levels, levels))
        j = np.arange(k, levels)
        op[j - k, j] = (
            np.sqrt(scipy.special.comb(j, k)) * math.sqrt(eta) ** (j - k) * math.sqrt(1 - eta) ** k
        )
        operators.append(op)
    return operators


def attenuate_kraus(rho: FockDensityMatrix, eta: float, mode: int = 0) -> FockDensityMatrix:
    """Send one mode through the pure-loss channel of transmissivity eta."""
    total = np.zeros_like(rho.entries)
    for op in loss_kraus_operators(eta, rho.cutoff):
        total += _sandwich(rho, op.astype(np.complex128), mode)
    return _renormalized(rho, total)


def _drop_negligible(values: FloatArray) -> FloatArray:
    # rounding noise on a zero eigenvalue would otherwise survive as its square root
    return np.where(values > NEGLIGIBLE_EIGENVALUE, values, 0.0)


def _psd_sqrt(entries: ComplexArray) -> ComplexArray:
    values, vectors = scipy.linalg.eigh(entries)
    if float(values.min()) < EIGENVALUE_FLOOR:
        raise ValueError(f"density matrix has eigenvalue {float(values.min()):.3g}")
    roots = np.sqrt(_drop_negligible(values))
    return (vectors * roots) @ vectors.conj().T


def uhlmann_fidelity(first: FockDensityMatrix, second: FockDensityMatrix) -> float:
    """Fidelity Tr sqrt(sqrt(rho1) rho2 sqrt(rho1)), clipped to [0, 1].

    Raises:
        ValueError: If the matrices have different dimensions
    """
    if first.entries.shape != second.entries.shape:
        raise ValueError("uhlmann_fidelity needs matrices of the same dimension")
    return matrix_fidelity(first.entries, second.entries)


def matrix_fidelity(first: npt.ArrayLike, second: npt.ArrayLike) -> float:
    """Uhlmann fidelity of two plain density matrices of equal size."""
    a = np.asarray(first, dtype=np.complex128)
    b = np.asarray(second, dtype=np.complex128)
    if a.shape != b.shape:
        raise ValueError("matrix_fidelity needs matrices of the same shape")
    root = _psd_sqrt(a)
    inner = root @ b @ root
    values = scipy.linalg.eigh((inner + inner.conj().T) / 2, eigvals_only=True)
    return min(max(float(np.sum(np.sqrt(_drop_negligible(values)))), 0.0), 1.0)


@dataclass(frozen=True)
class PhotonStatistics:
    """Number statistics of a single-mode matrix.

    Attributes:
        mean: <n>
        variance_v: <n^2> - <n>
        diagonal: Populations p_k = <k|rho|k>
    """

    mean: float
    variance_v: float
    diagonal: FloatArray


def photon_statistics(rho: FockDensityMatrix) -> PhotonStatistics:
    """Mean photon number, v = <n^2> - <n>, and the number distribution.

    Raises:
        ValueError: For multimode input
    """
    if rho.n_modes != 1:
        raise ValueError("photon_statistics needs a single-mode matrix")
    diagonal = np.clip(np.diag(rho.entries).real, 0.0, None)
    n = np.arange(rho.cutoff + 1)
    mean = float(diagonal @ n)
    second = float(diagonal @ n**2)
    return PhotonStatistics(mean=mean, variance_v=second - mean, diagonal=diagonal)


def serialize_density(rho: FockDensityMatrix) -> str:
    """Plain-text form: one matrix row per line, entries as re,im with 17 digits."""
    lines = [f"{rho.cutoff} {rho.n_modes}"]
    for row in rho.entries:
        lines.append(" ".join(f"{v.real:.17g},{v.imag:.17g}" for v in row))
    return "\n".join(lines) + "\n"


def deserialize_density(text: str) -> FockDensityMatrix:
    """Parse the output of serialize_density."""
    lines = [line for line in text.strip().splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty density text")
    cutoff, n_modes = (int(v) for v in lines[0].split())
    rows: list[list[complex]] = []
    for line in lines[1:]:
        row: list[complex] = []
        for cell in line.split():
            re_part, im_part = cell.split(",")
            row.append(complex(float(re_part), float(im_part)))
        rows.append(row)
    return FockDensityMatrix(cutoff, n_modes, np.array(rows, dtype=np.complex128))
