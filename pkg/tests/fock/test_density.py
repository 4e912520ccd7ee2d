"""Tests for truncated Fock-space density matrices."""

import math
import unittest

import numpy as np
import scipy.linalg
from numpy.testing import assert_allclose

from thaqkd.fock import (
    FockDensityMatrix,
    apply_unitary_generator,
    attenuate_kraus,
    coherent_fock,
    deserialize_density,
    diagonal_fock,
    matrix_fidelity,
    number_fock,
    partial_trace_fock,
    photon_statistics,
    serialize_density,
    tensor_fock,
    thermal_fock,
    uhlmann_fidelity,
    vacuum_fock,
)
from thaqkd.fock.density import loss_kraus_operators, unitary_matrix

CUTOFF = 30


class TestConstruction(unittest.TestCase):
    """Tests for FockDensityMatrix validation and the basic builders."""

    def test_vacuum(self) -> None:
        """Test the vacuum puts all weight on |0>."""
        rho = vacuum_fock(4)
        self.assertEqual(rho.dim, 5)
        self.assertEqual(rho.entries[0, 0], 1.0)
        self.assertAlmostEqual(float(np.trace(rho.entries).real), 1.0)

    def test_two_mode_vacuum_dimension(self) -> None:
        """Test two modes use (cutoff + 1)^2 basis states."""
        self.assertEqual(vacuum_fock(3, n_modes=2).dim, 16)

    def test_number_state_out_of_range(self) -> None:
        """Test |k> beyond the cutoff raises."""
        with self.assertRaises(ValueError):
            number_fock(6, 5)

    def test_non_hermitian_rejected(self) -> None:
        """Test a non-Hermitian matrix raises."""
        entries = np.array([[0.5, 0.5], [0.0, 0.5]], dtype=np.complex128)
        with self.assertRaises(ValueError):
            FockDensityMatrix(1, 1, entries)

    def test_shape_and_modes_checked(self) -> None:
        """Test wrong shapes and mode counts raise."""
        with self.assertRaises(ValueError):
            FockDensityMatrix(2, 1, np.eye(2))
        with self.assertRaises(ValueError):
            FockDensityMatrix(1, 3, np.eye(8))

    def test_diagonal_normalized(self) -> None:
        """Test diagonal_fock normalizes its input."""
        rho = diagonal_fock([2.0, 1.0, 1.0], 2)
        assert_allclose(np.diag(rho.entries).real, [0.5, 0.25, 0.25])

    def test_diagonal_negative_rejected(self) -> None:
        """Test negative populations raise."""
        with self.assertRaises(ValueError):
            diagonal_fock([1.0, -0.1], 1)


class TestPhotonStatistics(unittest.TestCase):
    """Tests for photon_statistics() on states with known moments."""

    def test_thermal_moments(self) -> None:
        """Test <n> = mu and <n^2> - <n> = 2 mu^2."""
        stats = photon_statistics(thermal_fock(0.5, CUTOFF))
        self.assertAlmostEqual(stats.mean, 0.5, places=9)
        self.assertAlmostEqual(stats.variance_v, 0.5, places=9)

    def test_coherent_moments(self) -> None:
        """Test Poisson statistics: <n> = |alpha|^2 and v = |alpha|^4."""
        stats = photon_statistics(coherent_fock(0.8 + 0.6j, CUTOFF))
        self.assertAlmostEqual(stats.mean, 1.0, places=9)
        self.assertAlmostEqual(stats.variance_v, 1.0, places=9)

    def test_multimode_rejected(self) -> None:
        """Test two-mode input raises."""
        with self.assertRaises(ValueError):
            photon_statistics(vacuum_fock(2, n_modes=2))


class TestTruncation(unittest.TestCase):
    """Tests for leakage bookkeeping."""

    def test_thermal_leakage(self) -> None:
        """Test the lost tail of a thermal state is recorded."""
        rho = thermal_fock(5.0, 5)
        self.assertAlmostEqual(rho.leakage, (5 / 6) ** 6, places=12)
        self.assertAlmostEqual(float(np.trace(rho.entries).real), 1.0)

    def test_coherent_guard(self) -> None:
        """Test |alpha|^2 above cutoff / 4 raises."""
        with self.assertRaises(ValueError):
            coherent_fock(3.0, CUTOFF)


class TestUnitaries(unittest.TestCase):
    """Tests for the generator unitaries."""

    def test_displacement_of_vacuum_is_coherent(self) -> None:
        """Test D(alpha)|0> matches the coherent-state amplitudes."""
        alpha = 0.7 - 0.4j
        displaced = apply_unitary_generator(vacuum_fock(CUTOFF), "displacement", alpha)
        self.assertAlmostEqual(
            uhlmann_fidelity(displaced, coherent_fock(alpha, CUTOFF)), 1.0, places=9
        )

    def test_phase_rotates_coherent(self) -> None:
        """Test exp(i pi/2 n) maps |1> to |i>."""
        rotated = apply_unitary_generator(coherent_fock(1.0, CUTOFF), "phase", math.pi / 2)
        self.assertAlmostEqual(
            uhlmann_fidelity(rotated, coherent_fock(1j, CUTOFF)), 1.0, places=9
        )

    def test_phase_is_diagonal(self) -> None:
        """Test the phase unitary is diagonal with unit-modulus entries."""
        u = unitary_matrix("phase", 0.3, 4)
        assert_allclose(np.abs(np.diag(u)), np.ones(5))
        assert_allclose(u, np.diag(np.diag(u)))

    def test_squeezed_vacuum_reduces_to_thermal(self) -> None:
        """Test half of a squeezed pair is thermal with sinh^2(xi) photons."""
        xi, cutoff = 0.5, 20
        pair = apply_unitary_generator(vacuum_fock(cutoff, n_modes=2), "two_mode_squeeze", xi)
        reduced = partial_trace_fock(pair, 0)
        expected = thermal_fock(math.sinh(xi) ** 2, cutoff)
        self.assertAlmostEqual(uhlmann_fidelity(reduced, expected), 1.0, places=7)

    def test_squeezer_matches_full_exponential(self) -> None:
        """Test the sector-wise squeezer equals exponentiating the padded generator."""
        cutoff, pad, xi = 4, 8, 0.3
        big = cutoff + 1 + pad
        a = np.diag(np.sqrt(np.arange(1, big, dtype=np.float64)), k=1)
        a0, a1 = np.kron(a, np.eye(big)), np.kron(np.eye(big), a)
        full = scipy.linalg.expm(xi * (a0.T @ a1.T - a0 @ a1))
        idx = [i * big + j for i in range(cutoff + 1) for j in range(cutoff + 1)]
        assert_allclose(
            unitary_matrix("two_mode_squeeze", xi, cutoff, pad), full[np.ix_(idx, idx)], atol=1e-12
        )

    def test_displacement_on_second_mode(self) -> None:
        """Test displacing mode 1 of the vacuum leaves mode 0 untouched."""
        cutoff = 12
        shifted = apply_unitary_generator(
            vacuum_fock(cutoff, n_modes=2), "displacement", 0.7j, mode=1
        )
        expected = tensor_fock(vacuum_fock(cutoff), coherent_fock(0.7j, cutoff))
        self.assertAlmostEqual(uhlmann_fidelity(shifted, expected), 1.0, places=9)

    def test_squeezer_needs_two_modes(self) -> None:
        """Test the two-mode squeezer rejects single-mode input."""
        with self.assertRaises(ValueError):
            apply_unitary_generator(vacuum_fock(4), "two_mode_squeeze", 0.1)

    def test_mode_out_of_range(self) -> None:
        """Test single-mode generators reject an unknown mode."""
        with self.assertRaises(ValueError):
            apply_unitary_generator(vacuum_fock(4), "phase", 0.1, mode=1)


class TestLoss(unittest.TestCase):
    """Tests for the Kraus loss channel."""

    def test_kraus_completeness(self) -> None:
        """Test sum_k A_k^dagger A_k is the identity."""
        total = sum(op.T @ op for op in loss_kraus_operators(0.37, 10))
        assert_allclose(total, np.eye(11), atol=1e-12)

    def test_coherent_stays_coherent(self) -> None:
        """Test loss maps |2> to |sqrt(eta) 2>."""
        lossy = attenuate_kraus(coherent_fock(2.0, CUTOFF), 0.25)
        self.assertAlmostEqual(uhlmann_fidelity(lossy, coherent_fock(1.0, CUTOFF)), 1.0, places=7)

    def test_number_state_binomial(self) -> None:
        """Test |2> keeps two photons with probability eta^2."""
        stats = photon_statistics(attenuate_kraus(number_fock(2, 4), 0.5))
        assert_allclose(stats.diagonal, [0.25, 0.5, 0.25, 0.0, 0.0], atol=1e-12)

    def test_two_mode_loss_matches_embedded_kraus(self) -> None:
        """Test loss on either mode of an entangled pair equals the Kronecker form."""
        cutoff = 6
        rho = apply_unitary_generator(
            tensor_fock(thermal_fock(0.3, cutoff), coherent_fock(0.5, cutoff)),
            "two_mode_squeeze",
            0.2,
        )
        eye = np.eye(cutoff + 1)
        for mode in (0, 1):
            expected = np.zeros_like(rho.entries)
            for op in loss_kraus_operators(0.6, cutoff):
                full = np.kron(op, eye) if mode == 0 else np.kron(eye, op)
                expected += full @ rho.entries @ full.T
            expected /= np.trace(expected).real
            with self.subTest(mode=mode):
                assert_allclose(attenuate_kraus(rho, 0.6, mode).entries, expected, atol=1e-12)

    def test_range_checked(self) -> None:
        """Test eta outside [0, 1] raises."""
        with self.assertRaises(ValueError):
            loss_kraus_operators(-0.1, 3)


class TestTensorAndTrace(unittest.TestCase):
    """Tests for tensor_fock() and partial_trace_fock()."""

    def test_factors_recovered(self) -> None:
        """Test tracing a product returns each factor."""
        first, second = thermal_fock(0.3, 6), number_fock(2, 6)
        joint = tensor_fock(first, second)
        assert_allclose(partial_trace_fock(joint, 0).entries, first.entries, atol=1e-14)
        assert_allclose(partial_trace_fock(joint, 1).entries, second.entries, atol=1e-14)

    def test_cutoffs_must_match(self) -> None:
        """Test factors with different cutoffs raise."""
        with self.assertRaises(ValueError):
            tensor_fock(vacuum_fock(3), vacuum_fock(4))


class TestFidelity(unittest.TestCase):
    """Tests for uhlmann_fidelity() and matrix_fidelity()."""

    def test_coherent_against_vacuum(self) -> None:
        """Test the Fock value matches exp(-|alpha|^2 / 2)."""
        f = uhlmann_fidelity(coherent_fock(1.0, CUTOFF), vacuum_fock(CUTOFF))
        self.assertAlmostEqual(f, math.exp(-0.5), places=9)

    def test_thermal_against_vacuum(self) -> None:
        """Test F = 1 / sqrt(1 + mu)."""
        f = uhlmann_fidelity(thermal_fock(1.0, CUTOFF), vacuum_fock(CUTOFF))
        self.assertAlmostEqual(f, 1 / math.sqrt(2), places=6)

    def test_orthogonal_and_identical(self) -> None:
        """Test orthogonal states give 0 and identical states give 1."""
        self.assertEqual(matrix_fidelity(np.diag([1.0, 0.0]), np.diag([0.0, 1.0])), 0.0)
        rho = np.diag([0.2, 0.3, 0.5])
        self.assertAlmostEqual(matrix_fidelity(rho, rho), 1.0, places=12)

    def test_dimension_mismatch(self) -> None:
        """Test matrices of different size raise."""
        with self.assertRaises(ValueError):
            uhlmann_fidelity(vacuum_fock(3), vacuum_fock(4))


class TestSerialization(unittest.TestCase):
    """Tests for the plain-text density format."""

    def test_round_trip(self) -> None:
        """Test a complex matrix survives the text format exactly."""
        rho = coherent_fock(0.4 + 0.3j, 4)
        restored = deserialize_density(serialize_density(rho))
        self.assertEqual((restored.cutoff, restored.n_modes), (4, 1))
        np.testing.assert_array_equal(restored.entries, rho.entries)

    def test_empty_text(self) -> None:
        """Test empty input raises."""
        with self.assertRaises(ValueError):
            deserialize_density("")


if __name__ == "__main__":
    unittest.main()
