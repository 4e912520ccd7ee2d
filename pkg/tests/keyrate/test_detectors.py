"""Tests for Bob's detection statistics."""

import math
import unittest

import numpy as np

from thaqkd.keyrate import (
    ChannelModel,
    bucket_stats,
    bucket_stats_from_sums,
    detection_stats,
    pnrd_stats,
)


class TestChannelModel(unittest.TestCase):
    """Tests for ChannelModel."""

    def test_origin(self) -> None:
        """Test zero distance gives full transmission and no bit flips."""
        channel = ChannelModel(L=0.0)
        self.assertEqual(channel.T, 1.0)
        self.assertEqual(channel.Q, 0.0)

    def test_values(self) -> None:
        """Test T = exp(-L / L0) and Q = (1 - exp(-L / L_Q)) / 2."""
        channel = ChannelModel(L=5.0, L0=25.0, L_Q=10.0)
        self.assertAlmostEqual(channel.T, math.exp(-0.2))
        self.assertAlmostEqual(channel.Q, (1 - math.exp(-0.5)) / 2)

    def test_from_memory_lifetime(self) -> None:
        """Test L_Q is the light speed times the lifetime."""
        channel = ChannelModel.from_memory_lifetime(1.0, 25.0, 10.0)
        self.assertAlmostEqual(channel.L_Q, 2.99792458)
        with self.assertRaises(ValueError):
            ChannelModel.from_memory_lifetime(1.0, 25.0, 0.0)

    def test_validation(self) -> None:
        """Test negative distances and non-positive lengths raise."""
        with self.assertRaises(ValueError):
            ChannelModel(L=-1.0)
        with self.assertRaises(ValueError):
            ChannelModel(L=1.0, L0=0.0)
        with self.assertRaises(ValueError):
            ChannelModel(L=1.0, L_Q=-2.0)


class TestBucketStats(unittest.TestCase):
    """Tests for the click/no-click detector formulas."""

    def test_noiseless(self) -> None:
        """Test mu_T = 0 reduces to (T, Q)."""
        stats = bucket_stats(0.0, 0.7, 0.05)
        self.assertAlmostEqual(stats.p_succ, 0.7)
        self.assertAlmostEqual(stats.eps, 0.05)
        self.assertEqual(stats.detector_kind, "bucket")

    def test_reference_values(self) -> None:
        """Test two hand-evaluated points."""
        stats = bucket_stats(1.0, 1.0, 0.0)
        self.assertAlmostEqual(stats.p_succ, 2 / 3)
        self.assertAlmostEqual(stats.eps, 0.0)
        stats = bucket_stats(2.0, 0.5, 0.1)
        self.assertAlmostEqual(stats.p_succ, 5 / 9)
        self.assertAlmostEqual(stats.eps, 0.26)

    def test_sums_match_closed_form(self) -> None:
        """Test the outcome-by-outcome sum agrees with the closed form."""
        for mu_T in (0.0, 0.3, 2.0, 40.0):
            for T in (0.05, 0.5, 1.0):
                for Q in (0.0, 0.1, 0.5):
                    with self.subTest(mu_T=mu_T, T=T, Q=Q):
                        closed = bucket_stats(mu_T, T, Q)
                        summed = bucket_stats_from_sums(mu_T, T, Q)
                        self.assertAlmostEqual(closed.p_succ, summed.p_succ, places=12)
                        self.assertAlmostEqual(closed.eps, summed.eps, places=12)

    def test_invalid_inputs(self) -> None:
        """Test out-of-range arguments raise."""
        with self.assertRaises(ValueError):
            bucket_stats(-0.1, 0.5, 0.1)
        with self.assertRaises(ValueError):
            bucket_stats(0.1, 0.0, 0.1)
        with self.assertRaises(ValueError):
            bucket_stats(0.1, 0.5, 0.6)


class TestPnrdStats(unittest.TestCase):
    """Tests for photon-number-resolving detectors."""

    def test_same_error_rate_fewer_bits(self) -> None:
        """Test PNRDs keep the bucket error rate but never more valid bits."""
        for mu_T in np.geomspace(1e-3, 1e2, 12):
            for T in (0.01, 0.3, 1.0):
                for Q in (0.0, 0.05, 0.3):
                    bucket = bucket_stats(float(mu_T), T, Q)
                    pnrd = pnrd_stats(float(mu_T), T, Q)
                    self.assertAlmostEqual(pnrd.eps, bucket.eps, places=12)
                    self.assertLessEqual(pnrd.p_succ, bucket.p_succ + 1e-15)

    def test_noiseless_agrees(self) -> None:
        """Test without noise both detectors see (T, Q)."""
        stats = pnrd_stats(0.0, 0.4, 0.2)
        self.assertAlmostEqual(stats.p_succ, 0.4)
        self.assertAlmostEqual(stats.eps, 0.2)


class TestDispatch(unittest.TestCase):
    """Tests for detection_stats()."""

    def test_kinds(self) -> None:
        """Test each kind reaches its formula and unknown kinds raise."""
        self.assertEqual(detection_stats("bucket", 1.0, 0.5, 0.1), bucket_stats(1.0, 0.5, 0.1))
        self.assertEqual(detection_stats("pnrd", 1.0, 0.5, 0.1), pnrd_stats(1.0, 0.5, 0.1))
        with self.assertRaises(ValueError):
            detection_stats("other", 1.0, 0.5, 0.1)  # pyright: ignore[reportArgumentType]


if __name__ == "__main__":
    unittest.main()
