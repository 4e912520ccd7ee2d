"""Tests for the shutter defense."""

import unittest
from dataclasses import replace

import numpy as np
from numpy.testing import assert_array_equal

from thaqkd.errors import NumericalError
from thaqkd.shutter import (
    ShutterConfig,
    calibrate_photon_budget,
    escapes,
    minimizing_convolution,
    reflection_count,
    reflection_staircase,
    returned_mean_photons,
    shutter_key_rate,
    travel_time_sweep,
    uniform_travel_times,
)


class TestShutterConfig(unittest.TestCase):
    """Tests for ShutterConfig validation."""

    def test_defaults(self) -> None:
        """Test the default timing is accepted."""
        cfg = ShutterConfig()
        self.assertEqual((cfg.t_S, cfg.t_P, cfg.t_L), (0.1, 1.0, 0.9))

    def test_invalid(self) -> None:
        """Test inconsistent timing or reflectivity raise."""
        for kwargs in ({"t_S": 1.0}, {"t_L": 0.0}, {"eta_R": 1.0}, {"R_max": 0}, {"N": -1.0}):
            with self.subTest(kwargs=kwargs), self.assertRaises(ValueError):
                ShutterConfig(**kwargs)


class TestReflectionCount(unittest.TestCase):
    """Tests for reflection_count()."""

    def test_inclusive_window(self) -> None:
        """Test t_L = 0.9 needs nine round trips, the last landing on t_S."""
        self.assertEqual(reflection_count(ShutterConfig(t_L=0.9)), 9)
        self.assertFalse(escapes(ShutterConfig(t_L=0.9), 8))
        self.assertTrue(escapes(ShutterConfig(t_L=0.9), 9))

    def test_short_travel_escapes_at_once(self) -> None:
        """Test t_L in (0, t_S] escapes on the first trip."""
        for t in (0.01, 0.05, 0.1):
            with self.subTest(t=t):
                self.assertEqual(reflection_count(ShutterConfig(t_L=t)), 1)

    def test_full_period(self) -> None:
        """Test t_L = t_P comes back with the shutter open."""
        self.assertEqual(reflection_count(ShutterConfig(t_L=1.0)), 1)
        self.assertEqual(reflection_count(ShutterConfig(t_L=0.5)), 2)

    def test_cap(self) -> None:
        """Test exceeding R_max raises a numerical error."""
        with self.assertRaises(NumericalError) as ctx:
            reflection_count(ShutterConfig(t_L=0.9, R_max=5))
        self.assertEqual(ctx.exception.operation, "reflection_count")

    def test_time_unit_invariant(self) -> None:
        """Test doubling the shutter timing and the travel time keeps R."""
        for t in uniform_travel_times(200):
            cfg = ShutterConfig(t_L=t)
            doubled = replace(cfg, t_S=2 * cfg.t_S, t_P=2 * cfg.t_P, t_L=2 * t)
            with self.subTest(t=t):
                self.assertEqual(reflection_count(doubled), reflection_count(cfg))


class TestReturnedPhotons(unittest.TestCase):
    """Tests for returned_mean_photons() and shutter_key_rate()."""

    def test_geometric_decay(self) -> None:
        """Test N eta_R^(R - 1)."""
        self.assertEqual(returned_mean_photons(8.0, 0.5, 1), 8.0)
        self.assertEqual(returned_mean_photons(8.0, 0.5, 4), 1.0)
        with self.assertRaises(ValueError):
            returned_mean_photons(8.0, 0.5, 0)

    def test_no_light_full_rate(self) -> None:
        """Test N = 0 leaves the key untouched."""
        self.assertEqual(shutter_key_rate(ShutterConfig(N=0.0)).K, 1.0)

    def test_bright_light_no_key(self) -> None:
        """Test light escaping immediately destroys the key."""
        self.assertEqual(shutter_key_rate(ShutterConfig(t_L=0.05, N=1e6)).K, 0.0)


class TestMinimizingConvolution(unittest.TestCase):
    """Tests for minimizing_convolution()."""

    def test_zero_width_is_identity(self) -> None:
        """Test delta = 0 returns the input."""
        t = [0.1, 0.2, 0.3]
        values = [3.0, 1.0, 2.0]
        assert_array_equal(minimizing_convolution(t, values, 0.0), values)

    def test_window_minimum(self) -> None:
        """Test each value drops to the smallest neighbour within the window."""
        t = np.linspace(0.0, 1.0, 11)
        values = np.ones(11)
        values[5] = 0.0
        result = minimizing_convolution(t, values, 0.1)
        assert_array_equal(result[4:7], [0.0, 0.0, 0.0])
        self.assertEqual(result[3], 1.0)
        self.assertTrue(np.all(result <= values))

    def test_validation(self) -> None:
        """Test unsorted samples, length mismatch and negative widths raise."""
        with self.assertRaises(ValueError):
            minimizing_convolution([0.2, 0.1], [1.0, 2.0], 0.1)
        with self.assertRaises(ValueError):
            minimizing_convolution([0.1, 0.2], [1.0], 0.1)
        with self.assertRaises(ValueError):
            minimizing_convolution([0.1], [1.0], -0.1)

    def test_wider_window_never_raises_rate(self) -> None:
        """Test growing delta gives a pointwise non-increasing result."""
        t = uniform_travel_times(200)
        values = np.random.default_rng(11).uniform(size=200)
        previous = values
        for delta in (0.0, 0.005, 0.01, 0.02, 0.05, 0.2):
            current = minimizing_convolution(t, values, delta)
            with self.subTest(delta=delta):
                self.assertTrue(np.all(current <= previous))
            previous = current


class TestSweep(unittest.TestCase):
    """Tests for the travel-time sweep and the staircase."""

    def test_uniform_times(self) -> None:
        """Test i / points for i = 1..points."""
        self.assertEqual(uniform_travel_times(4), [0.25, 0.5, 0.75, 1.0])
        with self.assertRaises(ValueError):
            uniform_travel_times(0)

    def test_staircase(self) -> None:
        """Test the reflection counts on a coarse grid."""
        cfg = ShutterConfig()
        self.assertEqual(reflection_staircase(cfg, [0.1, 0.5, 0.9, 1.0]), [1, 2, 9, 1])

    def test_sweep_rows(self) -> None:
        """Test the sweep carries counts, photons and a never-larger convolved rate."""
        cfg = ShutterConfig(N=1e4)
        t_values = uniform_travel_times(100)
        rows = travel_time_sweep(cfg, t_values)
        self.assertEqual(len(rows), 100)
        for row in rows:
            self.assertEqual(row.mu, returned_mean_photons(cfg.N, cfg.eta_R, row.R))
            self.assertLessEqual(row.K_convolved, row.K_raw)

    def test_more_reflections_never_lower_rate(self) -> None:
        """Test K_raw is non-decreasing in R over the sweep."""
        rows = travel_time_sweep(ShutterConfig(N=1e4), uniform_travel_times(400))
        by_count = sorted(rows, key=lambda row: row.R)
        for lower, higher in zip(by_count, by_count[1:], strict=False):
            self.assertLessEqual(lower.K_raw, higher.K_raw)
        self.assertGreater(len({row.R for row in rows}), 5)

    def test_staircase_length_checked(self) -> None:
        """Test a staircase of the wrong length raises."""
        with self.assertRaises(ValueError):
            travel_time_sweep(ShutterConfig(), [0.5, 0.9], staircase=[2])


class TestCalibration(unittest.TestCase):
    """Tests for calibrate_photon_budget()."""

    def test_empty_grid(self) -> None:
        """Test an empty budget grid raises."""
        with self.assertRaises(ValueError):
            calibrate_photon_budget(ShutterConfig(), [0.5], budgets=[])

    def test_unreachable_targets(self) -> None:
        """Test targets nothing meets give N = None with the last rates."""
        result = calibrate_photon_budget(
            ShutterConfig(), uniform_travel_times(50), primary_min=1.1, budgets=[1e3, 1e4]
        )
        self.assertFalse(result.found)
        self.assertIsNone(result.N)

    def test_trivial_targets(self) -> None:
        """Test the first budget is taken when every target is met."""
        cfg = replace(ShutterConfig(), N=1.0)
        result = calibrate_photon_budget(
            cfg,
            uniform_travel_times(50),
            primary_min=0.0,
            secondary_range=(0.0, 1.0),
            budgets=[10.0, 1e3],
        )
        self.assertEqual(result.N, 10.0)


if __name__ == "__main__":
    unittest.main()
