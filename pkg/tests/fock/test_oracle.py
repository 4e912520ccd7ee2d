"""Tests for the Gaussian-versus-Fock cross-check."""

import math
import unittest

import numpy as np

from thaqkd.fock import photon_statistics
from thaqkd.fock.oracle import (
    ORACLE_TOL,
    OracleLimits,
    PreparationRecipe,
    compare_pair,
    equivalence_report,
    prepare_fock,
    prepare_gaussian,
    random_recipe,
)
from thaqkd.gaussian import is_physical, mean_photons


class TestPreparationRecipe(unittest.TestCase):
    """Tests for recipe validation."""

    def test_mode_count_checked(self) -> None:
        """Test only one or two modes are accepted."""
        with self.assertRaises(ValueError):
            PreparationRecipe(n_modes=3, thermal=(0.0,) * 3, displacement=(0j,) * 3)

    def test_entries_per_mode(self) -> None:
        """Test thermal and displacement need one entry per mode."""
        with self.assertRaises(ValueError):
            PreparationRecipe(n_modes=2, thermal=(0.0,), displacement=(0j, 0j))

    def test_single_mode_squeezing_rejected(self) -> None:
        """Test two-mode squeezing on one mode raises."""
        with self.assertRaises(ValueError):
            PreparationRecipe(n_modes=1, thermal=(0.0,), displacement=(0j,), squeezing=0.2)


class TestRandomRecipe(unittest.TestCase):
    """Tests for random_recipe()."""

    def test_within_limits(self) -> None:
        """Test every drawn parameter respects the limits."""
        limits = OracleLimits()
        rng = np.random.default_rng(3)
        for n_modes in (1, 2):
            for _ in range(20):
                recipe = random_recipe(rng, n_modes, limits)
                self.assertTrue(limits.min_loss <= recipe.loss <= 1.0)
                self.assertTrue(0.0 <= recipe.squeezing <= limits.max_squeezing)
                self.assertEqual(len(recipe.displacement), n_modes)
                for alpha in recipe.displacement:
                    self.assertLessEqual(abs(alpha), limits.max_displacement)
                cap = limits.pair_seed_cap(recipe.squeezing)
                for mu in recipe.thermal:
                    self.assertTrue(0.0 <= mu <= min(cap, limits.max_thermal))

    def test_pair_seed_cap(self) -> None:
        """Test the cap is max_thermal without squeezing and shrinks with it."""
        limits = OracleLimits()
        self.assertAlmostEqual(limits.pair_seed_cap(0.0), 2.0)
        self.assertAlmostEqual(limits.pair_seed_cap(0.6), (5 / math.cosh(1.2) - 1) / 2)

    def test_squeezed_pair_occupation_bounded(self) -> None:
        """Test seeds at the cap give each mode exactly max_thermal photons."""
        limits = OracleLimits()
        cap = limits.pair_seed_cap(0.6)
        recipe = PreparationRecipe(
            n_modes=2, thermal=(cap, cap), displacement=(0j, 0j), squeezing=0.6
        )
        state = prepare_gaussian(recipe)
        self.assertAlmostEqual(mean_photons(state, 0), limits.max_thermal, places=10)
        self.assertAlmostEqual(mean_photons(state, 1), limits.max_thermal, places=10)

    def test_reproducible(self) -> None:
        """Test equal seeds give equal recipes."""
        first = random_recipe(np.random.default_rng(11), 2)
        second = random_recipe(np.random.default_rng(11), 2)
        self.assertEqual(first, second)


class TestPreparation(unittest.TestCase):
    """Tests for preparing one recipe both ways."""

    recipe = PreparationRecipe(
        n_modes=1, thermal=(0.4,), displacement=(0.6 + 0.2j,), loss=0.7, rotation=1.1
    )

    def test_gaussian_is_physical(self) -> None:
        """Test the symplectic route yields a physical state."""
        self.assertTrue(is_physical(prepare_gaussian(self.recipe)))

    def test_photon_numbers_agree(self) -> None:
        """Test both routes give the same mean photon number."""
        gaussian = mean_photons(prepare_gaussian(self.recipe), 0)
        fock = photon_statistics(prepare_fock(self.recipe)).mean
        self.assertAlmostEqual(gaussian, fock, places=8)


class TestComparison(unittest.TestCase):
    """Tests for compare_pair() and equivalence_report()."""

    def test_single_mode_pair(self) -> None:
        """Test a hand-picked single-mode pair agrees within tolerance."""
        first = PreparationRecipe(n_modes=1, thermal=(0.5,), displacement=(0.8,), loss=0.5)
        second = PreparationRecipe(n_modes=1, thermal=(0.2,), displacement=(0.3j,), rotation=0.4)
        result = compare_pair(first, second)
        self.assertLess(result.error, ORACLE_TOL)
        self.assertGreater(result.gaussian, 0.0)

    def test_two_mode_pair(self) -> None:
        """Test a squeezed two-mode pair agrees within tolerance."""
        first = PreparationRecipe(
            n_modes=2, thermal=(0.1, 0.2), displacement=(0.5, -0.3j), loss=0.6, squeezing=0.4
        )
        second = PreparationRecipe(
            n_modes=2, thermal=(0.2, 0.0), displacement=(0.2j, 0.4), squeezing=0.2, rotation=0.9
        )
        result = compare_pair(first, second, index=7)
        self.assertEqual((result.index, result.n_modes), (7, 2))
        self.assertLess(result.error, ORACLE_TOL)

    def test_single_mode_range_corner(self) -> None:
        """Test the hottest, most displaced single-mode states still agree."""
        first = PreparationRecipe(n_modes=1, thermal=(2.0,), displacement=(1.2,))
        second = PreparationRecipe(n_modes=1, thermal=(1.5,), displacement=(-1.2j,), loss=0.8)
        result = compare_pair(first, second)
        self.assertLess(result.error, ORACLE_TOL)

    def test_two_mode_range_corner(self) -> None:
        """Test fully squeezed pairs seeded at the cap and displaced by 1.2 agree."""
        limits = OracleLimits()
        cap = limits.pair_seed_cap(limits.max_squeezing)
        first = PreparationRecipe(
            n_modes=2,
            thermal=(cap, cap),
            displacement=(1.2, 1.2j),
            squeezing=limits.max_squeezing,
        )
        second = PreparationRecipe(
            n_modes=2,
            thermal=(0.5 * cap, 0.0),
            displacement=(-0.8, 0.6),
            loss=0.5,
            squeezing=0.3,
            rotation=0.7,
        )
        result = compare_pair(first, second)
        self.assertLess(result.error, ORACLE_TOL)

    def test_mode_mismatch(self) -> None:
        """Test a pair with different mode counts raises."""
        one = PreparationRecipe(n_modes=1, thermal=(0.0,), displacement=(0j,))
        two = PreparationRecipe(n_modes=2, thermal=(0.0, 0.0), displacement=(0j, 0j))
        with self.assertRaises(ValueError):
            compare_pair(one, two)

    def test_small_report_passes(self) -> None:
        """Test a short seeded run passes and alternates mode counts."""
        report = equivalence_report(seed=20240611, count=3)
        self.assertEqual([c.n_modes for c in report.comparisons], [1, 2, 1])
        self.assertTrue(report.passed, f"max error {report.max_error}")
        self.assertLess(report.max_leakage, 1e-3)

    def test_report_is_deterministic(self) -> None:
        """Test the same seed reproduces the same fidelities."""
        first = equivalence_report(seed=5, count=2, cutoff=16)
        second = equivalence_report(seed=5, count=2, cutoff=16)
        self.assertEqual(
            [c.fock for c in first.comparisons], [c.fock for c in second.comparisons]
        )


if __name__ == "__main__":
    unittest.main()
