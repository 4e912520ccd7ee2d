"""Cross-check Gaussian fidelities against brute-force Fock-space ones.

A PreparationRecipe describes a state as a short circuit (thermal seed,
two-mode squeezing, loss, displacement, rotation). The same recipe is
realized once with symplectic algebra and once with truncated density
matrices, and the two fidelities of a random pair are compared.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from thaqkd.fock.density import (
    FockDensityMatrix,
    apply_unitary_generator,
    attenuate_kraus,
    tensor_fock,
    thermal_fock,
    uhlmann_fidelity,
)
from thaqkd.gaussian import (
    GaussianState,
    add_thermal_additive,
    displace,
    fidelity,
    phase_rotate,
    pure_loss,
    two_mode_squeeze,
    vacuum,
)

SINGLE_MODE_CUTOFF = 30
PAIR_CUTOFF = 30
ORACLE_TOL = 1e-4


@dataclass(frozen=True)
class OracleLimits:
    """Ranges random recipes are drawn from.

    ``max_thermal`` bounds the thermal occupation of every mode before
    displacement. For pairs the seeds are drawn below ``pair_seed_cap``, so
    two-mode squeezing cannot lift either mode past that occupation.
    """

    max_displacement: float = 1.2
    max_squeezing: float = 0.6
    min_loss: float = 0.1
    max_thermal: float = 2.0

    def pair_seed_cap(self, squeezing: float) -> float:
        """Largest thermal seed that keeps both squeezed modes at max_thermal."""
        return max(0.0, ((2 * self.max_thermal + 1) / math.cosh(2 * squeezing) - 1) / 2)


@dataclass(frozen=True)
class PreparationRecipe:
    """Circuit that prepares a one- or two-mode Gaussian state from vacuum.

    Order: thermal seed per mode, two-mode squeezing (pairs only), loss on
    mode 0, displacement per mode, rotation of mode 0.
    """

    n_modes: int
    thermal: tuple[float, ...]
    displacement: tuple[complex, ...]
    loss: float = 1.0
    squeezing: float = 0.0
    rotation: float = 0.0

    def __post_init__(self) -> None:
        if self.n_modes not in (1, 2):
            raise ValueError(f"recipes cover 1 or 2 modes, got {self.n_modes}")
        if len(self.thermal) != self.n_modes or len(self.displacement) != self.n_modes:
            raise ValueError("thermal and displacement need one entry per mode")
        if self.n_modes == 1 and self.squeezing != 0.0:
            raise ValueError("two-mode squeezing needs two modes")


def _disk_sample(rng: np.random.Generator, radius: float) -> complex:
    r = radius * math.sqrt(rng.random())
    angle = 2 * math.pi * rng.random()
    return complex(r * math.cos(angle), r * math.sin(angle))


def random_recipe(
    rng: np.random.Generator, n_modes: int, limits: OracleLimits | None = None
) -> PreparationRecipe:
    """Draw a recipe with every parameter uniform inside ``limits``."""
    limits = limits or OracleLimits()
    if n_modes == 1:
        return PreparationRecipe(
            n_modes=1,
            thermal=(float(rng.uniform(0, limits.max_thermal)),),
            displacement=(_disk_sample(rng, limits.max_displacement),),
            loss=float(rng.uniform(limits.min_loss, 1.0)),
            rotation=float(rng.uniform(0, 2 * math.pi)),
        )
    squeezing = float(rng.uniform(0, limits.max_squeezing))
    seed_cap = limits.pair_seed_cap(squeezing)
    return PreparationRecipe(
        n_modes=2,
        thermal=tuple(float(rng.uniform(0, seed_cap)) for _ in range(2)),
        displacement=tuple(_disk_sample(rng, limits.max_displacement) for _ in range(2)),
        loss=float(rng.uniform(limits.min_loss, 1.0)),
        squeezing=squeezing,
        rotation=float(rng.uniform(0, 2 * math.pi)),
    )


def prepare_gaussian(recipe: PreparationRecipe) -> GaussianState:
    """Realize a recipe with symplectic operations."""
    state = vacuum(recipe.n_modes)
    for mode, mu in enumerate(recipe.thermal):
        state = add_thermal_additive(state, mode, mu)
    if recipe.n_modes == 2:
        state = two_mode_squeeze(state, (0, 1), recipe.squeezing)
    state = pure_loss(state, 0, recipe.loss)
    for mode, alpha in enumerate(recipe.displacement):
        state = displace(state, mode, alpha)
    return phase_rotate(state, 0, recipe.rotation)


def prepare_fock(recipe: PreparationRecipe, cutoff: int | None = None) -> FockDensityMatrix:
    """Realize a recipe with truncated density matrices."""
    if cutoff is None:
        cutoff = SINGLE_MODE_CUTOFF if recipe.n_modes == 1 else PAIR_CUTOFF
    rho = thermal_fock(recipe.thermal[0], cutoff)
    if recipe.n_modes == 2:
        rho = tensor_fock(rho, thermal_fock(recipe.thermal[1], cutoff))
        rho = apply_unitary_generator(rho, "two_mode_squeeze", recipe.squeezing)
    rho = attenuate_kraus(rho, recipe.loss, mode=0)
    for mode, alpha in enumerate(recipe.displacement):
        rho = apply_unitary_generator(rho, "displacement", alpha, mode=mode)
    return apply_unitary_generator(rho, "phase", recipe.rotation, mode=0)


@dataclass(frozen=True)
class OracleComparison:
    """One random pair: both fidelities and the truncation loss behind them."""

    index: int
    n_modes: int
    gaussian: float
    fock: float
    leakage: float

    @property
    def error(self) -> float:
        return abs(self.gaussian - self.fock)


@dataclass
class OracleReport:
    """Outcome of an equivalence run."""

    seed: int
    tolerance: float
    comparisons: list[OracleComparison] = field(default_factory=list)

    @property
    def max_error(self) -> float:
        return max((c.error for c in self.comparisons), default=0.0)

    @property
    def max_leakage(self) -> float:
        return max((c.leakage for c in self.comparisons), default=0.0)

    @property
    def failures(self) -> list[OracleComparison]:
        return [c for c in self.comparisons if c.error > self.tolerance]

    @property
    def passed(self) -> bool:
        return not self.failures


def compare_pair(
    first: PreparationRecipe,
    second: PreparationRecipe,
    index: int = 0,
    cutoff: int | None = None,
) -> OracleComparison:
    """Evaluate one pair of recipes both ways.

    ``cutoff`` sets the single-mode truncation; pairs never go above PAIR_CUTOFF.
    """
    if first.n_modes != second.n_modes:
        raise ValueError("a pair must share its mode count")
    if cutoff is not None and first.n_modes == 2:
        cutoff = min(cutoff, PAIR_CUTOFF)
    rho1, rho2 = prepare_fock(first, cutoff), prepare_fock(second, cutoff)
    return OracleComparison(
        index=index,
        n_modes=first.n_modes,
        gaussian=fidelity(prepare_gaussian(first), prepare_gaussian(second)),
        fock=uhlmann_fidelity(rho1, rho2),
        leakage=max(rho1.leakage, rho2.leakage),
    )


def equivalence_report(
    seed: int,
    count: int = 50,
    limits: OracleLimits | None = None,
    tolerance: float = ORACLE_TOL,
    cutoff: int | None = None,
) -> OracleReport:
    """Compare ``count`` random pairs, alternating one and two modes.

    Each pair gets its own generator spawned from ``seed``, so a single
    pair can be replayed without rerunning the others.
    """
    report = OracleReport(seed=seed, tolerance=tolerance)
    children = np.random.SeedSequence(seed).spawn(count)
    for index, child in enumerate(children):
        rng = np.random.default_rng(child)
        n_modes = 1 + index % 2
        first = random_recipe(rng, n_modes, limits)
        second = random_recipe(rng, n_modes, limits)
        report.comparisons.append(compare_pair(first, second, index, cutoff))
    return report
