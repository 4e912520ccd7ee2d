"""Selfcheck command: run the property suites and summarize them.

Every suite is deterministic for a given config; random suites draw from
rng_seed.
"""

import math
import sys
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from thaqkd.attack import AttackConfig, closed_form_fidelity, closed_form_gap, optimal_p
from thaqkd.commands.common import EXIT_NUMERICAL, Table, run_dataset
from thaqkd.commands.fig4 import fig4_row
from thaqkd.fock.oracle import equivalence_report
from thaqkd.keyrate import bucket_stats, bucket_stats_from_sums, pnrd_stats
from thaqkd.runconfig import RunConfig
from thaqkd.separable import bimodal_inequality_check, survival_audit
from thaqkd.shutter import (
    ShutterConfig,
    minimizing_convolution,
    reflection_staircase,
    shutter_key_rate,
    uniform_travel_times,
)

COLUMNS = ["suite", "checks", "failures", "worst"]

CLOSED_FORM_TOL = 1e-12
TABULATED_TOL = 1e-9
DETECTOR_TOL = 1e-12
BIMODAL_TOL = 1e-12
SURVIVAL_STATES = 1000


@dataclass(frozen=True)
class SuiteResult:
    """Pass count of one suite and its worst deviation."""

    name: str
    checks: int
    failures: int
    worst: float

    @property
    def passed(self) -> bool:
        return self.failures == 0


def oracle_suite(cfg: RunConfig) -> SuiteResult:
    report = equivalence_report(cfg.rng_seed, cfg.oracle_states, cutoff=cfg.cutoff)
    return SuiteResult(
        "oracle", len(report.comparisons), len(report.failures), report.max_error
    )


def closed_form_suite() -> SuiteResult:
    """Limits of the closed form, then agreement with the tabulated states."""
    errors: list[float] = [abs(closed_form_fidelity(1.0, 0.0, 0.0, 1.0) - 1.0)]
    for mu_D in np.linspace(0.0, 5.0, 11):
        errors.append(abs(closed_form_fidelity(1.0, mu_D, 0.0, 1.0) - math.exp(-mu_D)))
    tolerances = [CLOSED_FORM_TOL] * len(errors)

    settings = [(1.0, 0.0), (1.0, 1.0), (0.5, 1.0), (0.1, 1.0), (1e-3, 1.0)]
    settings += [(1.0, 5.0), (0.5, 5.0), (0.1, 5.0), (1e-3, 5.0), (1e-6, 5.0)]
    for N in np.geomspace(1e-2, 10.0, 10):
        for eta, mu_T in settings:
            gap = closed_form_gap(AttackConfig(N=float(N), eta=eta, mu_T=mu_T))
            errors.append(gap.gap if gap.gap is not None else math.inf)
            tolerances.append(TABULATED_TOL)

    failures = sum(1 for e, tol in zip(errors, tolerances, strict=True) if e > tol)
    return SuiteResult("closed_form", len(errors), failures, max(errors))


def p_zero_suite() -> SuiteResult:
    """Squeezing never helps: the best of 64 split points is p = 0."""
    worst = 0.0
    failures = checks = 0
    for N in (1e2, 1e4, 1e8):
        for eta in (1e-9, 1e-6, 1e-3):
            for mu_T in (0.0, 1.0, 5.0):
                best = optimal_p(N, eta, mu_T, refine=False)
                checks += 1
                worst = max(worst, best.p)
                if best.p != 0.0:
                    failures += 1
    return SuiteResult("p_zero", checks, failures, worst)


def detector_suite() -> SuiteResult:
    """Photon-number resolution changes the yield but not the error rate."""
    worst = 0.0
    failures = checks = 0
    for mu_T in np.linspace(0.0, 10.0, 20):
        for T in np.linspace(0.05, 1.0, 20):
            for Q in np.linspace(0.0, 0.5, 20):
                bucket = bucket_stats(mu_T, T, Q)
                summed = bucket_stats_from_sums(mu_T, T, Q)
                pnrd = pnrd_stats(mu_T, T, Q)
                deviation = max(
                    abs(pnrd.eps - bucket.eps),
                    abs(summed.eps - bucket.eps),
                    abs(summed.p_succ - bucket.p_succ),
                )
                checks += 1
                worst = max(worst, deviation)
                if deviation > DETECTOR_TOL or pnrd.p_succ > bucket.p_succ + DETECTOR_TOL:
                    failures += 1
    return SuiteResult("detectors", checks, failures, worst)


def survival_suite(cfg: RunConfig) -> SuiteResult:
    audit = survival_audit(cfg.rng_seed, SURVIVAL_STATES)
    worst = max(0.0, -audit.worst_margin)
    failures = audit.failures
    checks = len(audit.checks)
    for y in np.linspace(0.0, 1.0, 200):
        for p in np.linspace(0.0, 1.0, 200):
            value = bimodal_inequality_check(float(y), float(p))
            checks += 1
            worst = max(worst, -value)
            if value < -BIMODAL_TOL:
                failures += 1
    return SuiteResult("survival", checks, failures, worst)


def ordering_suite() -> SuiteResult:
    """Separable > Lucamarini > thermal mu_T=1 > thermal mu_T=5 on 100 points."""
    rows = [fig4_row(i / 100) for i in range(1, 101)]
    failures = sum(1 for r in rows if not r[1] > r[2] > r[3] > r[4])
    worst = max(0.0, *(r[2] - r[1] for r in rows))
    return SuiteResult("fig4_ordering", len(rows), failures, worst)


def exhaustive_reflections(t_L: Fraction, t_S: Fraction, R_max: int) -> int | None:
    """Reflection count by exact rational iteration, times in units of t_P."""
    for r in range(1, R_max + 1):
        if (r * t_L) % 1 <= t_S:
            return r
    return None


def shutter_suite(cfg: RunConfig) -> SuiteResult:
    """Staircase against exact arithmetic, then convolution sanity."""
    shutter = ShutterConfig(t_S=0.1, t_P=1.0, R_max=cfg.R_max)
    points = cfg.t_L_points
    staircase = reflection_staircase(shutter, uniform_travel_times(points))
    failures = 0
    for i, counted in enumerate(staircase, start=1):
        if exhaustive_reflections(Fraction(i, points), Fraction(1, 10), cfg.R_max) != counted:
            failures += 1

    t_values = uniform_travel_times(points)
    rates = [
        shutter_key_rate(ShutterConfig(t_L=t, N=cfg.shutter_N, eta_R=cfg.eta_R)).K
        for t in t_values
    ]
    identity = minimizing_convolution(t_values, rates, 0.0)
    convolved = minimizing_convolution(t_values, rates, cfg.delta)
    worst = float(np.max(np.abs(identity - np.asarray(rates))))
    if worst > 0.0:
        failures += 1
    if np.any(convolved > np.asarray(rates)):
        failures += 1
    return SuiteResult("shutter", len(staircase) + 2, failures, worst)


def build_selfcheck(cfg: RunConfig) -> Table:
    suites = [
        oracle_suite(cfg),
        closed_form_suite(),
        p_zero_suite(),
        detector_suite(),
        survival_suite(cfg),
        ordering_suite(),
        shutter_suite(cfg),
    ]
    for suite in suites:
        mark = "✓" if suite.passed else "✗"
        print(
            f"{mark} {suite.name}: {suite.checks - suite.failures}/{suite.checks} passed, "
            f"worst {suite.worst:.3g}",
            file=sys.stderr,
        )
    failed = [s.name for s in suites if not s.passed]
    notes = [f"failed suites: {', '.join(failed)}"] if failed else ["all suites passed"]
    return Table(
        columns=COLUMNS,
        rows=[[s.name, s.checks, s.failures, s.worst] for s in suites],
        notes=notes,
        exit_code=EXIT_NUMERICAL if failed else 0,
    )


def cmd_selfcheck(args: list[str]) -> int:
    """Handle the selfcheck subcommand.

    Args:
        args: Flags such as --rng_seed, --oracle_states, --cutoff

    Returns:
        Exit code (0 when every suite passes, 2 invalid input, 3 otherwise)
    """
    return run_dataset("selfcheck", args, build_selfcheck)
