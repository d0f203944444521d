"""
Randomized and fixed-scenario checks of the four mixture observations and of
the divergence bounds on the Bayes error.

Each suite draws from its own PCG64 stream spawned from the run seed, so a run
is reproducible and suites do not perturb each other.
"""

import logging
import math
from typing import Callable, Dict, List

import numpy as np

from ..bounds import bayes_error_exact, bracketing_sweep, js_error_bounds
from ..calculus import (check_rlog_convexity, delta_sjsd, delta_sjsd_derivative, delta_sjsd_derivative_lower_bound,
                        entropy_derivative, finite_difference, ray_sjsd_derivative, ray_sjsd_derivative_terms)
from ..exceptions import ValidationError
from ..information import entropy_mass, kl_divergence, sym_js, sym_js_mass
from ..mixture import build_p1, build_p2, build_pM, disjoint_decomposition, disjoint_kl_decomposition, scenario_sjsd
from ..models import (Alphabet, ClassificationProblem, DeltaSpec, DisjointDecomposition, EpsilonFamily,
                      MixtureScenario, ObservationCheck, Pmf, VerificationReport)
from ..sampling import (random_delta_spec, random_disjoint_scenario, random_pmf, random_ray, random_scenario)
from ..testing import compare, compare_values
from ..util import provenance_stamp, spawn_rngs
from .sweeps import delta_scan, epsilon_scan, find_grid_minimizer, line_eval

__all__ = ["verify_observations"]

logger = logging.getLogger(__name__)

#: Slack on monotonicity and sign assertions.
SLACK = 1.e-12
#: Central-difference step and accepted analytic/numeric gap.
FD_STEP = 1.e-6
FD_TOLERANCE = 1.e-4
#: Accepted distance of a grid minimizer from its expected location.
MINIMIZER_TOLERANCE = 0.05
#: Accepted gap between decomposition and direct divergence.
IDENTITY_TOLERANCE = 1.e-12
#: Points per monotonicity grid.
MONOTONE_POINTS = 201


class _Tally:
    """Collects sub-check verdicts of one suite."""
    def __init__(self, name: str):
        self.name = name
        self.n_checked = 0
        self.n_failed = 0
        self.details: Dict[str, float] = {}

    def add(self, passfail: bool, count: int = 1, failures: int = None) -> bool:
        self.n_checked += count
        if not passfail:
            self.n_failed += count if failures is None else failures
        return passfail

    def result(self) -> ObservationCheck:
        return ObservationCheck(name=self.name,
                                passed=self.n_failed == 0,
                                n_checked=self.n_checked,
                                n_failed=self.n_failed,
                                details=self.details)


def _non_monotone(resolution: int) -> ObservationCheck:
    tally = _Tally("interior minimizers on fixed slices (epsilon family, epsilon=0.3)")
    family = EpsilonFamily(epsilon=0.3)

    cases = [
        ("line lambda_1=0.3", line_eval(family, "lambda_1", 0.3, resolution), 0.5),
        ("line lambda_2=0.7", line_eval(family, "lambda_2", 0.7, resolution), 0.3),
        ("epsilon scan at (0.3, 0.7)", epsilon_scan(0.3, 0.7, resolution), 0.2),
        ("delta scan lambda_2=0.7", delta_scan(0.7, resolution, family), 0.3),
    ]
    for label, result, expected in cases:
        report = find_grid_minimizer(result)
        tally.details[label] = report.grid_min_location
        tally.add(compare_values(expected, report.grid_min_location, label, atol=MINIMIZER_TOLERANCE))

    # minimum strictly below the epsilon = 0 value
    scan = cases[2][1]
    tally.add(compare(True, bool(scan.values[0] > scan.values.min()), "epsilon=0 is not the minimizer"))
    return tally.result()


def _ray_sjsd(s: MixtureScenario, alpha: float, lam) -> np.ndarray:
    lam = np.asarray(lam, dtype=float)[..., np.newaxis]
    lam_2 = np.minimum(alpha * lam, 1.0)
    p1 = lam * s.p_tilde_1.mass + (1.0 - lam) * s.q.mass
    p2 = lam_2 * s.p_tilde_2.mass + (1.0 - lam_2) * s.q.mass
    return sym_js_mass(p1, p2)


def _ray_monotone(rng: np.random.Generator, n_random: int) -> ObservationCheck:
    tally = _Tally("monotonicity along rays (lambda, alpha lambda)")
    worst_slope, worst_grid, worst_fd, worst_entropy_fd = math.inf, math.inf, 0.0, 0.0
    n_convex = 0
    r_grid = np.linspace(0.0, 1.0, 50).tolist()

    for _ in range(n_random):
        s = random_scenario(rng)
        ray = random_ray(rng)

        grid = np.linspace(0.0, ray.lambda_max, MONOTONE_POINTS)
        steps = np.diff(_ray_sjsd(s, ray.alpha, grid))
        worst_grid = min(worst_grid, float(steps.min()))

        slope = ray_sjsd_derivative(s, ray)
        terms = ray_sjsd_derivative_terms(s, ray)
        worst_slope = min(worst_slope, slope, float(terms.min()))

        numeric = finite_difference(lambda x: float(_ray_sjsd(s, ray.alpha, x)), ray.lambda_, FD_STEP)
        worst_fd = max(worst_fd, abs(slope - numeric))

        a, b = random_pmf(rng, s.alphabet), random_pmf(rng, s.alphabet)
        lam = float(rng.uniform(0.05, 0.95))
        numeric = finite_difference(lambda x: float(entropy_mass(x * a.mass + (1.0 - x) * b.mass)), lam, FD_STEP)
        worst_entropy_fd = max(worst_entropy_fd, abs(entropy_derivative(a, b, lam) - numeric))

        n_convex += check_rlog_convexity(float(rng.random()), 1.0 - float(rng.random()), r_grid)

    tally.details.update(min_grid_step=worst_grid,
                         min_derivative=worst_slope,
                         max_ray_fd_gap=worst_fd,
                         max_entropy_fd_gap=worst_entropy_fd,
                         convex_cases=n_convex)
    tally.add(compare(True, worst_grid >= -SLACK, "sjsd nondecreasing on ray grids"), n_random)
    tally.add(compare(True, worst_slope >= -SLACK, "ray derivative and its summands >= 0"), n_random)
    tally.add(compare_values(0.0, worst_fd, "ray derivative vs central difference", atol=FD_TOLERANCE), n_random)
    tally.add(compare_values(0.0, worst_entropy_fd, "entropy derivative vs central difference", atol=FD_TOLERANCE),
              n_random)
    tally.add(compare(n_random, n_convex, "r log(lambda r + q) convex"), n_random, n_random - n_convex)
    return tally.result()


def _gap_monotone(rng: np.random.Generator, n_random: int) -> ObservationCheck:
    tally = _Tally("monotonicity in |lambda_1 - lambda_2| with p_tilde_1 = p_tilde_2")
    worst_slope, worst_grid, worst_gap, worst_fd = math.inf, math.inf, math.inf, 0.0
    alphabet = Alphabet.range(6)

    for _ in range(n_random):
        p_tilde, q = random_pmf(rng, alphabet), random_pmf(rng, alphabet)
        spec = random_delta_spec(rng, interior=0.01)

        deltas = np.linspace(0.0, 1.0 - spec.lambda_min, MONOTONE_POINTS)
        p1 = spec.lambda_min * p_tilde.mass + (1.0 - spec.lambda_min) * q.mass
        p2 = (spec.lambda_min + deltas)[:, np.newaxis] * p_tilde.mass + \
             (1.0 - spec.lambda_min - deltas)[:, np.newaxis] * q.mass
        worst_grid = min(worst_grid, float(np.diff(sym_js_mass(p1, p2)).min()))

        slope = delta_sjsd_derivative(p_tilde, q, spec)
        bound = delta_sjsd_derivative_lower_bound(p_tilde, q, spec)
        worst_slope = min(worst_slope, slope, bound)
        worst_gap = min(worst_gap, slope - bound)

        def along(x: float) -> float:
            return delta_sjsd(p_tilde, q, DeltaSpec(lambda_min=spec.lambda_min, delta_lambda=x))

        worst_fd = max(worst_fd, abs(slope - finite_difference(along, spec.delta_lambda, FD_STEP)))

    tally.details.update(min_grid_step=worst_grid, min_derivative=worst_slope, min_bound_gap=worst_gap,
                         max_fd_gap=worst_fd)
    tally.add(compare(True, worst_grid >= -SLACK, "sjsd nondecreasing in delta lambda"), n_random)
    tally.add(compare(True, worst_slope >= -SLACK, "delta derivative and its lower bound >= 0"), n_random)
    tally.add(compare(True, worst_gap >= -SLACK, "lower bound below delta derivative"), n_random)
    tally.add(compare_values(0.0, worst_fd, "delta derivative vs central difference", atol=FD_TOLERANCE), n_random)
    return tally.result()


def _disjoint_split(rng: np.random.Generator, n_random: int,
                   decomposition: Callable[[MixtureScenario], DisjointDecomposition]) -> ObservationCheck:
    tally = _Tally("q-free decomposition under disjoint supports")
    direct: List[float] = []
    split: List[float] = []
    kl_direct: List[float] = []
    kl_split: List[float] = []

    for _ in range(n_random):
        s = random_disjoint_scenario(rng)
        direct.append(scenario_sjsd(s))
        split.append(decomposition(s).total)

        pM = build_pM(s)
        sides = disjoint_kl_decomposition(s)
        kl_direct.extend([kl_divergence(build_p1(s), pM), kl_divergence(build_p2(s), pM)])
        kl_split.extend([sum(side) for side in sides])

    tally.add(compare_values(direct, split, "decomposition total vs direct sjsd", atol=IDENTITY_TOLERANCE), n_random,
              int(np.count_nonzero(np.abs(np.subtract(direct, split)) > IDENTITY_TOLERANCE)))
    tally.add(compare_values(kl_direct, kl_split, "per-side KL split vs direct KL", atol=IDENTITY_TOLERANCE), n_random)

    # corner cases on one fixed disjoint scenario
    s = EpsilonFamily(epsilon=0.3).disjoint_scenario()
    tally.add(compare_values(math.log(2.0), decomposition(s.with_proportions(1.0, 0.0)).total, "corner (1, 0) is ln 2",
                             atol=IDENTITY_TOLERANCE))
    lam = 0.4
    tally.add(compare_values(lam * sym_js(s.p_tilde_1, s.p_tilde_2),
                             decomposition(s.with_proportions(lam, lam)).total,
                             "equal proportions scale sjsd of components",
                             atol=IDENTITY_TOLERANCE))
    tally.add(compare_values(0.0, decomposition(s.with_proportions(0.0, 0.0)).total, "corner (0, 0) is 0",
                             atol=IDENTITY_TOLERANCE))

    tally.details.update(max_gap=float(np.max(np.abs(np.subtract(direct, split)))))
    return tally.result()


def _error_bounds(seed: int, n_random: int):
    tally = _Tally("Bayes error bracketed by JS bounds (bits)")
    sweep = bracketing_sweep(seed=seed, n_problems=n_random)
    tally.add(compare(True, sweep.holds("bit"), "bracketing in bits"), n_random,
              sweep.lower_violations_bit + sweep.upper_violations_bit)

    alphabet = Alphabet.range(2)
    disjoint = ClassificationProblem(pi=0.5, r1=Pmf.point(alphabet, 1), r2=Pmf.point(alphabet, 2))
    tally.add(compare_values([0.0, 0.0, 0.0], [*js_error_bounds(disjoint), bayes_error_exact(disjoint)],
                             "disjoint supports give (0, 0, 0)", atol=IDENTITY_TOLERANCE))

    tally.details.update(convention=sweep.convention,
                         upper_violations_nat=sweep.upper_violations_nat,
                         lower_violations_nat=sweep.lower_violations_nat)
    return tally.result(), sweep


def verify_observations(seed: int = 0,
                        n_random: int = 1000,
                        *,
                        resolution: int = 200,
                        decomposition: Callable[[MixtureScenario], DisjointDecomposition] = disjoint_decomposition
                        ) -> VerificationReport:
    """Run every observation suite and the bounds sweep.

    Parameters
    ----------
    seed : int
        Seed of the whole run; each suite gets its own spawned stream.
    n_random : int
        Random scenarios (or problems) per randomized suite.
    resolution : int
        Grid intervals of the fixed-scenario slices.
    decomposition : callable, optional
        Disjoint-support decomposition under test.

    Returns
    -------
    VerificationReport
        ``passed`` is True iff every suite passed.

    """
    if n_random < 1:
        raise ValidationError(f"Need at least one random case per suite, got n_random={n_random}.")
    rng_2, rng_3, rng_4 = spawn_rngs(seed, 3)

    checks = {
        "non_monotone": _non_monotone(resolution),
        "ray_monotone": _ray_monotone(rng_2, n_random),
        "gap_monotone": _gap_monotone(rng_3, n_random),
        "disjoint_split": _disjoint_split(rng_4, n_random, decomposition),
    }
    checks["error_bounds"], sweep = _error_bounds(seed, n_random)

    passed = all(c.passed for c in checks.values())
    logger.info(f"verification with seed {seed}: {'PASSED' if passed else 'FAILED'}")
    return VerificationReport(**checks,
                              bracketing=sweep,
                              seed=seed,
                              n_random=n_random,
                              passed=passed,
                              provenance=provenance_stamp(__name__))
