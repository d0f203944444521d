"""
Bayes error of a discrete binary classification problem, the JS-divergence
bounds on it, and a Monte Carlo urn game that estimates it.

The bounds are formed in bits. With gap = h2(pi) - JS(r1, r2; pi),
``gap**2 / 4 <= P_e <= gap / 2`` holds when the gap is measured in bits;
measured in nats the upper bound fails, e.g. for r1 == r2 and pi = 1/2 it gives
ln(2)/2 < 1/2. :py:func:`bracketing_sweep` counts the failures of both conventions.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Tuple

import numpy as np

from .exceptions import BoundsBracketingError, ValidationError
from .information import binary_entropy, js_divergence
from .mixture import build_p1, build_p2
from .models import BoundsReport, BracketingSweep, ClassificationProblem, UrnGameConfig
from .models.problems import InformationUnit
from .sampling import random_problem
from .units import units as info_units
from .util import GENERATOR_NAME, make_rng, provenance_stamp

__all__ = [
    "bayes_error_exact", "js_error_bounds", "simulate_urn_game", "bounds_report", "bracketing_sweep", "urn_problem"
]

logger = logging.getLogger(__name__)

#: Slack on lower <= exact <= upper.
BRACKETING_TOLERANCE = 1.e-12

#: Trials per independently seeded block of the urn game.
SHARD_SIZE = 65536


def bayes_error_exact(p: ClassificationProblem) -> float:
    """MAP error probability, sum_x min(pi r1(x), (1 - pi) r2(x))."""
    return float(np.sum(np.minimum(p.pi * p.r1.mass, (1.0 - p.pi) * p.r2.mass)))


def js_error_bounds(p: ClassificationProblem, units: InformationUnit = "bit") -> Tuple[float, float]:
    """Lower and upper bound on the Bayes error from the weighted JS divergence.

    Parameters
    ----------
    p : ClassificationProblem
        Prior and class-conditional PMFs.
    units : {'bit', 'nat'}
        Unit in which h2(pi) - JS is measured before forming the bounds.

    Returns
    -------
    (lower, upper) : tuple of float
        (gap**2 / 4, gap / 2) with gap = h2(pi) - JS, clipped at 0.

    """
    gap = binary_entropy(p.pi) - js_divergence(p.r1, p.r2, p.pi)
    if gap < -BRACKETING_TOLERANCE:
        logger.warning(f"h2(pi) - JS = {gap!r} nats is negative beyond roundoff")
    gap = info_units.convert(max(gap, 0.0), "nat", units)
    return gap * gap / 4.0, gap / 2.0


def urn_problem(cfg: UrnGameConfig) -> ClassificationProblem:
    """Classification problem behind an urn game: urn A rolls like p1, urn B like p2."""
    return ClassificationProblem(pi=cfg.pi, r1=build_p1(cfg.scenario), r2=build_p2(cfg.scenario))


def _inverse_cdf(mass: np.ndarray) -> np.ndarray:
    cdf = np.cumsum(mass)
    # nothing can be drawn past the last symbol with mass
    cdf[np.flatnonzero(mass > 0.0)[-1]:] = 1.0
    return cdf


def _play_shard(args) -> int:
    rng, n, pi, cdf_a, cdf_b, guess_a = args
    from_a = rng.random(n) < pi
    u = rng.random(n)
    symbols = np.where(from_a, np.searchsorted(cdf_a, u, side="right"), np.searchsorted(cdf_b, u, side="right"))
    return int(np.count_nonzero(guess_a[symbols] != from_a))


def simulate_urn_game(cfg: UrnGameConfig, n_workers: int = 1) -> Tuple[float, float]:
    """Play the urn game `cfg.n_trials` times with the MAP guess.

    Each round draws urn A with probability pi, rolls one die from that urn and
    guesses A iff pi p1(x) >= (1 - pi) p2(x), so ties go to urn A.

    Parameters
    ----------
    cfg : UrnGameConfig
        Scenario, prior, number of rounds and seed.
    n_workers : int, optional
        Threads playing blocks of rounds. Results do not depend on it.

    Returns
    -------
    (error, stderr) : tuple of float
        Fraction of wrong guesses and its binomial standard error sqrt(e (1 - e) / n).

    """
    if n_workers < 1:
        raise ValidationError(f"Need at least one worker, got {n_workers}.")
    problem = urn_problem(cfg)
    p1, p2 = problem.r1.mass, problem.r2.mass
    guess_a = cfg.pi * p1 >= (1.0 - cfg.pi) * p2
    cdf_a, cdf_b = _inverse_cdf(p1), _inverse_cdf(p2)

    n_shards = -(-cfg.n_trials // SHARD_SIZE)
    sizes = [SHARD_SIZE] * (n_shards - 1) + [cfg.n_trials - SHARD_SIZE * (n_shards - 1)]
    children = np.random.SeedSequence(cfg.seed).spawn(n_shards)
    jobs = [(np.random.Generator(np.random.PCG64(child)), n, cfg.pi, cdf_a, cdf_b, guess_a)
            for child, n in zip(children, sizes)]

    if n_workers > 1:
        with ThreadPoolExecutor(max_workers=n_workers) as pool:
            errors = sum(pool.map(_play_shard, jobs))
    else:
        errors = sum(map(_play_shard, jobs))

    rate = errors / cfg.n_trials
    stderr = math.sqrt(rate * (1.0 - rate) / cfg.n_trials)
    logger.info(f"urn game: {errors} errors in {cfg.n_trials} rounds ({n_shards} shards, seed {cfg.seed})")
    return rate, stderr


def bounds_report(p: ClassificationProblem,
                  sim: Optional[UrnGameConfig] = None,
                  *,
                  units: InformationUnit = "bit",
                  n_workers: int = 1) -> BoundsReport:
    """Bounds, exact Bayes error and optional urn-game estimate in one record.

    Raises
    ------
    BoundsBracketingError
        lower <= exact <= upper does not hold within 1e-12.
    ValidationError
        `sim` describes a different problem than `p`.

    """
    js = js_divergence(p.r1, p.r2, p.pi)
    lower, upper = js_error_bounds(p, units=units)
    exact = bayes_error_exact(p)

    if not (lower <= exact + BRACKETING_TOLERANCE and exact <= upper + BRACKETING_TOLERANCE):
        raise BoundsBracketingError(lower, exact, upper, units)

    sim_fields = {}
    if sim is not None:
        if urn_problem(sim) != p:
            raise ValidationError("Urn game does not play the classification problem being bounded.")
        empirical, stderr = simulate_urn_game(sim, n_workers=n_workers)
        sim_fields = dict(empirical=empirical,
                          stderr=stderr,
                          seed=sim.seed,
                          n_trials=sim.n_trials,
                          generator=GENERATOR_NAME)

    return BoundsReport(pi=p.pi,
                        js_nats=js,
                        lower=lower,
                        upper=upper,
                        exact=exact,
                        units=units,
                        provenance=provenance_stamp(__name__),
                        **sim_fields)


def bracketing_sweep(seed: int = 0, n_problems: int = 1000) -> BracketingSweep:
    """Count random problems on which the bounds fail to bracket the Bayes error, in nats and in bits."""
    rng = make_rng(seed)
    counts = {f"{side}_violations_{u}": 0 for side in ("lower", "upper") for u in ("nat", "bit")}

    for _ in range(n_problems):
        problem = random_problem(rng)
        exact = bayes_error_exact(problem)
        for u in ("nat", "bit"):
            lower, upper = js_error_bounds(problem, units=u)
            counts[f"lower_violations_{u}"] += lower > exact + BRACKETING_TOLERANCE
            counts[f"upper_violations_{u}"] += upper < exact - BRACKETING_TOLERANCE

    sweep = BracketingSweep(n_problems=n_problems, seed=seed, **counts)
    logger.info(f"bracketing sweep over {n_problems} problems: {counts}")
    return sweep
