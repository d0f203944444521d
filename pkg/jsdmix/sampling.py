"""
Random PMFs, scenarios and problems for the randomized checks.

PMFs follow a flat Dirichlet law, drawn as independent unit-exponential
variates divided by their total; they have full support on the requested
symbols with probability one. Every function takes an explicit
:py:class:`numpy.random.Generator`.
"""

import math
from typing import Optional, Sequence

import numpy as np

from .models import Alphabet, ClassificationProblem, DeltaSpec, MixtureScenario, Pmf, RaySpec

__all__ = [
    "random_pmf", "random_scenario", "random_disjoint_scenario", "random_problem", "random_ray", "random_delta_spec"
]

#: Alphabet size of randomized scenarios.
SCENARIO_SIZE = 6


def random_pmf(rng: np.random.Generator, alphabet: Alphabet, on: Optional[Sequence[int]] = None) -> Pmf:
    """Flat-Dirichlet PMF over the alphabet positions `on` (all positions by default)."""
    idx = np.arange(alphabet.size) if on is None else np.asarray(on, dtype=int)
    draws = rng.standard_exponential(idx.size)
    mass = np.zeros(alphabet.size)
    mass[idx] = draws / draws.sum()
    return Pmf(alphabet=alphabet, mass=mass)


def random_scenario(rng: np.random.Generator, size: int = SCENARIO_SIZE) -> MixtureScenario:
    """Full-support components and proportions uniform on [0, 1]."""
    alphabet = Alphabet.range(size)
    p_tilde_1, p_tilde_2, q = (random_pmf(rng, alphabet) for _ in range(3))
    lambda_1, lambda_2 = rng.random(2)
    return MixtureScenario(p_tilde_1=p_tilde_1,
                           p_tilde_2=p_tilde_2,
                           q=q,
                           lambda_1=float(lambda_1),
                           lambda_2=float(lambda_2))


def random_disjoint_scenario(rng: np.random.Generator, size: int = SCENARIO_SIZE) -> MixtureScenario:
    """Distinguishing components on the first half of the alphabet, q on the second half."""
    alphabet = Alphabet.range(size)
    half = size // 2
    p_tilde_1 = random_pmf(rng, alphabet, on=range(half))
    p_tilde_2 = random_pmf(rng, alphabet, on=range(half))
    q = random_pmf(rng, alphabet, on=range(half, size))
    lambda_1, lambda_2 = rng.random(2)
    return MixtureScenario(p_tilde_1=p_tilde_1,
                           p_tilde_2=p_tilde_2,
                           q=q,
                           lambda_1=float(lambda_1),
                           lambda_2=float(lambda_2))


def random_problem(rng: np.random.Generator, size: Optional[int] = None) -> ClassificationProblem:
    """Prior uniform on [0, 1], class PMFs flat Dirichlet on 2 to 8 symbols."""
    if size is None:
        size = int(rng.integers(2, 9))
    alphabet = Alphabet.range(size)
    pi = float(rng.random())
    return ClassificationProblem(pi=pi, r1=random_pmf(rng, alphabet), r2=random_pmf(rng, alphabet))


def random_ray(rng: np.random.Generator, interior: float = 0.1) -> RaySpec:
    """Slope log-uniform on [0.1, 10]; position uniform on the middle of the ray.

    The position is drawn from [interior, 1 - interior] times the ray's end min(1, 1/alpha).
    """
    alpha = math.exp(rng.uniform(math.log(0.1), math.log(10.0)))
    lambda_max = min(1.0, 1.0 / alpha)
    lam = rng.uniform(interior, 1.0 - interior) * lambda_max
    return RaySpec(alpha=alpha, lambda_=lam)


def random_delta_spec(rng: np.random.Generator, interior: float = 0.0) -> DeltaSpec:
    """lambda_min uniform on [0.05, 0.95]; delta_lambda uniform on [interior, 1 - interior] times 1 - lambda_min."""
    lambda_min = float(rng.uniform(0.05, 0.95))
    delta_lambda = float(rng.uniform(interior, 1.0 - interior) * (1.0 - lambda_min))
    return DeltaSpec(lambda_min=lambda_min, delta_lambda=delta_lambda)
