"""
Seeded random streams.

Every stochastic routine in JSDMix draws from a PCG64 bit generator built from
an explicit seed. Independent sub-streams come from
:py:meth:`numpy.random.SeedSequence.spawn`, so a given (seed, index) pair always
yields the same stream no matter how work is scheduled.
"""

from typing import List

import numpy as np

__all__ = ["GENERATOR_NAME", "make_rng", "spawn_rngs"]

GENERATOR_NAME = "PCG64"


def make_rng(seed: int) -> np.random.Generator:
    """NumPy generator on a PCG64 stream seeded with `seed`."""

    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def spawn_rngs(seed: int, n: int) -> List[np.random.Generator]:
    """`n` independent PCG64 generators derived from (`seed`, index)."""

    children = np.random.SeedSequence(seed).spawn(n)
    return [np.random.Generator(np.random.PCG64(child)) for child in children]
