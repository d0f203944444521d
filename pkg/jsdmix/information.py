"""
Entropy, Kullback-Leibler and Jensen-Shannon divergence of discrete PMFs.

All quantities are in nats. Zero-mass symbols contribute nothing to any sum
(0 log 0 := 0), which :py:func:`scipy.special.entr`, :py:func:`scipy.special.rel_entr`
and :py:func:`scipy.special.xlogy` implement without ever evaluating log(0).
"""

import math
from typing import FrozenSet, List

import numpy as np
from pydantic import ConfigDict, validate_call
from scipy.special import entr, rel_entr, xlogy

from .exceptions import AlphabetMismatchError, ValidationError
from .models.pmf import Pmf, Weight

__all__ = [
    "support", "entropy", "kl_divergence", "js_divergence", "js_divergence_entropy_form", "sym_js", "binary_entropy",
    "convex_combine", "entropy_mass", "kl_mass", "js_mass", "sym_js_mass"
]

#: Accepted deviation of convex-combination weights from a unit total.
WEIGHT_SUM_TOLERANCE = 1.e-12

_validated = validate_call(config=ConfigDict(arbitrary_types_allowed=True))


def _check_alphabets(*pmfs: Pmf) -> None:
    first = pmfs[0].alphabet
    for other in pmfs[1:]:
        if other.alphabet != first:
            raise AlphabetMismatchError(first.labels, other.alphabet.labels)


## Array kernels. Trailing axis indexes the alphabet; leading axes broadcast.


def entropy_mass(mass: np.ndarray) -> np.ndarray:
    """Entropy in nats of mass vector(s) along the last axis."""
    return np.sum(entr(mass), axis=-1)


def kl_mass(mass_1: np.ndarray, mass_2: np.ndarray) -> np.ndarray:
    """KL divergence in nats along the last axis; +inf where absolute continuity fails."""
    return np.sum(rel_entr(mass_1, mass_2), axis=-1)


def js_mass(mass_1: np.ndarray, mass_2: np.ndarray, pi: float) -> np.ndarray:
    """Weighted JS divergence (KL form) along the last axis.

    A term whose weight is zero is dropped entirely, so js_mass(.., 0) and
    js_mass(.., 1) are exactly zero even for disjoint supports.
    """
    mixed = pi * mass_1 + (1.0 - pi) * mass_2
    total = np.zeros(np.broadcast_shapes(np.shape(mass_1), np.shape(mass_2))[:-1])
    if pi > 0.0:
        total = total + pi * kl_mass(mass_1, mixed)
    if pi < 1.0:
        total = total + (1.0 - pi) * kl_mass(mass_2, mixed)
    return total


def sym_js_mass(mass_1: np.ndarray, mass_2: np.ndarray) -> np.ndarray:
    """Symmetric (pi = 1/2) JS divergence along the last axis."""
    return js_mass(mass_1, mass_2, 0.5)


## PMF operations


def support(r: Pmf) -> FrozenSet[int]:
    """Alphabet indices with strictly positive mass."""
    return frozenset(int(i) for i in np.flatnonzero(r.mass > 0.0))


def entropy(r: Pmf) -> float:
    """Shannon entropy H(r) = -sum r(x) ln r(x) over supp(r), in nats."""
    return float(entropy_mass(r.mass))


def kl_divergence(r1: Pmf, r2: Pmf) -> float:
    """Kullback-Leibler divergence D(r1 || r2) in nats.

    Returns ``math.inf`` when supp(r1) is not contained in supp(r2).

    Raises
    ------
    AlphabetMismatchError
        If `r1` and `r2` live on different alphabets.
    """
    _check_alphabets(r1, r2)
    return float(kl_mass(r1.mass, r2.mass))


@_validated
def js_divergence(r1: Pmf, r2: Pmf, pi: Weight) -> float:
    """Jensen-Shannon divergence with weight `pi`, in nats.

    Parameters
    ----------
    r1, r2 : Pmf
        PMFs on one alphabet.
    pi : float
        Weight of `r1`, 0 <= pi <= 1.

    Returns
    -------
    float
        pi D(r1 || r_M) + (1 - pi) D(r2 || r_M) with r_M = pi r1 + (1 - pi) r2. Never infinite.

    Notes
    -----
    Agrees with :py:func:`js_divergence_entropy_form` to roundoff.

    """
    _check_alphabets(r1, r2)
    return float(js_mass(r1.mass, r2.mass, pi))


@_validated
def js_divergence_entropy_form(r1: Pmf, r2: Pmf, pi: Weight) -> float:
    """Jensen-Shannon divergence as H(r_M) - pi H(r1) - (1 - pi) H(r2), in nats."""
    _check_alphabets(r1, r2)
    mixed = pi * r1.mass + (1.0 - pi) * r2.mass
    return float(entropy_mass(mixed) - pi * entropy_mass(r1.mass) - (1.0 - pi) * entropy_mass(r2.mass))


def sym_js(r1: Pmf, r2: Pmf) -> float:
    """Symmetric JS divergence, js_divergence(r1, r2, 1/2); lies in [0, ln 2]."""
    return js_divergence(r1, r2, 0.5)


@_validated
def binary_entropy(x: Weight) -> float:
    """h2(x) = -x ln x - (1 - x) ln(1 - x) in nats, with 0 ln 0 := 0."""
    return float(-xlogy(x, x) - xlogy(1.0 - x, 1.0 - x))


@_validated
def convex_combine(weights: List[Weight], pmfs: List[Pmf]) -> Pmf:
    """Entrywise weighted sum of PMFs.

    Parameters
    ----------
    weights : list of float
        Nonnegative weights summing to one within 1e-12.
    pmfs : list of Pmf
        PMFs on a shared alphabet, same length as `weights`.

    Raises
    ------
    ValidationError
        Length mismatch, empty input, or weights not summing to one.
    AlphabetMismatchError
        PMFs on different alphabets.

    """
    if len(weights) != len(pmfs) or not pmfs:
        raise ValidationError(f"Need equally many weights and PMFs, got {len(weights)} and {len(pmfs)}.")
    if abs(math.fsum(weights) - 1.0) > WEIGHT_SUM_TOLERANCE:
        raise ValidationError(f"Weights must sum to one within {WEIGHT_SUM_TOLERANCE}: {weights}")
    _check_alphabets(*pmfs)

    mass = np.zeros(pmfs[0].size)
    for w, r in zip(weights, pmfs):
        mass = mass + w * r.mass

    return Pmf(alphabet=pmfs[0].alphabet, mass=mass)
