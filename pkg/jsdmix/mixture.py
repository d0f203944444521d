"""
Two-component mixtures with a shared component and their symmetric JS divergence.
"""

import logging
from typing import Sequence, Tuple

import numpy as np

from .exceptions import ValidationError
from .information import convex_combine, js_mass, kl_mass, support, sym_js, sym_js_mass
from .models import DisjointDecomposition, MixtureScenario, Pmf

__all__ = [
    "build_p1", "build_p2", "build_pM", "scenario_sjsd", "scenario_sjsd_grid", "supports_disjoint",
    "disjoint_decomposition", "disjoint_kl_decomposition"
]

logger = logging.getLogger(__name__)


def build_p1(s: MixtureScenario) -> Pmf:
    """p1 = lambda_1 p_tilde_1 + (1 - lambda_1) q."""
    return convex_combine([s.lambda_1, 1.0 - s.lambda_1], [s.p_tilde_1, s.q])


def build_p2(s: MixtureScenario) -> Pmf:
    """p2 = lambda_2 p_tilde_2 + (1 - lambda_2) q."""
    return convex_combine([s.lambda_2, 1.0 - s.lambda_2], [s.p_tilde_2, s.q])


def build_pM(s: MixtureScenario) -> Pmf:
    """Midpoint mixture p_M = p1/2 + p2/2.

    Equals (lambda_1/2) p_tilde_1 + (lambda_2/2) p_tilde_2 + ((2 - lambda_1 - lambda_2)/2) q to roundoff.
    """
    return convex_combine([0.5, 0.5], [build_p1(s), build_p2(s)])


def scenario_sjsd(s: MixtureScenario) -> float:
    """Symmetric JS divergence between p1 and p2 of `s`, in nats."""
    return sym_js(build_p1(s), build_p2(s))


def scenario_sjsd_grid(s: MixtureScenario, lambda_1: Sequence[float], lambda_2: Sequence[float]) -> np.ndarray:
    """Symmetric JS divergence on the outer product of proportion grids.

    Parameters
    ----------
    s : MixtureScenario
        Supplies the components; its own proportions are ignored.
    lambda_1, lambda_2 : array-like
        Proportions in [0, 1].

    Returns
    -------
    ndarray
        (len(lambda_1), len(lambda_2)) array, row index running over `lambda_1`.

    """
    l1 = np.asarray(lambda_1, dtype=float).reshape(-1, 1)
    l2 = np.asarray(lambda_2, dtype=float).reshape(-1, 1)
    if np.any((l1 < 0.0) | (l1 > 1.0)) or np.any((l2 < 0.0) | (l2 > 1.0)):
        raise ValidationError("Mixture proportions must lie in [0, 1].")

    p1 = l1 * s.p_tilde_1.mass + (1.0 - l1) * s.q.mass
    p2 = l2 * s.p_tilde_2.mass + (1.0 - l2) * s.q.mass
    return sym_js_mass(p1[:, np.newaxis, :], p2[np.newaxis, :, :])


def supports_disjoint(s: MixtureScenario) -> bool:
    """True iff neither p_tilde_1 nor p_tilde_2 shares a symbol of positive mass with q."""
    q_support = support(s.q)
    return not (support(s.p_tilde_1) & q_support) and not (support(s.p_tilde_2) & q_support)


def _require_disjoint(s: MixtureScenario) -> None:
    if not supports_disjoint(s):
        raise ValidationError("Decomposition needs supp(p_tilde_i) and supp(q) disjoint for i = 1, 2.")


def disjoint_decomposition(s: MixtureScenario) -> DisjointDecomposition:
    """Split the symmetric JS divergence of a disjoint-support scenario into two terms.

    The proportion term is the symmetric JS divergence of the two-point PMFs
    (lambda_1, 1 - lambda_1) and (lambda_2, 1 - lambda_2); it does not involve any
    component PMF. The content term is ((lambda_1 + lambda_2)/2) times the JS divergence
    of p_tilde_1 and p_tilde_2 at weight lambda_1/(lambda_1 + lambda_2); it does not
    involve q. At lambda_1 = lambda_2 = 0 the content term is 0.

    Raises
    ------
    ValidationError
        If the supports are not disjoint.

    """
    _require_disjoint(s)
    l1, l2 = s.lambda_1, s.lambda_2

    proportion = float(sym_js_mass(np.array([l1, 1.0 - l1]), np.array([l2, 1.0 - l2])))
    if l1 + l2 > 0.0:
        content = 0.5 * (l1 + l2) * float(js_mass(s.p_tilde_1.mass, s.p_tilde_2.mass, l1 / (l1 + l2)))
    else:
        content = 0.0

    proportion, content = max(proportion, 0.0), max(content, 0.0)
    return DisjointDecomposition(proportion_term=proportion, content_term=content, total=proportion + content)


def disjoint_kl_decomposition(s: MixtureScenario) -> Tuple[Tuple[float, float], Tuple[float, float]]:
    """Per-side split of D(p_i || p_M) under disjoint supports.

    For each side i, D(p_i || p_M) = lambda_i D(p_tilde_i || p_tilde) + D(b_i || b_M) with
    p_tilde = (lambda_1 p_tilde_1 + lambda_2 p_tilde_2)/(lambda_1 + lambda_2),
    b_i = (lambda_i, 1 - lambda_i) and b_M = (b_1 + b_2)/2.

    Returns
    -------
    ((content_1, proportion_1), (content_2, proportion_2))
        Averaging the sides termwise gives :py:func:`disjoint_decomposition`.

    """
    _require_disjoint(s)
    l1, l2 = s.lambda_1, s.lambda_2
    lbar = 0.5 * (l1 + l2)
    b_mid = np.array([lbar, 1.0 - lbar])

    if l1 + l2 > 0.0:
        p_tilde = (l1 * s.p_tilde_1.mass + l2 * s.p_tilde_2.mass) / (l1 + l2)
    else:
        p_tilde = None

    sides = []
    for lam, comp in ((l1, s.p_tilde_1), (l2, s.p_tilde_2)):
        content = lam * float(kl_mass(comp.mass, p_tilde)) if lam > 0.0 else 0.0
        proportion = float(kl_mass(np.array([lam, 1.0 - lam]), b_mid))
        sides.append((content, proportion))

    logger.debug(f"KL split of {s}: {sides}")
    return sides[0], sides[1]
