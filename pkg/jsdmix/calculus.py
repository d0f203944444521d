"""
Analytic derivatives of the symmetric JS divergence of two mixtures, with the
central finite difference used to validate them.

All derivatives follow from dH(r)/dlambda = -sum_x dr(x)/dlambda (1 + ln r(x)) with
the 0 ln 0 := 0 extension; a symbol whose mass vanishes while its rate does not
makes the derivative unbounded and raises :py:class:`UnboundedDerivativeError`.
"""

import logging
from typing import Annotated, Callable, List

import numpy as np
from pydantic import ConfigDict, Field, validate_call
from scipy.special import log1p, xlogy

from .exceptions import AlphabetMismatchError, UnboundedDerivativeError, ValidationError
from .information import sym_js_mass
from .models import DeltaSpec, MixtureScenario, Pmf, RaySpec, Weight

__all__ = [
    "entropy_derivative", "ray_sjsd_derivative", "ray_sjsd_derivative_terms", "delta_sjsd", "delta_sjsd_derivative",
    "delta_sjsd_derivative_lower_bound", "check_rlog_convexity", "finite_difference"
]

logger = logging.getLogger(__name__)

#: Most negative second difference still accepted as convex.
CONVEXITY_TOLERANCE = -1.e-12
#: Relative spread of grid spacings below which a grid counts as uniform.
UNIFORM_GRID_RTOL = 1.e-9

_validated = validate_call(config=ConfigDict(arbitrary_types_allowed=True))


def _guard_log_zero(where: str, mass: np.ndarray, rate: np.ndarray) -> None:
    bad = np.flatnonzero((mass <= 0.0) & (rate != 0.0))
    if bad.size:
        raise UnboundedDerivativeError(where, bad.tolist())


def _entropy_rate(mass: np.ndarray, rate: np.ndarray) -> np.ndarray:
    # per-symbol -dr (1 + ln r); xlogy keeps 0 ln 0 at 0
    return -(rate + xlogy(rate, mass))


@_validated
def entropy_derivative(a: Pmf, b: Pmf, lambda_: Weight) -> float:
    """d/dlambda of H(lambda a + (1 - lambda) b), in nats.

    Parameters
    ----------
    a, b : Pmf
        Segment end points on one alphabet.
    lambda_ : float
        Position on the segment.

    Raises
    ------
    UnboundedDerivativeError
        Some symbol has zero mass at `lambda_` but a(x) != b(x).
    AlphabetMismatchError
        `a` and `b` live on different alphabets.

    """
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError(a.alphabet.labels, b.alphabet.labels)
    mass = lambda_ * a.mass + (1.0 - lambda_) * b.mass
    rate = a.mass - b.mass
    _guard_log_zero("entropy_derivative", mass, rate)
    return float(np.sum(_entropy_rate(mass, rate)))


def _ray_state(s_template: MixtureScenario, ray: RaySpec):
    lam, lam_2 = ray.proportions
    a, b, q = s_template.p_tilde_1.mass, s_template.p_tilde_2.mass, s_template.q.mass

    p1 = lam * a + (1.0 - lam) * q
    p2 = lam_2 * b + (1.0 - lam_2) * q
    dp1 = a - q
    dp2 = ray.alpha * (b - q)
    return p1, p2, dp1, dp2


def ray_sjsd_derivative_terms(s_template: MixtureScenario, ray: RaySpec) -> np.ndarray:
    """Per-symbol summands of d/dlambda sjsd along the ray (lambda, alpha lambda).

    With r1 = p_tilde_1 - q, r2 = alpha (p_tilde_2 - q) and f(r) = r ln(lambda r + q),
    the summand at x is f(r1)/2 + f(r2)/2 - f((r1 + r2)/2), nonnegative because f is convex in r.

    Returns
    -------
    ndarray
        One summand per alphabet symbol, in nats.

    """
    p1, p2, dp1, dp2 = _ray_state(s_template, ray)
    pM = 0.5 * (p1 + p2)
    dpM = 0.5 * (dp1 + dp2)
    for name, mass, rate in (("p1", p1, dp1), ("p2", p2, dp2), ("p_M", pM, dpM)):
        _guard_log_zero(f"ray_sjsd_derivative ({name})", mass, rate)

    return 0.5 * xlogy(dp1, p1) + 0.5 * xlogy(dp2, p2) - xlogy(dpM, pM)


def ray_sjsd_derivative(s_template: MixtureScenario, ray: RaySpec) -> float:
    """d/dlambda of sjsd(p1, p2) at (lambda_1, lambda_2) = (lambda, alpha lambda).

    Components come from `s_template`; its own proportions are ignored.
    Nonnegative wherever it is bounded.
    """
    return float(np.sum(ray_sjsd_derivative_terms(s_template, ray)))


def _delta_mixtures(p_tilde: Pmf, q: Pmf, spec: DeltaSpec):
    if p_tilde.alphabet != q.alphabet:
        raise AlphabetMismatchError(p_tilde.alphabet.labels, q.alphabet.labels)
    lam_1, lam_2 = spec.proportions
    p1 = lam_1 * p_tilde.mass + (1.0 - lam_1) * q.mass
    p2 = lam_2 * p_tilde.mass + (1.0 - lam_2) * q.mass
    return p1, p2


def delta_sjsd(p_tilde: Pmf, q: Pmf, spec: DeltaSpec) -> float:
    """sjsd(p1, p2) with p_tilde_1 = p_tilde_2 = `p_tilde` and proportions (lambda, lambda + delta_lambda)."""
    p1, p2 = _delta_mixtures(p_tilde, q, spec)
    return float(sym_js_mass(p1, p2))


def _delta_state(p_tilde: Pmf, q: Pmf, spec: DeltaSpec):
    p1, p2 = _delta_mixtures(p_tilde, q, spec)
    pM = 0.5 * (p1 + p2)
    d = 0.5 * (p_tilde.mass - q.mass)
    _guard_log_zero("delta_sjsd_derivative", pM, d)
    return d, pM


def delta_sjsd_derivative(p_tilde: Pmf, q: Pmf, spec: DeltaSpec) -> float:
    """d/d(delta_lambda) of :py:func:`delta_sjsd`, in nats.

    Notes
    -----
    Evaluates sum_x d(x) log(1 + delta_lambda d(x) / p_M(x)) with d = (p_tilde - q)/2.
    Every summand has the sign of d(x) squared, so the result is nonnegative.

    """
    d, pM = _delta_state(p_tilde, q, spec)
    nz = d != 0.0
    return float(np.sum(d[nz] * log1p(spec.delta_lambda * d[nz] / pM[nz])))


def delta_sjsd_derivative_lower_bound(p_tilde: Pmf, q: Pmf, spec: DeltaSpec) -> float:
    """Nonnegative lower bound on :py:func:`delta_sjsd_derivative`.

    Bounds log(1 + t) below by t/(1 + t) on symbols with d(x) >= 0 and above by t on
    symbols with d(x) < 0, where t = delta_lambda d(x)/p_M(x).
    """
    d, pM = _delta_state(p_tilde, q, spec)
    nz = d != 0.0
    d, pM = d[nz], pM[nz]
    t = spec.delta_lambda * d / pM
    pos = d >= 0.0
    lower = np.sum(d[pos] * t[pos] / (1.0 + t[pos])) + np.sum(d[~pos] * t[~pos])
    return float(lower)


@_validated
def check_rlog_convexity(lambda_: Weight,
                         q_val: Annotated[float, Field(ge=0.0)],
                         r_grid: List[float],
                         tolerance: float = CONVEXITY_TOLERANCE) -> bool:
    """Numerically check that r -> r ln(lambda r + q_val) is convex on `r_grid`.

    Parameters
    ----------
    lambda_ : float
        Slope inside the logarithm, 0 <= lambda_ <= 1.
    q_val : float
        Offset inside the logarithm, nonnegative.
    r_grid : list of float
        Strictly ascending abscissae, at least three. Need not be uniform.
    tolerance : float, optional
        Most negative accepted second-order difference of f.

    Returns
    -------
    bool
        True iff every second-order difference of f along the grid is >= `tolerance`. On a
        non-uniform grid the change of secant slope is multiplied by the local mean spacing.

    Raises
    ------
    ValidationError
        Grid shorter than three points, not strictly ascending, or hitting ln 0 at r != 0.

    """
    r = np.asarray(r_grid, dtype=float)
    if r.size < 3:
        raise ValidationError(f"Convexity check needs at least 3 grid points, got {r.size}.")
    if np.any(np.diff(r) <= 0.0):
        raise ValidationError("Convexity grid must be strictly ascending.")

    with np.errstate(divide="ignore", invalid="ignore"):
        f = xlogy(r, lambda_ * r + q_val)
    if not np.all(np.isfinite(f)):
        raise ValidationError(f"lambda r + q vanishes on the grid (lambda={lambda_}, q={q_val}).")

    h = np.diff(r)
    if np.allclose(h, h[0], rtol=UNIFORM_GRID_RTOL, atol=0.0):
        second = np.diff(f, 2)
    else:
        # slope change scaled back to the size of a second difference
        second = np.diff(np.diff(f) / h) * 0.5 * (h[:-1] + h[1:])
    worst = float(np.min(second))
    if worst < tolerance:
        logger.debug(f"r log(lambda r + q) not convex at lambda={lambda_}, q={q_val}: second difference {worst}")
        return False
    return True


def finite_difference(f: Callable[[float], float], x: float, step: float = 1.e-6) -> float:
    """Central difference (f(x + step) - f(x - step)) / (2 step)."""
    if not step > 0.0:
        raise ValidationError(f"Finite-difference step must be positive, got {step}.")
    return (f(x + step) - f(x - step)) / (2.0 * step)
