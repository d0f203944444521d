"""
Grid, line and parameter scans of the symmetric JS divergence of a scenario,
and location of their grid minima.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Optional, Tuple, Union

import numpy as np

from ..exceptions import ValidationError
from ..mixture import scenario_sjsd, scenario_sjsd_grid
from ..models import EpsilonFamily, MinimizerReport, MixtureScenario, SweepMetadata, SweepResult
from ..util import provenance_stamp

__all__ = ["sweep_grid", "line_eval", "epsilon_scan", "delta_scan", "find_grid_minimizer", "LINE_PARAMETERS"]

logger = logging.getLogger(__name__)

LINE_PARAMETERS = ("lambda_1", "lambda_2", "diagonal")

Source = Union[EpsilonFamily, MixtureScenario]


def _as_scenario(source: Source) -> MixtureScenario:
    if isinstance(source, EpsilonFamily):
        return source.scenario()
    if isinstance(source, MixtureScenario):
        return source
    raise ValidationError(f"Cannot sweep a {type(source).__name__}; need an EpsilonFamily or a MixtureScenario.")


def _describe(source: Source) -> str:
    if isinstance(source, EpsilonFamily):
        return f"epsilon family, epsilon={source.epsilon}"
    return f"scenario on alphabet {list(source.alphabet.labels)}"


def _grid(resolution: int, upper: float = 1.0) -> np.ndarray:
    if resolution < 2:
        raise ValidationError(f"Grid resolution must be at least 2, got {resolution}.")
    return np.linspace(0.0, upper, resolution + 1)


def _metadata(source: Source, resolution: int, routine: str, fixed: Optional[Dict[str, float]] = None,
              description: Optional[str] = None) -> SweepMetadata:
    return SweepMetadata(description=description or _describe(source),
                         resolution=resolution,
                         fixed=fixed or {},
                         provenance=provenance_stamp(routine))


def sweep_grid(source: Source, resolution: int = 200, n_workers: int = 1) -> SweepResult:
    """Symmetric JS divergence on the (resolution + 1)^2 grid over (lambda_1, lambda_2) in [0, 1]^2.

    Parameters
    ----------
    source : EpsilonFamily or MixtureScenario
        Supplies p_tilde_1, p_tilde_2 and q; proportions of a scenario are ignored.
    resolution : int, optional
        Grid intervals per axis, at least 2.
    n_workers : int, optional
        Threads evaluating rows. The output order does not depend on it.

    Returns
    -------
    SweepResult
        Records in row-major order: lambda_1 outer, lambda_2 inner.

    Raises
    ------
    ValidationError
        Resolution below 2 or fewer than one worker.

    """
    s = _as_scenario(source)
    axis = _grid(resolution)
    if n_workers < 1:
        raise ValidationError(f"Need at least one worker, got {n_workers}.")

    def row(l1: float) -> np.ndarray:
        return scenario_sjsd_grid(s, [l1], axis)[0]

    if n_workers > 1:
        with ThreadPoolExecutor(max_workers=n_workers) as pool:
            rows = list(pool.map(row, axis))
    else:
        rows = [row(l1) for l1 in axis]

    l1, l2 = np.meshgrid(axis, axis, indexing="ij")
    logger.info(f"swept {axis.size}x{axis.size} grid of {_describe(source)}")
    return SweepResult(axis_names=("lambda_1", "lambda_2"),
                       points=np.column_stack([l1.ravel(), l2.ravel()]),
                       values=np.concatenate(rows),
                       metadata=_metadata(source, resolution, "jsdmix.experiments.sweep_grid"))


def line_eval(source: Source, fixed: str, value: Optional[float] = None, resolution: int = 200) -> SweepResult:
    """One-dimensional slice of the (lambda_1, lambda_2) surface.

    Parameters
    ----------
    source : EpsilonFamily or MixtureScenario
        Supplies the components.
    fixed : {'lambda_1', 'lambda_2', 'diagonal'}
        Proportion held at `value`, or 'diagonal' for lambda_1 = lambda_2 = lambda.
    value : float, optional
        Held proportion; ignored on the diagonal.
    resolution : int, optional
        Grid intervals along the free proportion.

    """
    if fixed not in LINE_PARAMETERS:
        raise ValidationError(f"Unknown line parameter '{fixed}', choose from {LINE_PARAMETERS}.")
    if fixed != "diagonal" and (value is None or not 0.0 <= value <= 1.0):
        raise ValidationError(f"Line fixing {fixed} needs a value in [0, 1], got {value}.")

    s = _as_scenario(source)
    free = _grid(resolution)

    if fixed == "lambda_1":
        values = scenario_sjsd_grid(s, [value], free)[0]
        points = np.column_stack([np.full_like(free, value), free])
        free_axis, held = "lambda_2", {"lambda_1": value}
    elif fixed == "lambda_2":
        values = scenario_sjsd_grid(s, free, [value])[:, 0]
        points = np.column_stack([free, np.full_like(free, value)])
        free_axis, held = "lambda_1", {"lambda_2": value}
    else:
        values = np.diagonal(scenario_sjsd_grid(s, free, free)).copy()
        points = np.column_stack([free, free])
        free_axis, held = "lambda_1", {}

    return SweepResult(axis_names=("lambda_1", "lambda_2"),
                       free_axis=free_axis,
                       points=points,
                       values=values,
                       metadata=_metadata(source, resolution, "jsdmix.experiments.line_eval", held,
                                          f"{_describe(source)}, line {fixed}"))


def epsilon_scan(lambda_1: float,
                 lambda_2: float,
                 resolution: int = 200,
                 *,
                 disjoint: bool = False) -> SweepResult:
    """Symmetric JS divergence of the epsilon family at fixed proportions, epsilon over [0, 1].

    With `disjoint`, the family's q is replaced by the uniform PMF on {3, 4, 5, 6}.
    """
    eps = _grid(resolution)
    values = []
    for e in eps:
        family = EpsilonFamily(epsilon=float(e))
        s = family.disjoint_scenario(lambda_1, lambda_2) if disjoint else family.scenario(lambda_1, lambda_2)
        values.append(scenario_sjsd(s))

    description = "epsilon family" + (" with disjoint q" if disjoint else "")
    return SweepResult(axis_names=("epsilon",),
                       free_axis="epsilon",
                       points=eps,
                       values=values,
                       metadata=SweepMetadata(description=description,
                                              resolution=resolution,
                                              fixed={"lambda_1": lambda_1, "lambda_2": lambda_2},
                                              provenance=provenance_stamp("jsdmix.experiments.epsilon_scan")))


def delta_scan(lambda_2: float = 0.7,
               resolution: int = 200,
               source: Optional[Source] = None,
               *,
               same_components: bool = False) -> SweepResult:
    """Symmetric JS divergence at fixed lambda_2 for lambda_1 over [0, lambda_2].

    Parameters
    ----------
    lambda_2 : float
        Held proportion; the scan includes lambda_1 = lambda_2.
    resolution : int
        Grid intervals on [0, lambda_2].
    source : EpsilonFamily or MixtureScenario, optional
        Defaults to the epsilon family at epsilon = 0.3.
    same_components : bool
        Use p_tilde_1 for both mixtures, so the divergence depends on |lambda_1 - lambda_2| alone.

    """
    if not 0.0 < lambda_2 <= 1.0:
        raise ValidationError(f"delta scan needs 0 < lambda_2 <= 1, got {lambda_2}.")
    source = source if source is not None else EpsilonFamily(epsilon=0.3)
    s = _as_scenario(source)
    if same_components:
        s = MixtureScenario(p_tilde_1=s.p_tilde_1, p_tilde_2=s.p_tilde_1, q=s.q, lambda_1=0.0, lambda_2=0.0)

    free = _grid(resolution, upper=lambda_2)
    values = scenario_sjsd_grid(s, free, [lambda_2])[:, 0]

    description = _describe(source) + (", p_tilde_2 := p_tilde_1" if same_components else "")
    return SweepResult(axis_names=("lambda_1", "lambda_2"),
                       free_axis="lambda_1",
                       points=np.column_stack([free, np.full_like(free, lambda_2)]),
                       values=values,
                       metadata=_metadata(source, resolution, "jsdmix.experiments.delta_scan", {"lambda_2": lambda_2},
                                          description))


def find_grid_minimizer(result: SweepResult, free_axis: Optional[str] = None) -> MinimizerReport:
    """Grid location and value of the smallest record.

    Among records attaining the minimum exactly, the one with the smallest value of
    the free parameter wins.

    Raises
    ------
    ValidationError
        Empty sweep, or no free axis given nor recorded.

    """
    if len(result) == 0:
        raise ValidationError("Cannot locate the minimum of an empty sweep.")
    free_axis = free_axis or result.free_axis
    if free_axis is None:
        raise ValidationError("Name the free axis to minimize a surface sweep.")

    free = result.column(free_axis)
    best = np.flatnonzero(result.values == result.values.min())
    pick = best[np.argmin(free[best])]

    span = float(free.max() - free.min())
    spacing = span / result.metadata.resolution if span > 0.0 else 1.0 / result.metadata.resolution

    report = MinimizerReport(fixed_params=dict(result.metadata.fixed),
                             free_param=free_axis,
                             grid_min_location=float(free[pick]),
                             grid_min_value=float(result.values[pick]),
                             resolution=spacing)
    logger.debug(f"grid minimum over {free_axis}: {report.grid_min_location} -> {report.grid_min_value}")
    return report
