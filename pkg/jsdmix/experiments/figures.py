"""
Plot data for the divergence surfaces, their slices and the parameter scans.
"""

import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from ..models import EpsilonFamily, SweepMetadata, SweepResult
from ..util import provenance_stamp
from .io import emit_csv, emit_json
from .sweeps import delta_scan, epsilon_scan, find_grid_minimizer, line_eval, sweep_grid

__all__ = ["emit_figure_data", "FIGURE_FILES"]

logger = logging.getLogger(__name__)

#: Slices making up each line family: (fixed parameter, value).
LINES: Tuple[Tuple[str, Optional[float]], ...] = (("lambda_1", 0.3), ("lambda_2", 0.7), ("diagonal", None))

FIGURE_FILES = (
    "surface_shared_q.csv",
    "epsilon_scan.csv",
    "surface_disjoint_q.csv",
    "lines_shared_q.csv",
    "delta_scan.csv",
    "lines_disjoint_q.csv",
)


def _line_family(source, resolution: int, description: str) -> Tuple[SweepResult, List[Dict]]:
    lines = [line_eval(source, fixed, value, resolution) for fixed, value in LINES]
    groups, start = [], 0
    for (fixed, value), line in zip(LINES, lines):
        groups.append({"line": fixed, "value": value, "first_row": start, "n_rows": len(line)})
        start += len(line)

    stacked = SweepResult(axis_names=("lambda_1", "lambda_2"),
                          points=np.vstack([line.points for line in lines]),
                          values=np.concatenate([line.values for line in lines]),
                          metadata=SweepMetadata(description=description,
                                                 resolution=resolution,
                                                 provenance=provenance_stamp("jsdmix.experiments.line_family")))
    return stacked, groups


def emit_figure_data(out_dir: Union[str, Path],
                     epsilon: float = 0.3,
                     resolution: int = 200,
                     n_workers: int = 1) -> Dict:
    """Write the six plot-data CSV files and ``figures.json`` describing them into `out_dir`.

    Parameters
    ----------
    out_dir : str or Path
        Created if missing.
    epsilon : float
        Epsilon of the scenario family.
    resolution : int
        Grid intervals per swept axis.
    n_workers : int
        Threads for the surface sweeps.

    Returns
    -------
    dict
        The metadata written to ``figures.json``.

    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    family = EpsilonFamily(epsilon=epsilon)
    disjoint = family.disjoint_scenario()

    lines_shared, groups_shared = _line_family(family, resolution, f"line family, epsilon={epsilon}")
    lines_disjoint, groups_disjoint = _line_family(disjoint, resolution,
                                                   f"line family, epsilon={epsilon}, q uniform on {{3, 4, 5, 6}}")
    results = dict(zip(FIGURE_FILES, (
        sweep_grid(family, resolution, n_workers=n_workers),
        epsilon_scan(0.3, 0.7, resolution),
        sweep_grid(disjoint, resolution, n_workers=n_workers),
        lines_shared,
        delta_scan(0.7, resolution, family),
        lines_disjoint,
    )))

    files = {}
    for name, result in results.items():
        emit_csv(result, out / name)
        files[name] = {
            "description": result.metadata.description,
            "columns": list(result.axis_names) + ["sjsd_nats"],
            "n_rows": len(result),
            "fixed": result.metadata.fixed,
        }
    files["lines_shared_q.csv"]["lines"] = groups_shared
    files["lines_disjoint_q.csv"]["lines"] = groups_disjoint

    minimizers = {
        "epsilon_scan.csv": find_grid_minimizer(results["epsilon_scan.csv"]),
        "delta_scan.csv": find_grid_minimizer(results["delta_scan.csv"]),
    }

    metadata = {
        "epsilon": epsilon,
        "resolution": resolution,
        "files": files,
        "minimizers": minimizers,
        "provenance": provenance_stamp(__name__),
    }
    emit_json(metadata, out / "figures.json")
    logger.info(f"wrote {len(FIGURE_FILES)} plot-data files to {out}")
    return metadata
