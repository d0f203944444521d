import math
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from pydantic import ConfigDict, Field, field_serializer, field_validator, model_validator

from .basemodels import ProtoModel
from .common_models import Provenance
from .problems import BracketingSweep

#: Slack allowed on the [0, ln 2] range of a symmetric JS divergence.
RANGE_TOLERANCE = 1.e-12


class SweepMetadata(ProtoModel):
    """
    What a sweep evaluated and how finely.
    """
    description: str = Field(..., description="Human-readable scenario description.")
    resolution: int = Field(..., ge=1, description="Number of grid intervals per swept axis.")
    fixed: Dict[str, float] = Field({}, description="Parameters held constant during the sweep.")
    provenance: Provenance = Field(..., description="Creator, version and routine of the sweep.")


class SweepResult(ProtoModel):
    """
    Symmetric JS divergence sampled on a grid of parameter points, in row-major order by the first axis.
    """
    axis_names: Tuple[str, ...] = Field(..., description="Parameter name of each column of `points`.")
    free_axis: Optional[str] = Field(None, description="The axis varied along a 1-D slice; None for 2-D surfaces.")
    points: np.ndarray = Field(..., description="(n_records, n_axes) array of parameter values.")
    values: np.ndarray = Field(..., description="(n_records,) symmetric JS divergence in nats.")
    metadata: SweepMetadata = Field(..., description="Scenario, resolution and provenance.")

    @field_validator("points", "values", mode="before")
    @classmethod
    def _cast_arrays(cls, v, info):
        arr = np.array(v, dtype=float)
        if info.field_name == "points" and arr.ndim == 1:
            arr = arr.reshape(-1, 1)
        arr.setflags(write=False)
        return arr

    @model_validator(mode="after")
    def _consistent_records(self):
        points, values = self.points, self.values
        if points.shape != (values.shape[0], len(self.axis_names)):
            raise ValueError(f"points shape {points.shape} does not match {values.shape[0]} values on axes "
                             f"{list(self.axis_names)}")
        if self.free_axis is not None and self.free_axis not in self.axis_names:
            raise ValueError(f"free_axis {self.free_axis!r} not among {list(self.axis_names)}")
        if values.size and not (np.all(values >= -RANGE_TOLERANCE)
                                and np.all(values <= math.log(2.0) + RANGE_TOLERANCE)):
            raise ValueError("Symmetric JS values must lie in [0, ln 2].")
        return self

    @field_serializer("points", "values")
    def _array_as_list(self, v: np.ndarray):
        return v.tolist()

    def __len__(self) -> int:
        return int(self.values.shape[0])

    def column(self, name: str) -> np.ndarray:
        """Values of parameter `name` across the records."""
        try:
            return self.points[:, self.axis_names.index(name)]
        except ValueError:
            raise KeyError(f"No axis {name!r} in {list(self.axis_names)}") from None

    def records(self) -> List[Tuple[Tuple[float, ...], float]]:
        """(parameter tuple, value) pairs in stored order."""
        return [(tuple(float(x) for x in p), float(v)) for p, v in zip(self.points, self.values)]

    def __str__(self) -> str:
        return f"{self.__class__.__name__}(axes={list(self.axis_names)}, n={len(self)})"


class MinimizerReport(ProtoModel):
    """
    Grid argmin of a sweep along one free parameter.
    """
    fixed_params: Dict[str, float] = Field({}, description="Parameters held constant, by name.")
    free_param: str = Field(..., description="Parameter the minimum was located in.")
    grid_min_location: float = Field(..., description="Free-parameter value at the grid minimum.")
    grid_min_value: float = Field(..., description="Symmetric JS divergence at the grid minimum, in nats.")
    resolution: float = Field(..., gt=0.0, description="Grid spacing along the free parameter.")


class ObservationCheck(ProtoModel):
    """
    Outcome of one verification sub-suite.
    """
    model_config = ConfigDict(populate_by_name=True)

    name: str = Field(..., description="What was checked.")
    passed: bool = Field(..., alias="pass")
    n_checked: int = Field(0, ge=0, description="Number of individual assertions evaluated.")
    n_failed: int = Field(0, ge=0, description="Number of those that failed.")
    details: Dict[str, Any] = Field({}, description="Worst-case statistics and located minimizers.")


class VerificationReport(ProtoModel):
    """
    Aggregate of all observation sub-suites run with one seed.
    """
    model_config = ConfigDict(populate_by_name=True)

    non_monotone: ObservationCheck = Field(..., alias="observation_1")
    ray_monotone: ObservationCheck = Field(..., alias="observation_2")
    gap_monotone: ObservationCheck = Field(..., alias="observation_3")
    disjoint_split: ObservationCheck = Field(..., alias="observation_4")
    error_bounds: ObservationCheck = Field(..., alias="lin_bounds")
    bracketing: Optional[BracketingSweep] = None
    seed: int
    n_random: int
    passed: bool = Field(..., alias="pass")
    provenance: Optional[Provenance] = None

    @property
    def checks(self) -> List[ObservationCheck]:
        return [self.non_monotone, self.ray_monotone, self.gap_monotone, self.disjoint_split, self.error_bounds]
