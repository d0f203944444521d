from pydantic import ConfigDict, Field, model_validator

from .basemodels import ProtoModel


class RaySpec(ProtoModel):
    """
    A point on the ray (lambda_1, lambda_2) = (lambda, alpha * lambda).
    """
    model_config = ConfigDict(populate_by_name=True)

    alpha: float = Field(..., gt=0.0, description="Slope of the ray in the (lambda_1, lambda_2) plane.")
    lambda_: float = Field(..., alias="lambda", ge=0.0, le=1.0, description="Position on the ray, equal to lambda_1.")

    @model_validator(mode="after")
    def _inside_unit_square(self):
        if self.alpha * self.lambda_ > 1.0 + 1.e-12:
            raise ValueError(f"alpha * lambda = {self.alpha * self.lambda_!r} leaves [0, 1]")
        return self

    @property
    def lambda_max(self) -> float:
        """End of the ray inside the unit square, min(1, 1/alpha)."""
        return min(1.0, 1.0 / self.alpha)

    @property
    def proportions(self):
        return (self.lambda_, min(self.alpha * self.lambda_, 1.0))


class DeltaSpec(ProtoModel):
    """
    Proportions (lambda_min, lambda_min + delta_lambda) of two mixtures with identical distinguishing components.
    """
    lambda_min: float = Field(..., gt=0.0, lt=1.0, description="Smaller of the two mixture proportions.")
    delta_lambda: float = Field(..., ge=0.0, description="Gap |lambda_2 - lambda_1| between the proportions.")

    @model_validator(mode="after")
    def _inside_unit_interval(self):
        if self.lambda_min + self.delta_lambda > 1.0 + 1.e-12:
            raise ValueError(f"lambda_min + delta_lambda = {self.lambda_min + self.delta_lambda!r} exceeds 1")
        return self

    @property
    def proportions(self):
        return (self.lambda_min, min(self.lambda_min + self.delta_lambda, 1.0))
