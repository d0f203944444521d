import math
from typing import Literal, Optional

from pydantic import Field, model_validator

from .basemodels import ProtoModel
from .common_models import Provenance
from .pmf import Pmf, Weight
from .scenario import MixtureScenario

InformationUnit = Literal["bit", "nat"]


class ClassificationProblem(ProtoModel):
    """
    Binary classification from one discrete feature: class 1 has prior `pi` and feature PMF `r1`,
    class 2 has prior 1 - `pi` and feature PMF `r2`.
    """
    pi: Weight = Field(..., description="Prior probability of class 1.")
    r1: Pmf = Field(..., description="Feature distribution under class 1.")
    r2: Pmf = Field(..., description="Feature distribution under class 2.")

    @model_validator(mode="after")
    def _shared_alphabet(self):
        if self.r1.alphabet != self.r2.alphabet:
            raise ValueError("r1 and r2 must share one alphabet.")
        return self


class UrnGameConfig(ProtoModel):
    """
    Guessing game: urn A (probability `pi`) holds dice rolling like p1 of `scenario`, urn B like p2.
    A player sees one roll and names the urn.
    """
    scenario: MixtureScenario = Field(..., description="Defines the roll distributions p1 (urn A) and p2 (urn B).")
    pi: Weight = Field(0.5, description="Probability of drawing from urn A.")
    n_trials: int = Field(..., ge=1, description="Number of independent rounds.")
    seed: int = Field(0, ge=0, le=2**64 - 1, description="Seed of the PCG64 stream driving the game.")


class BoundsReport(ProtoModel):
    """
    Divergence-based bounds on the Bayes error next to its exact value and, optionally,
    a Monte Carlo estimate.
    """
    pi: float = Field(..., description="Prior of class 1.")
    js_nats: float = Field(..., description="Weighted JS divergence of the class PMFs at weight pi, in nats.")
    lower: float = Field(..., description="(h2(pi) - JS)^2 / 4 in the unit convention `units`.")
    upper: float = Field(..., description="(h2(pi) - JS) / 2 in the unit convention `units`.")
    exact: float = Field(..., description="Bayes (MAP) error probability.")
    empirical: Optional[float] = Field(None, description="Urn-game error fraction, if simulated.")
    stderr: Optional[float] = Field(None, description="Binomial standard error of `empirical`.")
    seed: Optional[int] = Field(None, description="Seed of the simulation.")
    n_trials: Optional[int] = Field(None, description="Rounds simulated.")
    units: InformationUnit = Field("bit", description="Information unit in which the bounds were formed.")
    generator: Optional[str] = Field(None, description="Bit generator driving the simulation.")
    provenance: Optional[Provenance] = Field(None, description="Creator and version of this report.")

    @property
    def js_value(self) -> float:
        return self.js_nats

    @property
    def lower_bound(self) -> float:
        return self.lower

    @property
    def upper_bound(self) -> float:
        return self.upper

    @property
    def exact_error(self) -> float:
        return self.exact

    @property
    def empirical_error(self) -> Optional[float]:
        return self.empirical

    @property
    def empirical_stderr(self) -> Optional[float]:
        return self.stderr

    def within(self, n_sigma: float = 3.0) -> bool:
        """Whether the simulated error lies within `n_sigma` standard errors of the exact error."""
        if self.empirical is None:
            return True
        return abs(self.empirical - self.exact) <= n_sigma * self.stderr or math.isclose(self.empirical, self.exact)


class BracketingSweep(ProtoModel):
    """
    Counts of random classification problems on which the bounds failed to bracket the Bayes error,
    formed once in nats and once in bits.
    """
    n_problems: int = Field(..., ge=0)
    seed: int = Field(...)
    lower_violations_nat: int = Field(..., ge=0)
    upper_violations_nat: int = Field(..., ge=0)
    lower_violations_bit: int = Field(..., ge=0)
    upper_violations_bit: int = Field(..., ge=0)

    def holds(self, units: InformationUnit) -> bool:
        return getattr(self, f"lower_violations_{units}") + getattr(self, f"upper_violations_{units}") == 0

    @property
    def convention(self) -> Optional[InformationUnit]:
        """Unit convention with no violation, bits preferred; None if neither holds."""
        for units in ("bit", "nat"):
            if self.holds(units):
                return units
        return None
