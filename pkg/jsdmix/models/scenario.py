import math
from typing import Any, Dict, Tuple

from pydantic import Field, model_validator

from .basemodels import ProtoModel
from .pmf import Alphabet, Pmf, Weight

#: Accepted gap between a decomposition's total and the sum of its terms.
DECOMPOSITION_TOLERANCE = 1.e-12


class MixtureScenario(ProtoModel):
    """
    Two mixtures sharing a common component,
    p1 = lambda_1 p_tilde_1 + (1 - lambda_1) q and p2 = lambda_2 p_tilde_2 + (1 - lambda_2) q.
    """
    p_tilde_1: Pmf = Field(..., description="Distinguishing component of the first mixture.")
    p_tilde_2: Pmf = Field(..., description="Distinguishing component of the second mixture.")
    q: Pmf = Field(..., description="Component common to both mixtures.")
    lambda_1: Weight = Field(..., description="Mixture proportion of `p_tilde_1` in p1.")
    lambda_2: Weight = Field(..., description="Mixture proportion of `p_tilde_2` in p2.")

    @model_validator(mode="before")
    @classmethod
    def _flat_layout(cls, data: Any) -> Any:
        # {"alphabet": [...], "p_tilde_1": [...], ...} as stored in scenario files
        if isinstance(data, dict) and "alphabet" in data:
            data = dict(data)
            alphabet = data.pop("alphabet")
            for key in ("p_tilde_1", "p_tilde_2", "q"):
                if key in data and not isinstance(data[key], (Pmf, dict)):
                    data[key] = {"alphabet": alphabet, "mass": data[key]}
        return data

    @model_validator(mode="after")
    def _shared_alphabet(self):
        alphabet = self.q.alphabet
        for name in ("p_tilde_1", "p_tilde_2"):
            if getattr(self, name).alphabet != alphabet:
                raise ValueError(f"{name} and q must share one alphabet: "
                                 f"{list(getattr(self, name).alphabet.labels)} vs {list(alphabet.labels)}")
        return self

    @property
    def alphabet(self) -> Alphabet:
        return self.q.alphabet

    @property
    def proportions(self) -> Tuple[float, float]:
        return (self.lambda_1, self.lambda_2)

    def with_proportions(self, lambda_1: float, lambda_2: float) -> 'MixtureScenario':
        """Same components, new mixture proportions."""
        return self.__class__(p_tilde_1=self.p_tilde_1,
                              p_tilde_2=self.p_tilde_2,
                              q=self.q,
                              lambda_1=lambda_1,
                              lambda_2=lambda_2)

    def to_flat(self) -> Dict[str, Any]:
        """Scenario-file layout: one alphabet, three plain mass lists, two proportions."""
        return {
            "alphabet": list(self.alphabet.labels),
            "p_tilde_1": self.p_tilde_1.mass.tolist(),
            "p_tilde_2": self.p_tilde_2.mass.tolist(),
            "q": self.q.mass.tolist(),
            "lambda_1": self.lambda_1,
            "lambda_2": self.lambda_2,
        }

    def __str__(self) -> str:
        return (f"{self.__class__.__name__}(alphabet={list(self.alphabet.labels)}, "
                f"lambda_1={self.lambda_1}, lambda_2={self.lambda_2})")


class EpsilonFamily(ProtoModel):
    """
    The six-symbol simulation setting parameterized by `epsilon`:

    ========  ======  =====  =====  =====  =====  =====
    symbol      1       2      3      4      5      6
    ========  ======  =====  =====  =====  =====  =====
    p_tilde_1   1       0      0      0      0      0
    p_tilde_2  1-eps   eps     0      0      0      0
    q          0.5     0.4   0.025  0.025  0.025  0.025
    ========  ======  =====  =====  =====  =====  =====

    :py:meth:`disjoint_scenario` swaps q for the uniform PMF on {3, 4, 5, 6}.
    """
    epsilon: Weight = Field(0.3, description="Mass p_tilde_2 moves from symbol 1 to symbol 2.")

    @staticmethod
    def alphabet() -> Alphabet:
        return Alphabet.range(6)

    def components(self) -> Tuple[Pmf, Pmf, Pmf]:
        """(p_tilde_1, p_tilde_2, q) for this epsilon."""
        alphabet = self.alphabet()
        eps = self.epsilon
        p_tilde_1 = Pmf(alphabet=alphabet, mass=[1.0, 0.0, 0.0, 0.0, 0.0, 0.0])
        p_tilde_2 = Pmf(alphabet=alphabet, mass=[1.0 - eps, eps, 0.0, 0.0, 0.0, 0.0])
        q = Pmf(alphabet=alphabet, mass=[0.5, 0.4, 0.025, 0.025, 0.025, 0.025])
        return p_tilde_1, p_tilde_2, q

    def scenario(self, lambda_1: float = 0.0, lambda_2: float = 0.0) -> MixtureScenario:
        p_tilde_1, p_tilde_2, q = self.components()
        return MixtureScenario(p_tilde_1=p_tilde_1, p_tilde_2=p_tilde_2, q=q, lambda_1=lambda_1, lambda_2=lambda_2)

    def disjoint_scenario(self, lambda_1: float = 0.0, lambda_2: float = 0.0) -> MixtureScenario:
        """Variant whose common component lives on {3, 4, 5, 6}, disjoint from both p_tilde."""
        p_tilde_1, p_tilde_2, _ = self.components()
        q = Pmf.uniform(self.alphabet(), on=[3, 4, 5, 6])
        return MixtureScenario(p_tilde_1=p_tilde_1, p_tilde_2=p_tilde_2, q=q, lambda_1=lambda_1, lambda_2=lambda_2)


class DisjointDecomposition(ProtoModel):
    """
    Symmetric JS divergence of a disjoint-support scenario split into a term that
    depends only on the proportions and a term that depends only on p_tilde_1, p_tilde_2.
    """
    proportion_term: float = Field(..., ge=0.0, description="Symmetric JS between (lambda_1, 1 - lambda_1) and "
                                   "(lambda_2, 1 - lambda_2), in nats.")
    content_term: float = Field(..., ge=0.0, description="(lambda_1 + lambda_2)/2 times the JS divergence of the "
                                "distinguishing components at weight lambda_1/(lambda_1 + lambda_2), in nats.")
    total: float = Field(..., ge=0.0, description="Sum of both terms, in nats.")

    @model_validator(mode="after")
    def _total_is_sum(self):
        if not math.isclose(self.total, self.proportion_term + self.content_term, rel_tol=0.0,
                            abs_tol=DECOMPOSITION_TOLERANCE):
            raise ValueError(f"total {self.total!r} differs from proportion_term + content_term "
                             f"{self.proportion_term + self.content_term!r}")
        return self
