from typing import Annotated, Any, Sequence, Tuple, Union

import numpy as np
from pydantic import Field, field_serializer, field_validator, model_validator

from .basemodels import ProtoModel

Label = Union[int, str]

#: A mixture proportion or class prior, 0 <= value <= 1.
Weight = Annotated[float, Field(ge=0.0, le=1.0)]

#: Accepted deviation of a PMF's total mass from one.
SUM_TOLERANCE = 1.e-9


class Alphabet(ProtoModel):
    """
    Ordered, finite set of symbols shared by all PMFs of a problem.
    """
    labels: Tuple[Label, ...] = Field(..., description="Symbol names, pairwise distinct, in alphabet order.")

    @field_validator("labels")
    @classmethod
    def _distinct_labels(cls, v):
        if len(v) < 1:
            raise ValueError("Alphabet needs at least one label.")
        if len(set(v)) != len(v):
            raise ValueError(f"Alphabet labels must be pairwise distinct: {v}")
        return v

    @classmethod
    def range(cls, size: int, start: int = 1) -> 'Alphabet':
        """Integer alphabet ``start, ..., start + size - 1``."""
        return cls(labels=tuple(range(start, start + size)))

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label: Label) -> int:
        """Position of `label` in the alphabet."""
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"Label {label!r} not in alphabet {self.labels}") from None

    def __str__(self) -> str:
        return f"{self.__class__.__name__}({list(self.labels)})"


class Pmf(ProtoModel):
    """
    Probability mass function, dense over an :py:class:`Alphabet`.

    Construction validates nonnegativity and that the mass sums to one within
    ``SUM_TOLERANCE``; it never rescales silently. Use :py:meth:`Pmf.normalized`
    to rescale explicitly.
    """
    alphabet: Alphabet = Field(..., description="The alphabet the mass vector is indexed by.")
    mass: np.ndarray = Field(..., description="Probability of each label, natural-probability units.")

    @field_validator("alphabet", mode="before")
    @classmethod
    def _labels_to_alphabet(cls, v):
        if isinstance(v, (list, tuple)):
            return Alphabet(labels=tuple(v))
        return v

    @field_validator("mass", mode="before")
    @classmethod
    def _cast_mass(cls, v):
        try:
            arr = np.array(v, dtype=float)
        except (TypeError, ValueError):
            raise ValueError("Could not cast mass to a float vector!")
        if arr.ndim != 1:
            raise ValueError(f"Mass must be a vector, not shape {arr.shape}.")
        arr.setflags(write=False)
        return arr

    @model_validator(mode="after")
    def _valid_probabilities(self):
        mass = self.mass
        if mass.shape[0] != self.alphabet.size:
            raise ValueError(f"Mass has {mass.shape[0]} entries but the alphabet has {self.alphabet.size} labels.")
        if not np.all(np.isfinite(mass)):
            raise ValueError("Mass entries must be finite.")
        if np.any(mass < 0.0):
            raise ValueError(f"Mass entries must be nonnegative: {mass.tolist()}")
        total = float(np.sum(mass))
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise ValueError(f"Mass must sum to one within {SUM_TOLERANCE}, sums to {total!r}.")
        return self

    @field_serializer("mass")
    def _mass_as_list(self, v: np.ndarray):
        return v.tolist()

    @classmethod
    def normalized(cls, alphabet: Union[Alphabet, Sequence[Label]], mass: Any) -> 'Pmf':
        """Build a PMF from nonnegative weights by dividing through their total."""
        arr = np.asarray(mass, dtype=float)
        total = float(np.sum(arr))
        if not total > 0.0:
            raise ValueError(f"Cannot normalize mass with total {total!r}.")
        return cls(alphabet=alphabet, mass=arr / total)

    @classmethod
    def point(cls, alphabet: Union[Alphabet, Sequence[Label]], label: Label) -> 'Pmf':
        """Degenerate PMF putting all mass on `label`."""
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(labels=tuple(alphabet))
        mass = np.zeros(alphabet.size)
        mass[alphabet.index(label)] = 1.0
        return cls(alphabet=alphabet, mass=mass)

    @classmethod
    def uniform(cls, alphabet: Union[Alphabet, Sequence[Label]], on: Sequence[Label] = None) -> 'Pmf':
        """Uniform PMF over the whole alphabet, or over the labels in `on` only."""
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(labels=tuple(alphabet))
        if on is None:
            return cls(alphabet=alphabet, mass=np.full(alphabet.size, 1.0 / alphabet.size))
        mass = np.zeros(alphabet.size)
        for label in on:
            mass[alphabet.index(label)] = 1.0
        return cls.normalized(alphabet, mass)

    @property
    def size(self) -> int:
        return self.alphabet.size

    def __getitem__(self, label: Label) -> float:
        return float(self.mass[self.alphabet.index(label)])

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Pmf):
            return NotImplemented
        return self.alphabet == other.alphabet and np.array_equal(self.mass, other.mass)

    def __hash__(self) -> int:
        return hash((self.alphabet.labels, self.mass.tobytes()))

    def __str__(self) -> str:
        entries = ', '.join(f'{k}: {v:.6g}' for k, v in zip(self.alphabet.labels, self.mass))
        return f"{self.__class__.__name__}({{{entries}}})"
