try:
    import pydantic
except ImportError:  # pragma: no cover
    raise ImportError("Python module pydantic not found. Solve by installing it: "
                      "`conda install pydantic -c conda-forge` or `pip install pydantic`")

from .basemodels import ProtoModel
from .common_models import Provenance
from .pmf import Alphabet, Pmf, Weight
from .problems import BoundsReport, BracketingSweep, ClassificationProblem, UrnGameConfig
from .scenario import DisjointDecomposition, EpsilonFamily, MixtureScenario
from .specs import DeltaSpec, RaySpec
from .sweeps import MinimizerReport, ObservationCheck, SweepMetadata, SweepResult, VerificationReport
