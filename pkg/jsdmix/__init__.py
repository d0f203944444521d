"""
Main init for JSDMix
"""

from . import bounds, calculus, information, mixture, models, sampling, util
from .exceptions import (AlphabetMismatchError, BoundsBracketingError, ScenarioFormatError, UnboundedDerivativeError,
                         ValidationError)
from .extras import get_information
from .testing import compare, compare_recursive, compare_values

# Expose singletons from the modules
from .units import InformationUnits, units

__version__ = get_information('version')
del get_information
