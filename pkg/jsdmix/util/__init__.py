from .importing import which_import
from .internal import provenance_stamp
from .rng import GENERATOR_NAME, make_rng, spawn_rngs
from .serialization import deserialize, format_float, json_dumps, json_loads, serialize
