from typing import Dict

from jsdmix.extras import get_information


def provenance_stamp(routine: str) -> Dict[str, str]:
    """Return dictionary for the `Provenance` model with JSDMix's credentials
    for creator and version. The generating routine's name is passed in
    through `routine`.

    """
    return {'creator': 'JSDMix', 'version': get_information('version'), 'routine': routine}
