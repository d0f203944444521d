"""
A wrapper for the pint ureg data
"""

import math

# We only want the ureg builder exposed
__all__ = ["build_units_registry"]


def build_units_registry(context):
    """Builds a pint UnitRegistry with the units of information.

    Parameters
    ----------
    context : InformationUnits
        The context whose logarithm bases are registered.
    """
    import pint

    ureg = pint.UnitRegistry(on_redefinition="ignore")

    # bit is pint's own information unit; every other base is a multiple of it
    ureg.define("shannon = bit")
    for name, base, aliases in context.bases:
        ureg.define("{} = {!r} * bit{}".format(name, math.log2(base), "".join(" = " + a for a in aliases)))

    return ureg
