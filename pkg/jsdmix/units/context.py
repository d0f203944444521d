"""
Units in which divergences and entropies are reported
"""

import math
from functools import lru_cache
from typing import TYPE_CHECKING, Tuple, Union

from .ureg import build_units_registry

if TYPE_CHECKING:
    from pint import Quantity, UnitRegistry  # lgtm: [py/unused-import]


class InformationUnits:
    """Units of information keyed by the logarithm base that produces them.

    Attributes
    ----------
    bases : tuple
        (name, logarithm base, aliases) of each unit beyond the bit.
    """

    bases: Tuple[Tuple[str, float, Tuple[str, ...]], ...] = (
        ("nat", math.e, ("nepit", )),
        ("hartley", 10.0, ("ban", "dit")),
    )

    def __init__(self):
        self._ureg = None

    def __str__(self) -> str:
        return "InformationUnits(bit, {})".format(", ".join(b[0] for b in self.bases))

    @property
    def ureg(self) -> 'UnitRegistry':
        """Returns the internal Pint units registry.

        Returns
        -------
        UnitRegistry
            The pint context
        """
        if self._ureg is None:
            self._ureg = build_units_registry(self)

        return self._ureg

    def Quantity(self, data: str) -> 'Quantity':
        """Returns a Pint Quantity.
        """

        return self.ureg.Quantity(data)

    @lru_cache()
    def conversion_factor(self, base_unit: Union[str, 'Quantity'], conv_unit: Union[str, 'Quantity']) -> float:
        """Provides the conversion factor from one unit of information to another.

        Parameters
        ----------
        base_unit : Union[str, 'Quantity']
            The original units
        conv_unit : Union[str, 'Quantity']
            The units to convert to

        Examples
        --------

        >>> conversion_factor("nat", "bit")
        1.4426950408889634

        >>> conversion_factor("byte", "bit")
        8.0

        Returns
        -------
        float
            The requested conversion factor
        """

        factor = 1.0

        if isinstance(base_unit, str):
            base_unit = self.ureg.parse_expression(base_unit)

        if isinstance(conv_unit, str):
            conv_unit = self.ureg.parse_expression(conv_unit)

        # Quantities carry a prefactor
        if isinstance(base_unit, self.ureg.Quantity):
            factor *= base_unit.magnitude
            base_unit = base_unit.units

        if isinstance(conv_unit, self.ureg.Quantity):
            factor /= conv_unit.magnitude
            conv_unit = conv_unit.units

        return float(self.ureg.convert(factor, base_unit, conv_unit))

    def convert(self, value: float, from_unit: str, to_unit: str) -> float:
        """`value` in `from_unit` expressed in `to_unit`."""
        if from_unit == to_unit:
            return float(value)
        return float(value) * self.conversion_factor(from_unit, to_unit)


# Singleton
units = InformationUnits()
