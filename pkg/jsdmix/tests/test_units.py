import math

import pint
import pytest

import jsdmix


@pytest.mark.parametrize("from_unit, to_unit, expected", [
    ("nat", "bit", 1 / math.log(2)),
    ("bit", "nat", math.log(2)),
    ("hartley", "bit", math.log2(10)),
    ("hartley", "nat", math.log(10)),
    ("shannon", "bit", 1.0),
    ("nepit", "nat", 1.0),
    ("ban", "hartley", 1.0),
    ("byte", "bit", 8.0),
    ("kilobit", "bit", 1000.0),
    ("bit", "bit", 1.0),
]) # yapf: disable
def test_conversion_factor(from_unit, to_unit, expected):
    assert jsdmix.compare_values(expected, jsdmix.units.conversion_factor(from_unit, to_unit), atol=1.e-12)


def test_conversion_factor_quantity():
    factor = jsdmix.units.conversion_factor(jsdmix.units.Quantity("2 nat"), "bit")
    assert jsdmix.compare_values(2 / math.log(2), factor, atol=1.e-12)


def test_conversion_roundtrip():
    there = jsdmix.units.conversion_factor("nat", "hartley")
    back = jsdmix.units.conversion_factor("hartley", "nat")
    assert jsdmix.compare_values(1.0, there * back, atol=1.e-14)


def test_convert():
    assert jsdmix.units.convert(0.25, "nat", "nat") == 0.25
    assert jsdmix.compare_values(1.0, jsdmix.units.convert(math.log(2), "nat", "bit"), atol=1.e-15)


def test_quantity_to():
    q = jsdmix.units.Quantity("1 bit").to("nat")
    assert jsdmix.compare_values(math.log(2), q.magnitude, atol=1.e-15)


def test_units_str():
    assert str(jsdmix.units) == "InformationUnits(bit, nat, hartley)"


def test_incompatible_units():
    with pytest.raises(pint.DimensionalityError):
        jsdmix.units.conversion_factor("nat", "meter")
