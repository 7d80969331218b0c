import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bohr.constants import FULL, PAPER
from bohr.errors import ConversionError, DimensionError, DomainError, NonFiniteError
from bohr.units import (
    CHARGE,
    DIMENSIONLESS,
    ENERGY,
    LENGTH,
    POWER,
    SPEED,
    TIME,
    UNITS,
    Dimension,
    Quantity,
    add,
    as_quantity,
    convert,
    div,
    from_unit,
    mul,
    power,
    quantity,
    sqrt,
    sub,
)

exponent = st.integers(min_value=-4, max_value=4)
dimensions = st.builds(Dimension, exponent, exponent, exponent, exponent)
magnitudes = st.floats(min_value=1e-30, max_value=1e30, allow_nan=False, allow_infinity=False)
quantities = st.builds(Quantity, magnitudes, dimensions)


class TestConstruction:
    def test_zero_energy(self):
        q = quantity(0, ENERGY)
        assert q.value == 0.0
        assert q.dim == ENERGY

    def test_elementary_charge(self):
        q = quantity(1.602e-19, CHARGE)
        assert q == PAPER.e

    @pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
    def test_non_finite_rejected(self, bad):
        with pytest.raises(NonFiniteError):
            quantity(bad, ENERGY)

    def test_overflow_does_not_leak_infinity(self):
        big = Quantity(1e300, LENGTH)
        with pytest.raises(NonFiniteError):
            big * big

    def test_power_overflow(self):
        with pytest.raises(NonFiniteError):
            Quantity(1e120, LENGTH) ** 3

    @pytest.mark.parametrize("scale", [lambda q, n: q * n, lambda q, n: q / n, lambda q, n: n / q])
    def test_integer_beyond_float_range(self, scale):
        with pytest.raises(NonFiniteError):
            scale(Quantity(1.0, LENGTH), 10 ** 400)

    def test_construct_from_huge_integer(self):
        with pytest.raises(NonFiniteError):
            Quantity(10 ** 400, LENGTH)

    def test_ev_to_joule_with_paper_charge(self):
        q = from_unit(-13.6, "eV", PAPER)
        assert q.dim == ENERGY
        assert q.value == pytest.approx(-2.18e-18, rel=1e-3)
        assert q.value == pytest.approx(-13.6 * 1.602e-19, rel=1e-15)


class TestArithmetic:
    def test_area(self):
        assert Quantity(2, LENGTH) * Quantity(3, LENGTH) == Quantity(6, LENGTH ** 2)

    def test_power_from_energy_over_time(self):
        assert Quantity(6, ENERGY) / Quantity(2, TIME) == Quantity(3, POWER)

    def test_mismatched_addition(self):
        with pytest.raises(DimensionError):
            Quantity(1, ENERGY) + Quantity(1, LENGTH)

    def test_mismatched_subtraction(self):
        with pytest.raises(DimensionError):
            sub(Quantity(1, ENERGY), Quantity(1, LENGTH))

    def test_mismatched_comparison(self):
        with pytest.raises(DimensionError):
            Quantity(1, ENERGY) < Quantity(1, LENGTH)

    def test_number_plus_dimensioned(self):
        with pytest.raises(DimensionError):
            Quantity(1, ENERGY) + 1.0

    def test_dimensionless_accepts_numbers(self):
        assert (Quantity(2.0) + 1.0).value == 3.0
        assert float(Quantity(2.5)) == 2.5

    def test_float_of_dimensioned_rejected(self):
        with pytest.raises(DimensionError):
            float(Quantity(1, LENGTH))

    def test_sqrt(self):
        v2 = Quantity(4.0, SPEED ** 2)
        assert sqrt(v2) == Quantity(2.0, SPEED)

    def test_sqrt_needs_even_exponents(self):
        with pytest.raises(DimensionError):
            sqrt(Quantity(4.0, LENGTH))

    def test_sqrt_of_negative(self):
        with pytest.raises(DomainError):
            sqrt(Quantity(-4.0, LENGTH ** 2))

    def test_division_by_zero(self):
        with pytest.raises(DomainError):
            Quantity(1.0, LENGTH) / Quantity(0.0, TIME)

    def test_reciprocal(self):
        f = 1 / Quantity(2.0, TIME)
        assert f.value == 0.5
        assert f.dim == DIMENSIONLESS / TIME

    def test_functional_aliases(self):
        a, b = Quantity(2.0, LENGTH), Quantity(3.0, LENGTH)
        assert mul(a, b) == a * b
        assert div(a, b) == a / b
        assert add(a, b) == a + b
        assert sub(a, b) == a - b
        assert power(a, 3) == Quantity(8.0, LENGTH ** 3)

    def test_as_quantity(self):
        assert as_quantity(2.0, LENGTH) == Quantity(2.0, LENGTH)
        with pytest.raises(DimensionError):
            as_quantity(Quantity(2.0, TIME), LENGTH)
        with pytest.raises(TypeError):
            as_quantity("2", LENGTH)

    @given(quantities, quantities)
    def test_product_then_quotient_recovers_dimension(self, a, b):
        assert mul(a, div(b, a)).dim == b.dim

    @given(dimensions, dimensions)
    def test_dimension_group(self, a, b):
        assert (a * b) / b == a
        assert a / a == DIMENSIONLESS
        assert a * DIMENSIONLESS == a


class TestConvert:
    def test_joule_to_ev(self):
        assert convert(Quantity(2.18e-18, ENERGY), "eV", PAPER) == pytest.approx(13.6, rel=1e-3)

    def test_metres_to_nanometres(self):
        assert convert(Quantity(6.561e-7, LENGTH), "nm") == pytest.approx(656.1, rel=1e-15)
        assert Quantity(6.561e-7, LENGTH).to("nm") == convert(Quantity(6.561e-7, LENGTH), "nm")
        assert Quantity(2.18e-18, ENERGY).to("eV", PAPER) == pytest.approx(13.6, rel=1e-3)

    def test_energy_in_metres(self):
        with pytest.raises(ConversionError):
            convert(Quantity(1.0, ENERGY), "m")

    def test_unknown_unit(self):
        with pytest.raises(ConversionError):
            convert(Quantity(1.0, LENGTH), "furlong")

    def test_ev_defaults_to_full_set(self):
        assert convert(FULL.e * Quantity(1.0, ENERGY / CHARGE), "eV") == pytest.approx(1.0, rel=1e-15)

    @pytest.mark.parametrize("unit", sorted(UNITS))
    @given(x=magnitudes)
    def test_round_trip(self, unit, x):
        q = from_unit(x, unit, FULL)
        back = from_unit(convert(q, unit, FULL), unit, FULL)
        assert back.dim == q.dim
        assert back.value == pytest.approx(q.value, rel=1e-15)
