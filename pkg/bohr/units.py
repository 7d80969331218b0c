"""
Dimension-checked scalar quantities.

Every physical number in the engine is a ``Quantity``: a finite float plus a
``Dimension``, the vector of exponents over the SI base quantities length,
mass, time and electric current. Products add exponents, quotients subtract
them, and addition, subtraction and comparison are only defined between equal
dimensions. Values are always SI internally; named units such as ``eV`` or
``nm`` exist only at the input/output boundary (``convert`` / ``from_unit``).
"""

import math
import numbers
from dataclasses import dataclass

from .errors import ConversionError, DimensionError, DomainError, NonFiniteError

BASE_SYMBOLS = ("m", "kg", "s", "A")


@dataclass(frozen=True)
class Dimension:
    length: int = 0
    mass: int = 0
    time: int = 0
    current: int = 0

    @property
    def exponents(self):
        return (self.length, self.mass, self.time, self.current)

    def __mul__(self, other):
        return Dimension(*(a + b for a, b in zip(self.exponents, other.exponents)))

    def __truediv__(self, other):
        return Dimension(*(a - b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, power):
        scaled = [e * power for e in self.exponents]
        if any(abs(e - round(e)) > 1e-12 for e in scaled):
            raise DimensionError(f"{self} ** {power} has non-integral exponents")
        return Dimension(*(int(round(e)) for e in scaled))

    @property
    def is_dimensionless(self):
        return not any(self.exponents)

    def __str__(self):
        if self.is_dimensionless:
            return "1"
        parts = []
        for symbol, exp in zip(BASE_SYMBOLS, self.exponents):
            if exp == 1:
                parts.append(symbol)
            elif exp:
                parts.append(f"{symbol}^{exp}")
        return " ".join(parts)


DIMENSIONLESS = Dimension()
LENGTH = Dimension(length=1)
MASS = Dimension(mass=1)
TIME = Dimension(time=1)
CURRENT = Dimension(current=1)

AREA = LENGTH ** 2
VOLUME_RATE = LENGTH ** 3 / TIME
FREQUENCY = DIMENSIONLESS / TIME
SPEED = LENGTH / TIME
ACCELERATION = SPEED / TIME
FORCE = MASS * ACCELERATION
ENERGY = FORCE * LENGTH
POWER = ENERGY / TIME
ACTION = ENERGY * TIME
CHARGE = CURRENT * TIME
PERMITTIVITY = CHARGE ** 2 / (ENERGY * LENGTH)


def _is_number(x):
    return isinstance(x, numbers.Real) and not isinstance(x, bool)


def _to_float(x):
    try:
        return float(x)
    except OverflowError:
        raise NonFiniteError(f"{type(x).__name__} value out of float range") from None


@dataclass(frozen=True)
class Quantity:
    value: float
    dim: Dimension = DIMENSIONLESS

    def __post_init__(self):
        value = _to_float(self.value)
        if not math.isfinite(value):
            raise NonFiniteError(f"non-finite value {self.value!r} [{self.dim}]")
        object.__setattr__(self, "value", value)

    # arithmetic

    def __mul__(self, other):
        if isinstance(other, Quantity):
            return Quantity(self.value * other.value, self.dim * other.dim)
        if _is_number(other):
            return Quantity(self.value * _to_float(other), self.dim)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Quantity):
            if other.value == 0.0:
                raise DomainError(f"division by zero quantity [{other.dim}]")
            return Quantity(self.value / other.value, self.dim / other.dim)
        if _is_number(other):
            if other == 0:
                raise DomainError("division by zero")
            return Quantity(self.value / _to_float(other), self.dim)
        return NotImplemented

    def __rtruediv__(self, other):
        if _is_number(other):
            if self.value == 0.0:
                raise DomainError(f"division by zero quantity [{self.dim}]")
            return Quantity(_to_float(other) / self.value, DIMENSIONLESS / self.dim)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other, "+")
        return Quantity(self.value + other.value, self.dim)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other, "-")
        return Quantity(self.value - other.value, self.dim)

    def __rsub__(self, other):
        other = self._coerce(other, "-")
        return Quantity(other.value - self.value, self.dim)

    def __neg__(self):
        return Quantity(-self.value, self.dim)

    def __pos__(self):
        return self

    def __abs__(self):
        return Quantity(abs(self.value), self.dim)

    def __pow__(self, power):
        if not _is_number(power):
            return NotImplemented
        if self.value < 0 and power != int(power):
            raise DomainError(f"negative quantity raised to non-integer power {power}")
        try:
            value = self.value ** power
        except OverflowError:
            raise NonFiniteError(f"[{self.dim}] raised to {power} overflows") from None
        return Quantity(value, self.dim ** power)

    # comparisons (equality is the dataclass one: same value and dimension)

    def __lt__(self, other):
        return self.value < self._coerce(other, "<").value

    def __le__(self, other):
        return self.value <= self._coerce(other, "<=").value

    def __gt__(self, other):
        return self.value > self._coerce(other, ">").value

    def __ge__(self, other):
        return self.value >= self._coerce(other, ">=").value

    def __float__(self):
        if not self.dim.is_dimensionless:
            raise DimensionError(f"cannot take float() of a quantity in [{self.dim}]")
        return self.value

    def _coerce(self, other, op):
        if isinstance(other, Quantity):
            if other.dim != self.dim:
                raise DimensionError(f"[{self.dim}] {op} [{other.dim}]")
            return other
        if _is_number(other):
            if not self.dim.is_dimensionless:
                raise DimensionError(f"[{self.dim}] {op} plain number")
            return Quantity(other)
        raise TypeError(f"unsupported operand {type(other).__name__} for {op}")

    # units

    def to(self, unit, constants=None):
        return convert(self, unit, constants)

    def __str__(self):
        return f"{self.value!r} [{self.dim}]"


def quantity(value, dim=DIMENSIONLESS):
    return Quantity(value, dim)


def mul(a, b):
    return a * b


def div(a, b):
    return a / b


def add(a, b):
    return a + b


def sub(a, b):
    return a - b


def power(a, p):
    return a ** p


def sqrt(q):
    if q.value < 0:
        raise DomainError(f"square root of negative quantity {q}")
    return q ** 0.5


def as_quantity(x, dim, name="value"):
    """Accept a Quantity of dimension ``dim`` or a bare number read as SI."""
    if isinstance(x, Quantity):
        if x.dim != dim:
            raise DimensionError(f"{name} must be [{dim}], got [{x.dim}]")
        return x
    if _is_number(x):
        return Quantity(x, dim)
    raise TypeError(f"{name} must be a number or Quantity, got {type(x).__name__}")


def require_positive(q, name):
    if q.value <= 0.0:
        raise DomainError(f"{name} must be > 0, got {q.value!r}")
    return q


# Named units: symbol -> (dimension, SI scale). eV is resolved through the
# active constants set, 1 eV being e joules.
UNITS = {
    "1": (DIMENSIONLESS, 1.0),
    "m": (LENGTH, 1.0),
    "nm": (LENGTH, 1e-9),
    "pm": (LENGTH, 1e-12),
    "angstrom": (LENGTH, 1e-10),
    "kg": (MASS, 1.0),
    "s": (TIME, 1.0),
    "Hz": (FREQUENCY, 1.0),
    "J": (ENERGY, 1.0),
    "eV": (ENERGY, None),
    "W": (POWER, 1.0),
    "C": (CHARGE, 1.0),
    "m/s": (SPEED, 1.0),
    "m/s^2": (ACCELERATION, 1.0),
    "J*s": (ACTION, 1.0),
    "F/m": (PERMITTIVITY, 1.0),
    "m^3/s": (VOLUME_RATE, 1.0),
}


def unit_dimension(unit):
    try:
        return UNITS[unit][0]
    except KeyError:
        raise ConversionError(f"unknown unit {unit!r}") from None


def _unit_scale(unit, constants):
    dim, scale = UNITS[unit]
    if scale is None:
        if constants is None:
            from .constants import get_constants

            constants = get_constants()
        scale = constants.e.value
    return dim, scale


def convert(q, unit, constants=None):
    """Express ``q`` in ``unit`` and return the bare number."""
    dim = unit_dimension(unit)
    if dim != q.dim:
        raise ConversionError(f"cannot express [{q.dim}] in {unit} [{dim}]")
    _, scale = _unit_scale(unit, constants)
    return q.value / scale


def from_unit(value, unit, constants=None):
    """Build a SI Quantity from a number given in ``unit``."""
    dim = unit_dimension(unit)
    _, scale = _unit_scale(unit, constants)
    return Quantity(value * scale, dim)
