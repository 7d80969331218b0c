"""
Fundamental constants registry.

Two sets ship with the engine:

  paper  the four-digit values printed in the planetary-model section
         (e, m_e, eps0, c = 3e8) plus the defined SI value of h, which the
         source never prints.
  full   defined/CODATA 2018 values.

The source prints the elementary charge with units of m/s; it is a charge
and is stored in coulombs.
"""

import math
from typing import Literal

from pydantic import BaseModel, ConfigDict, model_validator

from .config import DEFAULT_CONSTANTS
from .errors import DomainError
from .units import (
    ACTION,
    CHARGE,
    MASS,
    PERMITTIVITY,
    SPEED,
    Quantity,
    unit_dimension,
)

Provenance = Literal["paper", "full"]

# symbol, attribute, unit, description
BASE_CONSTANTS = (
    ("e", "e", "C", "elementary charge"),
    ("m_e", "m_e", "kg", "electron mass"),
    ("eps0", "eps0", "F/m", "vacuum permittivity"),
    ("h", "h", "J*s", "Planck constant"),
    ("c", "c", "m/s", "speed of light in vacuum"),
)
DERIVED_CONSTANTS = (
    ("hbar", "hbar", "J*s", "reduced Planck constant h/2pi"),
    ("rydberg_energy", "rydberg_energy", "J", "m_e e^4 / (8 eps0^2 h^2)"),
)


class ConstantsSet(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    e: Quantity
    m_e: Quantity
    eps0: Quantity
    h: Quantity
    c: Quantity
    provenance: Provenance

    @model_validator(mode="after")
    def _check(self):
        expected = {"e": CHARGE, "m_e": MASS, "eps0": PERMITTIVITY, "h": ACTION, "c": SPEED}
        for name, dim in expected.items():
            q = getattr(self, name)
            if q.dim != dim:
                raise ValueError(f"{name} must be [{dim}], got [{q.dim}]")
            if q.value <= 0.0:
                raise ValueError(f"{name} must be strictly positive")
        return self

    # derived

    @property
    def hbar(self):
        return self.h / (2 * math.pi)

    @property
    def coulomb_constant(self):
        """e^2 / (4 pi eps0), in J*m."""
        return self.e ** 2 / (4 * math.pi * self.eps0)

    @property
    def rydberg_energy(self):
        return self.m_e * self.e ** 4 / (8 * self.eps0 ** 2 * self.h ** 2)

    @property
    def rydberg_wavenumber(self):
        """R_inf = rydberg_energy / (h c), in 1/m."""
        return self.rydberg_energy / (self.h * self.c)

    @property
    def fine_structure(self):
        return self.coulomb_constant / (self.hbar * self.c)

    @property
    def bohr_radius(self):
        return 4 * math.pi * self.eps0 * self.hbar ** 2 / (self.m_e * self.e ** 2)

    @property
    def classical_electron_radius(self):
        return self.coulomb_constant / (self.m_e * self.c ** 2)

    def rows(self):
        """(symbol, value, unit, provenance) for the base and derived constants."""
        out = []
        for symbol, attr, unit, _ in BASE_CONSTANTS + DERIVED_CONSTANTS:
            q = getattr(self, attr)
            assert q.dim == unit_dimension(unit)
            out.append((symbol, q.value, unit, self.provenance))
        return out


PAPER = ConstantsSet(
    e=Quantity(1.602e-19, CHARGE),
    m_e=Quantity(9.109e-31, MASS),
    eps0=Quantity(8.854e-12, PERMITTIVITY),
    h=Quantity(6.62607015e-34, ACTION),
    c=Quantity(3e8, SPEED),
    provenance="paper",
)

FULL = ConstantsSet(
    e=Quantity(1.602176634e-19, CHARGE),
    m_e=Quantity(9.1093837015e-31, MASS),
    eps0=Quantity(8.8541878128e-12, PERMITTIVITY),
    h=Quantity(6.62607015e-34, ACTION),
    c=Quantity(2.99792458e8, SPEED),
    provenance="full",
)

REGISTRY = {"paper": PAPER, "full": FULL}


def get_constants(name=None):
    """Look up a constants set by provenance tag; default is ``full``."""
    name = DEFAULT_CONSTANTS if name is None else name
    if isinstance(name, ConstantsSet):
        return name
    try:
        return REGISTRY[name]
    except KeyError:
        raise DomainError(f"unknown constants set {name!r}; choose from {sorted(REGISTRY)}") from None
