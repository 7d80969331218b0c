"""
Planetary hydrogen model and Bohr-quantized orbits.

An electron of mass m_e circles a fixed nucleus of charge Ze. Coulomb
attraction supplies the centripetal force,

    Z e^2 / (4 pi eps0 r^2) = m_e v^2 / r,

which fixes v(r) and r(v). Orbits become discrete once the angular momentum
is restricted to L = n hbar. The nucleus is infinitely heavy (no reduced
mass) and no relativistic mass is used; v = c is a kinematic limit only.

The energy expressions are printed for hydrogen; each accepts ``Z`` and
scales e^2 by it, with Z = 1 reproducing the printed forms.
"""

import math
from typing import Optional

from pydantic import BaseModel, ConfigDict, model_validator

from .config import INVARIANT_TOL
from .constants import ConstantsSet, get_constants
from .errors import DomainError
from .log import get_logger
from .units import (
    ACTION,
    ENERGY,
    FREQUENCY,
    LENGTH,
    SPEED,
    Quantity,
    as_quantity,
    require_positive,
    sqrt,
)

log = get_logger("model")


def check_level(value, name="n", minimum=1):
    """Validate a positive integer such as Z or a quantum number."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise DomainError(f"{name} must be >= {minimum}, got {value}")
    return value


def _rel(a, b):
    scale = max(abs(a), abs(b))
    return 0.0 if scale == 0.0 else abs(a - b) / scale


class OrbitState(BaseModel):
    """One circular orbit, classical (n is None) or quantized."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    Z: int
    n: Optional[int] = None
    r: Quantity
    v: Quantity
    f: Quantity
    E_k: Quantity
    E_p: Quantity
    E: Quantity
    L: Quantity
    theta: float = math.pi / 2
    constants: ConstantsSet

    @model_validator(mode="after")
    def _check(self):
        k = self.constants
        check_level(self.Z, "Z")
        if self.n is not None:
            check_level(self.n, "n")
        dims = {"r": LENGTH, "v": SPEED, "f": FREQUENCY, "E_k": ENERGY,
                "E_p": ENERGY, "E": ENERGY, "L": ACTION}
        for name, dim in dims.items():
            if getattr(self, name).dim != dim:
                raise ValueError(f"{name} must be [{dim}]")

        if self.force_residual > INVARIANT_TOL:
            raise ValueError(f"force balance violated: {self.force_residual:.3e}")
        E, E_k, E_p = self.E.value, self.E_k.value, self.E_p.value
        if _rel(E, E_k + E_p) > INVARIANT_TOL or _rel(E_k, -E) > INVARIANT_TOL or _rel(E_p, 2 * E) > INVARIANT_TOL:
            raise ValueError("virial relations violated")
        if _rel(self.L.value, (k.m_e * self.v * self.r).value) > INVARIANT_TOL:
            raise ValueError("L != m_e v r")
        if _rel(self.f.value, self.v.value / (2 * math.pi * self.r.value)) > INVARIANT_TOL:
            raise ValueError("f != v / (2 pi r)")
        if self.n is not None and _rel(self.L.value, self.n * k.hbar.value) > INVARIANT_TOL:
            raise ValueError(f"L != n hbar for n={self.n}")
        return self

    @property
    def coulomb_force(self):
        k = self.constants
        return self.Z * k.coulomb_constant / self.r ** 2

    @property
    def centripetal_force(self):
        return self.constants.m_e * self.v ** 2 / self.r

    @property
    def force_residual(self):
        return _rel(self.coulomb_force.value, self.centripetal_force.value)

    @property
    def L_over_hbar(self):
        return float(self.L / self.constants.hbar)


def orbital_velocity(Z, r, k=None):
    """v = sqrt(Z e^2 / (4 pi eps0 m_e r))."""
    k = get_constants(k)
    check_level(Z, "Z")
    r = require_positive(as_quantity(r, LENGTH, "r"), "r")
    return sqrt(Z * k.coulomb_constant / (k.m_e * r))


def radius_from_velocity(Z, v, k=None):
    """r = Z e^2 / (4 pi eps0 m_e v^2), the inverse of orbital_velocity."""
    k = get_constants(k)
    check_level(Z, "Z")
    v = require_positive(as_quantity(v, SPEED, "v"), "v")
    return Z * k.coulomb_constant / (k.m_e * v ** 2)


def min_radius_bound(Z, k=None):
    """Radius at which the orbital speed would reach c.

    A massive electron needs v < c, so every orbit lies strictly outside
    this bound. It equals Z times the classical electron radius.
    """
    k = get_constants(k)
    return radius_from_velocity(Z, k.c, k)


def _coulomb_term(r, k, Z):
    # Z e^2 / (8 pi eps0 r); the three energies share it so the virial
    # relations hold exactly in floating point.
    check_level(Z, "Z")
    r = require_positive(as_quantity(r, LENGTH, "r"), "r")
    return Z * k.coulomb_constant / (2 * r)


def kinetic_energy(r, k=None, Z=1):
    """E_k = Z e^2 / (8 pi eps0 r)."""
    return _coulomb_term(r, get_constants(k), Z)


def potential_energy(r, k=None, Z=1):
    """E_p = -Z e^2 / (4 pi eps0 r), zero at infinity."""
    return -2 * _coulomb_term(r, get_constants(k), Z)


def total_energy(r, k=None, Z=1):
    """E = E_k + E_p = -Z e^2 / (8 pi eps0 r)."""
    k = get_constants(k)
    return kinetic_energy(r, k, Z) + potential_energy(r, k, Z)


def angular_momentum(r, v, k=None):
    """L = p r sin(theta) = m_e v r for a circular orbit."""
    k = get_constants(k)
    r = require_positive(as_quantity(r, LENGTH, "r"), "r")
    v = require_positive(as_quantity(v, SPEED, "v"), "v")
    return k.m_e * v * r


def quantized_radius(Z, n, k=None):
    """r_n = 4 pi eps0 hbar^2 n^2 / (m_e e^2 Z)."""
    k = get_constants(k)
    check_level(Z, "Z")
    check_level(n, "n")
    return 4 * math.pi * k.eps0 * k.hbar ** 2 * n ** 2 / (k.m_e * k.e ** 2 * Z)


def quantized_speed(Z, n, k=None):
    """v_n = e^2 Z / (4 pi eps0 hbar n)."""
    k = get_constants(k)
    check_level(Z, "Z")
    check_level(n, "n")
    return Z * k.coulomb_constant / (k.hbar * n)


def level_energy(Z, n, k=None):
    """E_n = -m_e e^4 Z^2 / (8 eps0^2 h^2 n^2)."""
    k = get_constants(k)
    check_level(Z, "Z")
    check_level(n, "n")
    return -(Z ** 2) * k.rydberg_energy / n ** 2


def ionization_energy(Z, n=1, k=None):
    """Energy that must be supplied to free the electron from level n."""
    return -level_energy(Z, n, k)


def _orbit(Z, n, r, v, k):
    E_k = kinetic_energy(r, k, Z)
    E_p = potential_energy(r, k, Z)
    return OrbitState(
        Z=Z,
        n=n,
        r=r,
        v=v,
        f=v / (2 * math.pi * r),
        E_k=E_k,
        E_p=E_p,
        E=E_k + E_p,
        L=k.m_e * v * r,
        constants=k,
    )


def classical_orbit(Z, r, k=None):
    """Unquantized planetary orbit at an arbitrary radius."""
    k = get_constants(k)
    r = as_quantity(r, LENGTH, "r")
    return _orbit(Z, None, r, orbital_velocity(Z, r, k), k)


def quantized_orbit(Z, n, k=None, via="postulate"):
    """The unique circular orbit with force balance and L = n hbar.

    ``via="postulate"`` takes L = n hbar as given; ``via="planck"`` takes L
    from the energy-frequency derivation instead. Both land on the same
    orbit: r = L^2 / (m_e Z e^2 / (4 pi eps0)), v = L / (m_e r).
    """
    k = get_constants(k)
    check_level(Z, "Z")
    check_level(n, "n")
    if via == "postulate":
        r = quantized_radius(Z, n, k)
        v = quantized_speed(Z, n, k)
    elif via == "planck":
        from .derivation import derive_quantized_L

        L = derive_quantized_L(n, k)
        r = L ** 2 / (k.m_e * Z * k.coulomb_constant)
        v = L / (k.m_e * r)
    else:
        raise DomainError(f"unknown quantization route {via!r}")
    orbit = _orbit(Z, n, r, v, k)
    log.debug("Z=%d n=%d r=%.6e m E=%.6e J", Z, n, r.value, orbit.E.value)
    return orbit
