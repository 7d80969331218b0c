"""
Spectral lines of the quantized model.

A line is stored once, in emission orientation (upper -> lower, positive
photon energy); absorption is the same line read backwards. Wavelengths are
vacuum values for an infinitely heavy nucleus, so H-alpha comes out near
656.1 nm rather than the tabulated 656.28 nm (air, reduced mass). That gap is
the model, not a bug.
"""

from typing import List

from pydantic import BaseModel, ConfigDict, model_validator

from .config import SERIES_NAMES
from .constants import ConstantsSet, get_constants
from .errors import DomainError
from .log import get_logger
from .model import check_level, level_energy, quantized_orbit
from .units import ENERGY, FREQUENCY, LENGTH, Quantity

log = get_logger("spectra")


class TransitionLine(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    Z: int
    n_upper: int
    n_lower: int
    delta_E: Quantity
    photon_frequency: Quantity
    wavelength_vacuum: Quantity
    constants: ConstantsSet

    @model_validator(mode="after")
    def _check(self):
        if not self.n_upper > self.n_lower >= 1:
            raise ValueError("need n_upper > n_lower >= 1")
        if self.delta_E.dim != ENERGY or self.photon_frequency.dim != FREQUENCY or self.wavelength_vacuum.dim != LENGTH:
            raise ValueError("transition fields carry the wrong dimensions")
        if self.delta_E.value <= 0.0:
            raise ValueError("emission energy must be positive")
        c = self.constants.c.value
        if abs(self.wavelength_vacuum.value * self.photon_frequency.value - c) / c > 1e-14:
            raise ValueError("wavelength * frequency != c")
        return self

    def atom_energy_change(self, absorption=False):
        """Signed change of the atom's energy: -dE on emission, +dE on absorption."""
        return self.delta_E if absorption else -self.delta_E

    @property
    def label(self):
        return f"{self.n_upper}->{self.n_lower}"


class SeriesLimit(BaseModel):
    """The n_upper -> infinity edge of a series (not a line)."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    Z: int
    n_lower: int
    energy: Quantity
    frequency: Quantity
    wavelength: Quantity


def transition(Z, n_upper, n_lower, k=None):
    k = get_constants(k)
    check_level(Z, "Z")
    check_level(n_lower, "n_lower")
    check_level(n_upper, "n_upper")
    if n_upper <= n_lower:
        raise DomainError(f"need n_upper > n_lower, got {n_upper} -> {n_lower}")
    delta_E = level_energy(Z, n_upper, k) - level_energy(Z, n_lower, k)
    nu = delta_E / k.h
    return TransitionLine(
        Z=Z,
        n_upper=n_upper,
        n_lower=n_lower,
        delta_E=delta_E,
        photon_frequency=nu,
        wavelength_vacuum=k.c / nu,
        constants=k,
    )


def series(Z, n_lower, count, k=None) -> List[TransitionLine]:
    """Lines (n_lower+1 .. n_lower+count) -> n_lower, ordered by n_upper."""
    k = get_constants(k)
    check_level(count, "count")
    lines = [transition(Z, n_lower + i, n_lower, k) for i in range(1, count + 1)]
    log.debug("series Z=%d n_lower=%d: %d lines", Z, n_lower, len(lines))
    return lines


def series_lower_level(name):
    try:
        return SERIES_NAMES[name.lower()]
    except KeyError:
        raise DomainError(f"unknown series {name!r}; choose from {', '.join(SERIES_NAMES)}") from None


def series_by_name(name, Z, count, k=None):
    return series(Z, series_lower_level(name), count, k)


def series_limit(Z, n_lower, k=None):
    k = get_constants(k)
    energy = -level_energy(Z, n_lower, k)
    nu = energy / k.h
    return SeriesLimit(Z=Z, n_lower=n_lower, energy=energy, frequency=nu, wavelength=k.c / nu)


def rydberg_wavelength(Z, n_upper, n_lower, k=None):
    """1 / lambda = Z^2 R_inf (1/n_lower^2 - 1/n_upper^2)."""
    k = get_constants(k)
    check_level(Z, "Z")
    if not n_upper > n_lower >= 1:
        raise DomainError(f"need n_upper > n_lower >= 1, got {n_upper} -> {n_lower}")
    wavenumber = Z ** 2 * k.rydberg_wavenumber * (1 / n_lower ** 2 - 1 / n_upper ** 2)
    return 1 / wavenumber


def correspondence_ratio(Z, n, k=None):
    """Photon frequency of n -> n-1 over the orbital frequency of level n.

    The derivation only uses nu = f as an identification; this ratio is a
    quantitative reading of it. It equals n(2n-1) / (2(n-1)^2) for every Z
    and tends to 1 as n grows.
    """
    k = get_constants(k)
    check_level(n, "n", minimum=2)
    photon = transition(Z, n, n - 1, k).photon_frequency
    orbital = quantized_orbit(Z, n, k).f
    return float(photon / orbital)
