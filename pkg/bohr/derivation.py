"""
Angular momentum quantization from Planck's energy quantization.

The orbit side: up to sign the orbit energy is E = m_e v^2 / 2, and with
v = 2 pi r f

    E(f) = 2 pi^2 m_e r^2 f^2
    dE/df |system = 4 pi^2 m_e r^2 f = 2 pi m_e v r = 2 pi L,

taken with r held fixed. The second derivative 4 pi^2 m_e r^2 is positive,
so this stationary point is a minimum.

The radiation side: E = n h nu, so dE/dnu |planck = n h.

Identifying nu with the orbital frequency f (correspondence) and equating
the two derivatives (energy conservation) gives L = n h / 2 pi, which is
exactly the n hbar postulate.

Planck's integer n (number of quanta) is identified with the orbital
quantum number without further argument. Only the derivatives are equated:
at the n-th orbit h f = 2 |E_n| / n, so n h f is not the orbit energy.

The usual textbook route (half the energy of an associated oscillator) is
not implemented here.
"""

import math
from concurrent.futures import ThreadPoolExecutor

from pydantic import BaseModel, ConfigDict, model_validator

from .config import DEFAULT_FD_STEP, MAX_FD_STEP, MAX_WORKERS, QUANTIZATION_TOL
from .constants import get_constants
from .errors import DomainError, VerificationError
from .log import get_logger
from .model import angular_momentum, check_level, quantized_orbit
from .units import (
    ACTION,
    FREQUENCY,
    LENGTH,
    SPEED,
    Quantity,
    as_quantity,
    require_positive,
)

log = get_logger("derivation")


def _rel(a, b):
    return abs(a - b) / abs(b) if b else abs(a)


class DerivativeCheck(BaseModel):
    """Analytic, numeric and Planck-side dE/df at the n-th orbit."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int
    Z: int = 1
    step: float
    f: Quantity
    dEdf_system_analytic: Quantity
    dEdf_system_numeric: Quantity
    dEdf_planck: Quantity
    L: Quantity
    d2Edf2: Quantity
    residual_numeric: float
    residual_quantization: float

    @model_validator(mode="after")
    def _check(self):
        for name in ("dEdf_system_analytic", "dEdf_system_numeric", "dEdf_planck", "L"):
            if getattr(self, name).dim != ACTION:
                raise ValueError(f"{name} must be an action")
        if _rel(self.dEdf_system_analytic.value, 2 * math.pi * self.L.value) > 1e-14:
            raise ValueError("analytic dE/df must equal 2 pi L")
        if self.residual_numeric < 0 or self.residual_quantization < 0:
            raise ValueError("residuals are nonnegative")
        return self

    @property
    def is_minimum(self):
        return self.d2Edf2.value > 0.0


class SystemDerivative(BaseModel):
    """dE/df of the orbit energy, with its 2 pi L factorization."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    value: Quantity
    L: Quantity
    factored: Quantity
    second_derivative: Quantity

    @property
    def is_minimum(self):
        return self.second_derivative.value > 0.0


def total_energy_from_speed(v, k=None):
    """Bound-state energy E = -m_e v^2 / 2 of a circular Coulomb orbit."""
    k = get_constants(k)
    v = as_quantity(v, SPEED, "v")
    if v.value < 0.0 or v >= k.c:
        raise DomainError(f"v must satisfy 0 <= v < c, got {v.value!r} m/s")
    return -0.5 * k.m_e * v ** 2


def total_energy_magnitude(v, k=None):
    """|E| = m_e v^2 / 2, the sign-free form used by the derivation."""
    return abs(total_energy_from_speed(v, k))


def orbital_frequency(r, v):
    """f = v / (2 pi r), revolutions per second."""
    r = require_positive(as_quantity(r, LENGTH, "r"), "r")
    v = require_positive(as_quantity(v, SPEED, "v"), "v")
    return v / (2 * math.pi * r)


def energy_in_frequency_form(r, f, k=None):
    """E = 2 pi^2 m_e r^2 f^2."""
    k = get_constants(k)
    r = require_positive(as_quantity(r, LENGTH, "r"), "r")
    f = require_positive(as_quantity(f, FREQUENCY, "f"), "f")
    return 2 * math.pi ** 2 * k.m_e * r ** 2 * f ** 2


def d2Edf2_system(r, k=None):
    k = get_constants(k)
    r = require_positive(as_quantity(r, LENGTH, "r"), "r")
    return 4 * math.pi ** 2 * k.m_e * r ** 2


def system_derivative(r, f, k=None):
    k = get_constants(k)
    r = require_positive(as_quantity(r, LENGTH, "r"), "r")
    f = require_positive(as_quantity(f, FREQUENCY, "f"), "f")
    L = angular_momentum(r, 2 * math.pi * r * f, k)
    return SystemDerivative(
        value=4 * math.pi ** 2 * k.m_e * r ** 2 * f,
        L=L,
        factored=2 * math.pi * L,
        second_derivative=d2Edf2_system(r, k),
    )


def dEdf_system(r, f, k=None):
    """4 pi^2 m_e r^2 f at fixed r; equals 2 pi L."""
    return system_derivative(r, f, k).value


def central_difference(fn, x, step=DEFAULT_FD_STEP):
    """[fn(x(1+s)) - fn(x(1-s))] / (2 x s) with a relative step s."""
    if not 0.0 < step < MAX_FD_STEP:
        raise DomainError(f"step must lie in (0, {MAX_FD_STEP}), got {step!r}")
    if x.value <= 0.0:
        raise DomainError("central_difference needs x > 0")
    return (fn(x * (1 + step)) - fn(x * (1 - step))) / (2 * step * x)


def dEdf_system_numeric(r_of_f, f, step=DEFAULT_FD_STEP, k=None):
    """Finite-difference dE/df of E = 2 pi^2 m_e r^2 f^2.

    ``r_of_f`` is either a fixed radius (the derivation's partial
    derivative) or a callable returning the radius for a given frequency.
    """
    k = get_constants(k)
    f = require_positive(as_quantity(f, FREQUENCY, "f"), "f")
    if callable(r_of_f):
        radius = r_of_f
    else:
        fixed = require_positive(as_quantity(r_of_f, LENGTH, "r"), "r")
        radius = lambda _f: fixed  # noqa: E731
    return central_difference(lambda ff: energy_in_frequency_form(radius(ff), ff, k), f, step)


def force_balance_energy(Z, f, k=None):
    """Energy of the circular Coulomb orbit whose orbital frequency is f.

    Here r moves with f (r^3 = Z e^2 / (4 pi eps0 m_e (2 pi f)^2)), unlike
    the fixed-r derivative above:

        E(f) = -(1/2) ((Z e^2 / 4 pi eps0)^2 m_e (2 pi f)^2)^(1/3)
    """
    k = get_constants(k)
    check_level(Z, "Z")
    f = require_positive(as_quantity(f, FREQUENCY, "f"), "f")
    A = Z * k.coulomb_constant
    return -0.5 * (A ** 2 * k.m_e * (2 * math.pi * f) ** 2) ** (1 / 3)


def dEdf_force_balance(Z, f, k=None):
    """Analytic derivative of force_balance_energy: 2 E / (3 f).

    At the n-th Bohr orbit its magnitude is n h / 3, not n h.
    """
    f = as_quantity(f, FREQUENCY, "f")
    return 2 * force_balance_energy(Z, f, k) / (3 * f)


def planck_energy(n, nu, k=None):
    """E = n h nu."""
    k = get_constants(k)
    check_level(n, "n")
    nu = as_quantity(nu, FREQUENCY, "nu")
    if nu.value < 0.0:
        raise DomainError(f"nu must be >= 0, got {nu.value!r}")
    return n * k.h * nu


def dEdnu_planck(n, k=None):
    """dE/dnu = n h."""
    k = get_constants(k)
    check_level(n, "n")
    return n * k.h


def derive_quantized_L(n, k=None):
    """Equate dE/df|system = 2 pi L with dE/df|planck = n h (nu = f).

    Returns L = n h / 2 pi, identical to n hbar.
    """
    planck_side = dEdnu_planck(n, k)
    return planck_side / (2 * math.pi)


def compare_routes(n, k=None):
    """Relative difference between n hbar and the derived n h / 2 pi."""
    k = get_constants(k)
    postulate = n * k.hbar
    derived = derive_quantized_L(n, k)
    return _rel(derived.value, postulate.value)


def run_derivation_check(n, step=DEFAULT_FD_STEP, k=None, Z=1):
    """Build the n-th orbit and compare both sides of the derivation."""
    k = get_constants(k)
    check_level(n, "n")
    orbit = quantized_orbit(Z, n, k)
    sd = system_derivative(orbit.r, orbit.f, k)
    numeric = dEdf_system_numeric(orbit.r, orbit.f, step, k)
    planck = dEdnu_planck(n, k)

    residual_numeric = _rel(numeric.value, sd.value.value)
    residual_quantization = _rel(sd.factored.value, planck.value)
    log.info("n=%d dE/df=%.9e numeric residual=%.2e quantization residual=%.2e",
             n, sd.value.value, residual_numeric, residual_quantization)

    check = DerivativeCheck(
        n=n,
        Z=Z,
        step=step,
        f=orbit.f,
        dEdf_system_analytic=sd.value,
        dEdf_system_numeric=numeric,
        dEdf_planck=planck,
        L=sd.L,
        d2Edf2=sd.second_derivative,
        residual_numeric=residual_numeric,
        residual_quantization=residual_quantization,
    )
    if residual_quantization > QUANTIZATION_TOL:
        raise VerificationError(
            f"2 pi L differs from n h by {residual_quantization:.3e} at n={n}", [check]
        )
    return check


def run_derivation_checks(n_max, step=DEFAULT_FD_STEP, k=None, Z=1):
    """One DerivativeCheck per n in 1..n_max, in order."""
    k = get_constants(k)
    check_level(n_max, "n_max")
    with ThreadPoolExecutor(max_workers=MAX_WORKERS) as pool:
        return list(pool.map(lambda n: run_derivation_check(n, step, k, Z), range(1, n_max + 1)))
