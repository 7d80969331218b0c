"""
Classical radiative collapse of the planetary atom.

An orbiting electron accelerates, so it radiates with the Larmor power

    P = e^2 a^2 / (6 pi eps0 c^3),   a = Z e^2 / (4 pi eps0 m_e r^2).

Treating the decay as a slow sequence of circular orbits with
E(r) = -Z e^2 / (8 pi eps0 r) and dE/dt = -P gives

    dr/dt = -K / r^2,   K = e^4 Z / (12 pi^2 eps0^2 m_e^2 c^3),

which integrates in closed form to t = (r0^3 - r_stop^3) / (3 K). The
closed form is the oracle for the numerical integration.

Integration stops at the radius where the orbital speed would reach c (by
default), which keeps the whole trajectory non-relativistic and avoids the
singularity at r = 0. No radiation reaction beyond Larmor, no quantum
corrections.
"""

import csv
import math
from typing import List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator
from scipy.integrate import RK45

from .config import DEFAULT_MAX_STEPS, DEFAULT_R0, DEFAULT_REL_TOL, MAX_REL_TOL
from .constants import get_constants
from .errors import ConvergenceError, DomainError
from .log import get_logger
from .model import check_level, kinetic_energy, min_radius_bound, orbital_velocity
from .units import (
    ACCELERATION,
    LENGTH,
    TIME,
    Quantity,
    VOLUME_RATE,
    as_quantity,
    require_positive,
)

log = get_logger("collapse")

# samples per unit of r / r0 along the trajectory
MAX_SAMPLE_SPACING = 1 / 64


class CollapseConfig(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    Z: int = 1
    r0: Quantity
    r_stop: Quantity
    max_steps: int = DEFAULT_MAX_STEPS
    rel_tol: float = DEFAULT_REL_TOL

    @model_validator(mode="after")
    def _check(self):
        check_level(self.Z, "Z")
        if self.r0.dim != LENGTH or self.r_stop.dim != LENGTH:
            raise ValueError("r0 and r_stop must be lengths")
        if not self.r0.value > self.r_stop.value > 0.0:
            raise ValueError(f"need r0 > r_stop > 0, got r0={self.r0.value!r} r_stop={self.r_stop.value!r}")
        if self.max_steps < 1:
            raise ValueError("max_steps must be positive")
        if not 0.0 < self.rel_tol <= MAX_REL_TOL:
            raise ValueError(f"rel_tol must lie in (0, {MAX_REL_TOL}]")
        return self


class CollapseResult(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    config: CollapseConfig
    collapse_time: Quantity
    closed_form_time: Quantity
    ode_vs_closed_form_residual: float
    samples: List[Tuple[float, float]]
    steps: int

    @model_validator(mode="after")
    def _check(self):
        if self.collapse_time.dim != TIME or self.collapse_time.value <= 0.0:
            raise ValueError("collapse_time must be a positive time")
        t = np.array([s[0] for s in self.samples])
        r = np.array([s[1] for s in self.samples])
        if len(t) < 2 or np.any(np.diff(t) <= 0) or np.any(np.diff(r) >= 0):
            raise ValueError("samples must increase in t and decrease in r")
        return self


def collapse_config(Z=1, r0=DEFAULT_R0, r_stop=None, max_steps=DEFAULT_MAX_STEPS,
                    rel_tol=DEFAULT_REL_TOL, k=None):
    """Build a config, defaulting r_stop to the v = c radius for this Z."""
    k = get_constants(k)
    r0 = as_quantity(r0, LENGTH, "r0")
    r_stop = min_radius_bound(Z, k) if r_stop is None else as_quantity(r_stop, LENGTH, "r_stop")
    return CollapseConfig(Z=Z, r0=r0, r_stop=r_stop, max_steps=max_steps, rel_tol=rel_tol)


def coulomb_acceleration(Z, r, k=None):
    k = get_constants(k)
    check_level(Z, "Z")
    r = require_positive(as_quantity(r, LENGTH, "r"), "r")
    return Z * k.coulomb_constant / (k.m_e * r ** 2)


def larmor_power(a, k=None):
    """P = e^2 a^2 / (6 pi eps0 c^3)."""
    k = get_constants(k)
    a = as_quantity(a, ACCELERATION, "a")
    if a.value < 0.0:
        raise DomainError(f"a must be >= 0, got {a.value!r}")
    return k.e ** 2 * a ** 2 / (6 * math.pi * k.eps0 * k.c ** 3)


def inspiral_constant(Z, k=None):
    """K in dr/dt = -K / r^2, in m^3/s."""
    k = get_constants(k)
    check_level(Z, "Z")
    K = k.e ** 4 * Z / (12 * math.pi ** 2 * k.eps0 ** 2 * k.m_e ** 2 * k.c ** 3)
    assert K.dim == VOLUME_RATE
    return K


def drdt(r, Z=1, k=None):
    """Radial velocity of the adiabatic inspiral; always negative.

    Energy balance on a circular orbit: dE/dt = -P with dE/dr = E_k / r.
    """
    k = get_constants(k)
    r = require_positive(as_quantity(r, LENGTH, "r"), "r")
    power = larmor_power(coulomb_acceleration(Z, r, k), k)
    return -power * r / kinetic_energy(r, k, Z)


def collapse_time_between(r0, r_stop, Z=1, k=None):
    """(r0^3 - r_stop^3) / (3 K); zero when the radii coincide."""
    r0 = require_positive(as_quantity(r0, LENGTH, "r0"), "r0")
    r_stop = require_positive(as_quantity(r_stop, LENGTH, "r_stop"), "r_stop")
    if r_stop > r0:
        raise DomainError("r_stop must not exceed r0")
    return (r0 ** 3 - r_stop ** 3) / (3 * inspiral_constant(Z, k))


def closed_form_collapse_time(cfg, k=None):
    return collapse_time_between(cfg.r0, cfg.r_stop, cfg.Z, k)


def simulate_collapse(cfg, k=None):
    """Integrate the inspiral from cfg.r0 down to cfg.r_stop.

    The radius falls monotonically, so the trajectory is integrated as t(r):
    dt/dr = 1 / drdt(r), in units of r0 and t0 = r0^3 / (3 K). In time the
    same curve has a cube-root singularity just past r_stop that stalls step
    control; in radius it is smooth.
    """
    k = get_constants(k)
    r0 = cfg.r0.value
    t0 = (cfg.r0 ** 3 / (3 * inspiral_constant(cfg.Z, k))).value
    x_stop = cfg.r_stop.value / r0

    def dt_dx(x, _t):
        return [r0 / (t0 * drdt(x * r0, cfg.Z, k).value)]

    solver = RK45(
        dt_dx,
        1.0,
        [0.0],
        x_stop,
        rtol=cfg.rel_tol,
        atol=cfg.rel_tol * 1e-3,
        max_step=MAX_SAMPLE_SPACING,
    )
    samples = [(0.0, r0)]
    steps = 0
    while solver.status == "running":
        if steps >= cfg.max_steps:
            raise ConvergenceError(
                f"gave up after {steps} steps at r={samples[-1][1]:.3e} m", samples
            )
        message = solver.step()
        steps += 1
        if solver.status == "failed":
            raise ConvergenceError(f"integrator failed: {message}", samples)
        samples.append((float(solver.y[0]) * t0, float(solver.t) * r0))

    collapse_time = Quantity(samples[-1][0], TIME)
    oracle = closed_form_collapse_time(cfg, k)
    residual = abs(collapse_time.value - oracle.value) / oracle.value
    log.info("Z=%d r0=%.3e m: %d steps, t=%.6e s, closed form %.6e s, residual %.2e",
             cfg.Z, r0, steps, collapse_time.value, oracle.value, residual)
    if residual > cfg.rel_tol:
        raise ConvergenceError(f"ODE time misses the closed form by {residual:.3e}", samples)

    return CollapseResult(
        config=cfg,
        collapse_time=collapse_time,
        closed_form_time=oracle,
        ode_vs_closed_form_residual=residual,
        samples=samples,
        steps=steps,
    )


def orbital_speed_along(result, k=None):
    """Orbital speed (m/s) at each sampled radius."""
    k = get_constants(k)
    Z = result.config.Z
    return [orbital_velocity(Z, r, k).value for _, r in result.samples]


def collapse_scaling_exponent(r0_values, Z=1, k=None, rel_tol=DEFAULT_REL_TOL):
    """Slope of log(collapse time) against log(r0)."""
    k = get_constants(k)
    times = [simulate_collapse(collapse_config(Z, r0, rel_tol=rel_tol, k=k), k).collapse_time.value
             for r0 in r0_values]
    slope, _ = np.polyfit(np.log(np.asarray(r0_values, dtype=float)), np.log(times), 1)
    return float(slope)


def write_trajectory_csv(result, path):
    with open(path, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["t_seconds", "r_meters"])
        for t, r in result.samples:
            writer.writerow([repr(t), repr(r)])
    log.info("wrote %d samples to %s", len(result.samples), path)
