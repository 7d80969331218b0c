"""
Walkthrough of the derivation, step by step, for one orbit.
Shows the orbit side, the Planck side and where they meet.

    python demo.py          # n = 1, full constants
    python demo.py 3 paper  # n = 3, paper constants
"""

import sys

from bohr.constants import get_constants
from bohr.derivation import (
    dEdf_force_balance,
    dEdf_system_numeric,
    dEdnu_planck,
    derive_quantized_L,
    energy_in_frequency_form,
    system_derivative,
)
from bohr.model import min_radius_bound, quantized_orbit
from bohr.units import convert


def print_header(title):
    """Print a section header."""
    print("\n" + "=" * 60)
    print(f"  {title}")
    print("=" * 60 + "\n")


def demo(n=1, constants="full"):
    """Run the walkthrough for level n and return the derived L."""
    k = get_constants(constants)

    print_header(f"ANGULAR MOMENTUM FROM PLANCK QUANTIZATION (n = {n}, {k.provenance} constants)")

    print("STEP 1: Planetary model")
    print("-" * 60)
    bound = min_radius_bound(1, k)
    print(f"  Speed limit v < c puts every orbit outside r = {bound.value:.4e} m")
    print()

    print("STEP 2: The orbit")
    print("-" * 60)
    orbit = quantized_orbit(1, n, k)
    print(f"  r = {orbit.r.value:.6e} m")
    print(f"  v = {orbit.v.value:.6e} m/s")
    print(f"  f = v / 2 pi r = {orbit.f.value:.6e} Hz")
    print(f"  E = {convert(orbit.E, 'eV', k):.6f} eV")
    print()

    print("STEP 3: Orbit side, E = 2 pi^2 m r^2 f^2")
    print("-" * 60)
    sd = system_derivative(orbit.r, orbit.f, k)
    numeric = dEdf_system_numeric(orbit.r, orbit.f, k=k)
    print(f"  |E|            = {energy_in_frequency_form(orbit.r, orbit.f, k).value:.6e} J")
    print(f"  dE/df analytic = {sd.value.value:.9e} J s")
    print(f"  dE/df numeric  = {numeric.value:.9e} J s")
    print(f"  2 pi L         = {sd.factored.value:.9e} J s")
    print(f"  d2E/df2 > 0    : {sd.is_minimum}  (a minimum)")
    print()

    print("STEP 4: Planck side, E = n h nu")
    print("-" * 60)
    planck = dEdnu_planck(n, k)
    print(f"  dE/dnu = n h   = {planck.value:.9e} J s")
    print()

    print("STEP 5: nu = f and energy conservation")
    print("-" * 60)
    L = derive_quantized_L(n, k)
    print(f"  L = n h / 2 pi = {L.value:.9e} J s")
    print(f"  n hbar         = {(n * k.hbar).value:.9e} J s")
    print(f"  relative gap   = {abs(L.value - orbit.L.value) / orbit.L.value:.2e}")
    print()

    print("NOTE: r must be held fixed while f varies.")
    print("-" * 60)
    co = dEdf_force_balance(1, orbit.f, k)
    print(f"  Letting r follow force balance gives |dE/df| = {abs(co.value):.6e} J s")
    print(f"  which is n h / 3 = {n * k.h.value / 3:.6e} J s, not n h.")
    print(f"  ratio to n h: {abs(co.value) / planck.value:.6f}")
    print()
    return L


if __name__ == "__main__":
    level = int(sys.argv[1]) if len(sys.argv) > 1 else 1
    name = sys.argv[2] if len(sys.argv) > 2 else "full"
    demo(level, name)
