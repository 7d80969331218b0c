#!/usr/bin/env python3
"""
Quick launcher that reproduces every result of the engine in one go.
Runs, in order:
  1. constants  (paper set, as printed in the source)
  2. orbit      (hydrogen ground state)
  3. verify     (2 pi L = n h for n = 1..20)
  4. spectrum   (Balmer series)
  5. collapse   (classical radiative collapse from 1e-10 m)

Extra arguments are passed to every subcommand, e.g. ``python run.py --format json``.
"""

import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent

STEPS = [
    ("CONSTANTS", ["constants", "--constants", "paper"]),
    ("GROUND STATE", ["orbit", "-Z", "1", "-n", "1"]),
    ("DERIVATION CHECK", ["verify", "-n", "20"]),
    ("BALMER SERIES", ["spectrum", "--series", "balmer", "--count", "4", "--unit", "nm"]),
    ("CLASSICAL COLLAPSE", ["collapse", "--r0", "1e-10"]),
]


def print_banner():
    """Print startup banner."""
    print("=" * 62)
    print("  BOHR ORBITS FROM PLANCK QUANTIZATION - FULL REPRODUCTION")
    print("=" * 62)
    print()


def run_step(title, args, extra):
    """Run one subcommand and return its exit code."""
    print(f"[{title}] bohr {' '.join(args + extra)}")
    completed = subprocess.run([sys.executable, "-m", "cli", *args, *extra], cwd=ROOT)
    print()
    return completed.returncode


def main(extra=None):
    extra = list(sys.argv[1:] if extra is None else extra)
    print_banner()

    results = [(title, run_step(title, args, extra)) for title, args in STEPS]

    print("=" * 62)
    for title, code in results:
        mark = "✓" if code == 0 else "✗"
        print(f"  [{mark}] {title} (exit {code})")
    print("=" * 62)
    return 0 if all(code == 0 for _, code in results) else 1


if __name__ == "__main__":
    sys.exit(main())
