"""
Command-line entry point.

Subcommands: constants, orbit, verify, spectrum, collapse.
Exit codes: 0 success, 1 verification or convergence failure, 2 usage error.
"""

import argparse
import sys

from pydantic import ValidationError

from bohr import __version__
from bohr.config import DEFAULT_FD_STEP, DEFAULT_MAX_STEPS, DEFAULT_R0, DEFAULT_REL_TOL, MAX_FD_STEP, SERIES_NAMES
from bohr.errors import ConvergenceError, DimensionError, DomainError, NonFiniteError, VerificationError
from bohr.log import get_logger, setup_logging
from bohr.spectra import series_lower_level

from . import commands
from .config import (
    CONSTANTS_CHOICES,
    DEFAULT_FORMAT,
    DEFAULT_LOWER_LEVEL,
    DEFAULT_PRECISION,
    DEFAULT_SERIES_COUNT,
    DEFAULT_VERIFY_N,
    EXIT_FAILURE,
    EXIT_OK,
    EXIT_USAGE,
    FORMAT_CHOICES,
    MAX_PRECISION,
    MIN_PRECISION,
    SPECTRUM_UNITS,
    GlobalOptions,
)
from .render import render

log = get_logger("cli")


def positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def positive_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not value > 0 or value == float("inf"):
        raise argparse.ArgumentTypeError(f"must be a finite number > 0, got {text}")
    return value


def precision_int(text):
    value = positive_int(text)
    if not MIN_PRECISION <= value <= MAX_PRECISION:
        raise argparse.ArgumentTypeError(f"precision must lie in {MIN_PRECISION}..{MAX_PRECISION}")
    return value


def fd_step(text):
    value = positive_float(text)
    if value >= MAX_FD_STEP:
        raise argparse.ArgumentTypeError(f"step must be < {MAX_FD_STEP}")
    return value


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--constants", choices=CONSTANTS_CHOICES, default="full",
                        help="Constants set: paper (4-digit values) or full (default: full)")
    common.add_argument("--format", choices=FORMAT_CHOICES, default=DEFAULT_FORMAT,
                        help="Output format (default: table)")
    common.add_argument("--precision", type=precision_int, default=DEFAULT_PRECISION,
                        help=f"Significant digits {MIN_PRECISION}..{MAX_PRECISION} (default: {DEFAULT_PRECISION})")
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="Log progress to stderr (-vv for debug)")

    parser = argparse.ArgumentParser(
        prog="bohr",
        description="Semi-classical hydrogen atom: Bohr orbits from Planck quantization",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("constants", parents=[common], help="Print the constants set")

    orbit = sub.add_parser("orbit", parents=[common], help="Quantized orbit for charge Z and level n")
    orbit.add_argument("-Z", type=positive_int, default=1, help="Nuclear charge (default: 1)")
    orbit.add_argument("-n", type=positive_int, default=1, help="Quantum number (default: 1)")

    verify = sub.add_parser("verify", parents=[common], help="Check dE/df|system = dE/df|planck for n = 1..N")
    verify.add_argument("-n", type=positive_int, default=DEFAULT_VERIFY_N, dest="n_max",
                        help=f"Highest quantum number (default: {DEFAULT_VERIFY_N})")
    verify.add_argument("--step", type=fd_step, default=DEFAULT_FD_STEP,
                        help=f"Relative finite-difference step (default: {DEFAULT_FD_STEP})")

    spectrum = sub.add_parser("spectrum", parents=[common], help="Emission series ending on a lower level")
    spectrum.add_argument("-Z", type=positive_int, default=1, help="Nuclear charge (default: 1)")
    lower = spectrum.add_mutually_exclusive_group()
    lower.add_argument("--lower", type=positive_int, default=None,
                       help=f"Lower level (default: {DEFAULT_LOWER_LEVEL}, Balmer)")
    lower.add_argument("--series", choices=sorted(SERIES_NAMES), help="Named series instead of --lower")
    spectrum.add_argument("--count", type=positive_int, default=DEFAULT_SERIES_COUNT,
                          help=f"Number of lines (default: {DEFAULT_SERIES_COUNT})")
    spectrum.add_argument("--unit", choices=SPECTRUM_UNITS, default="nm", help="Line position unit (default: nm)")

    collapse = sub.add_parser("collapse", parents=[common], help="Classical radiative collapse time")
    collapse.add_argument("--r0", type=positive_float, default=DEFAULT_R0, help=f"Initial radius in m (default: {DEFAULT_R0})")
    collapse.add_argument("-Z", type=positive_int, default=1, help="Nuclear charge (default: 1)")
    collapse.add_argument("--r-stop", type=positive_float, default=None,
                          help="Stop radius in m (default: radius where v = c)")
    collapse.add_argument("--tolerance", type=positive_float, default=DEFAULT_REL_TOL,
                          help=f"Relative tolerance (default: {DEFAULT_REL_TOL})")
    collapse.add_argument("--max-steps", type=positive_int, default=DEFAULT_MAX_STEPS,
                          help=f"Integrator step budget (default: {DEFAULT_MAX_STEPS})")
    collapse.add_argument("--trajectory", metavar="PATH", help="Write the trajectory as CSV (t_seconds,r_meters)")

    return parser


def dispatch(args, opts):
    if args.command == "constants":
        return commands.cmd_constants(opts)
    if args.command == "orbit":
        return commands.cmd_orbit(args.Z, args.n, opts)
    if args.command == "verify":
        return commands.cmd_verify(args.n_max, args.step, opts)
    if args.command == "spectrum":
        if args.series:
            n_lower = series_lower_level(args.series)
        else:
            n_lower = DEFAULT_LOWER_LEVEL if args.lower is None else args.lower
        return commands.cmd_spectrum(args.Z, n_lower, args.count, args.unit, opts)
    if args.command == "collapse":
        return commands.cmd_collapse(args.r0, args.Z, args.r_stop, args.tolerance,
                                     args.max_steps, args.trajectory, opts)
    raise DomainError(f"unknown command {args.command!r}")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose)

    try:
        opts = GlobalOptions(constants=args.constants, format=args.format, precision=args.precision)
        report = dispatch(args, opts)
    except (ConvergenceError, VerificationError) as exc:
        log.error("%s", exc)
        return EXIT_FAILURE
    except (DomainError, DimensionError, NonFiniteError, OverflowError, ValidationError) as exc:
        log.error("%s", exc)
        return EXIT_USAGE

    sys.stdout.write(render(report, opts))
    return report.status if report.status else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
