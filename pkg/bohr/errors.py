"""
Error types raised by the engine.

Library code raises these; only the command line turns them into exit codes.
"""


class BohrError(Exception):
    """Base class for every error raised by the bohr package."""


class NonFiniteError(BohrError, ValueError):
    """A quantity was constructed from NaN or infinity."""


class DimensionError(BohrError, TypeError):
    """Operands carry incompatible dimensions."""


class ConversionError(DimensionError):
    """A quantity cannot be expressed in the requested unit."""


class DomainError(BohrError, ValueError):
    """An argument lies outside the domain of the operation."""


class ConvergenceError(BohrError):
    """The integrator gave up before reaching the stop radius.

    The samples computed so far are kept on ``partial`` as (t, r) pairs.
    """

    def __init__(self, message, partial=()):
        super().__init__(message)
        self.partial = list(partial)


class VerificationError(BohrError):
    """A derivation residual exceeded its tolerance."""

    def __init__(self, message, checks=()):
        super().__init__(message)
        self.checks = list(checks)
