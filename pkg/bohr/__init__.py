"""
Semi-classical hydrogen atom engine.

Bohr orbits, the derivation of L = n h / 2 pi from Planck's E = n h nu,
spectral series and the classical radiative collapse, all computed with
dimension-checked quantities.
"""

from .constants import FULL, PAPER, ConstantsSet, get_constants
from .errors import (
    BohrError,
    ConversionError,
    ConvergenceError,
    DimensionError,
    DomainError,
    NonFiniteError,
    VerificationError,
)
from .units import Dimension, Quantity, convert, from_unit, quantity

__version__ = "1.0.0"

__all__ = [
    "FULL",
    "PAPER",
    "ConstantsSet",
    "get_constants",
    "BohrError",
    "ConversionError",
    "ConvergenceError",
    "DimensionError",
    "DomainError",
    "NonFiniteError",
    "VerificationError",
    "Dimension",
    "Quantity",
    "convert",
    "from_unit",
    "quantity",
    "__version__",
]
