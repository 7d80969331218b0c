"""
CLI Configuration and Constants
"""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from bohr.config import DEFAULT_CONSTANTS

# Choices
CONSTANTS_CHOICES = ("paper", "full")
FORMAT_CHOICES = ("table", "json", "csv")
SPECTRUM_UNITS = ("nm", "m", "eV", "Hz")

# Defaults
DEFAULT_FORMAT = "table"
DEFAULT_PRECISION = 6
MIN_PRECISION = 1
MAX_PRECISION = 17
DEFAULT_SERIES_COUNT = 4
DEFAULT_VERIFY_N = 10
DEFAULT_LOWER_LEVEL = 2

# Exit codes
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class GlobalOptions(BaseModel):
    model_config = ConfigDict(frozen=True)

    constants: Literal["paper", "full"] = DEFAULT_CONSTANTS
    format: Literal["table", "json", "csv"] = DEFAULT_FORMAT
    precision: int = Field(DEFAULT_PRECISION, ge=MIN_PRECISION, le=MAX_PRECISION)
