"""
Engine defaults and tolerances
"""

# Constants set used when none is requested
DEFAULT_CONSTANTS = "full"

# Finite differences
DEFAULT_FD_STEP = 1e-5
MAX_FD_STEP = 0.1

# Residual bounds
QUANTIZATION_TOL = 1e-12   # |2 pi L - n h| / (n h)
NUMERIC_TOL = 1e-6         # analytic vs finite-difference dE/df
INVARIANT_TOL = 1e-12      # OrbitState force balance and L = n hbar

# Classical collapse
DEFAULT_R0 = 1e-10         # m
DEFAULT_MAX_STEPS = 10_000
DEFAULT_REL_TOL = 1e-8
MAX_REL_TOL = 1e-2

# Spectral series name -> lower level
SERIES_NAMES = {
    "lyman": 1,
    "balmer": 2,
    "paschen": 3,
    "brackett": 4,
    "pfund": 5,
    "humphreys": 6,
}

# Worker threads for batch derivation checks
MAX_WORKERS = 4
