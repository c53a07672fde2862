"""
Shared configuration for Richardson Seeds
"""

import os

from dotenv import load_dotenv

load_dotenv()

# Enumeration guards
MAX_ENUMERATION_N = int(os.getenv("RICHARDSON_MAX_ENUMERATION_N", "7"))  # reduced_words refuses larger n
MAX_EXHAUSTIVE_N = int(os.getenv("RICHARDSON_MAX_EXHAUSTIVE_N", "5"))  # exhaustive case enumeration refuses larger n
MAX_CLI_N = 9  # one-line permutations on the command line are digit strings

# Random evaluation settings
DEFAULT_TRIALS = int(os.getenv("RICHARDSON_TRIALS", "100"))  # random evaluations per identity
DEFAULT_SEED = int(os.getenv("RICHARDSON_SEED", "20240601"))
ENTRY_RANGE = (-9, 9)  # strictly-upper entries of random matrices
SAMPLE_SIZE = int(os.getenv("RICHARDSON_SAMPLE_SIZE", "200"))  # cases drawn in sampling mode
MAX_FACTORIZATION_N = 6  # exhaustive factorization sweep over all I <= J

# Output
SCHEMA_VERSION = 1  # JSON export schema
REPORT_FILE = "verify_report.json"

# Half-arrow orientation of the wiring-diagram quiver, as three flips
# (horizontal, upper pair, lower pair) applied to the base configuration
# right -> left, up -> right, down -> right, left -> up, left -> down.
WIRING_ORIENTATION = (False, False, False)

# An irreducible morphism M_i -> M_j gives the arrow i -> j
MORPHISM_ARROW_DIRECTION = "source_to_target"

# Verification checks, in report order
CHECK_NAMES = (
    "pds_lex_max",
    "unipeak_exists",
    "m_unitriangular",
    "pivot_monotone",
    "stability",
    "appearance",
    "variables",
    "quiver",
    "quiver_shape",
    "base_case",
    "factorization",
    "translation",
    "hollow_relation",
    "strip_maps",
    "spread_boundary",
    "exchange_ratio",
    "lec_counts",
    "frozen_agreement",
    "calibration",
)
DEFAULT_CHECKS = tuple(name for name in CHECK_NAMES if name != "calibration")
