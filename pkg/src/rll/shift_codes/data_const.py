# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

"""
RLL Shift Codes - Constants shared by the counting, search and reporting modules
"""

import math

# Unbounded k and the "no finite distance" sentinel share one representation
INF = math.inf
INF_LITERAL = "inf"

# Root finding
ROOT_XTOL = 1e-15
ROOT_BRACKET_EPS = 1e-12
RESIDUAL_TOL = 1e-12
MAX_BRACKET_DOUBLINGS = 200

# Typical profile display: for k = inf the lambda row is cut once values drop below this
LAMBDA_DISPLAY_CUTOFF = 1e-6

# Table I layout
TABLE1_DEFAULT_PAIRS = ["0,2", "1,3", "1,7", "2,7", "2,10"]
DEFAULT_PRECISION = 3
FULL_PRECISION = "full"

# Budgets
DEFAULT_NOISE_BUDGET = 2_000_000
DEFAULT_COSET_BUDGET = 200_000
DEFAULT_SEARCH_BUDGET = 5_000_000
DEFAULT_LATTICE_INDEX_BUDGET = 2_000_000
DEFAULT_FIELD_ORDER_BUDGET = 1_000_000
EXHAUSTIVE_CLASS_LIMIT = 25
MAX_RESAMPLES = 10_000

# Monte-Carlo
SIMULATION_CHUNK_SIZE = 1_000
DEFAULT_TRIALS = 10_000

# Seed for the irreducible polynomial search so constructions are reproducible
FIELD_SEARCH_SEED = 20_240_801

# Metrics
METRIC_ASYMMETRIC = "a"
METRIC_SYMMETRIC = "s"
ALLOWED_METRICS = [METRIC_ASYMMETRIC, METRIC_SYMMETRIC]

# Codebook text format
CODEBOOK_FORMAT_BITS = "bits"
CODEBOOK_FORMAT_POSITIONS = "positions"
ALLOWED_CODEBOOK_FORMATS = [CODEBOOK_FORMAT_BITS, CODEBOOK_FORMAT_POSITIONS]
CODEBOOK_COMMENT_PREFIX = "#"

# Exit codes
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE_ERROR = 2
