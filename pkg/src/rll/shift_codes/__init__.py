# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from .asymptotics import (
    empirical_exponent,
    sigma,
    solve_rho,
    solve_rho_w,
    table1,
    typical_profile,
)
from .bounds import eval_bounds, neighborhood_lower_bound, shift_neighborhood
from .channel import AMBIGUOUS, REJECTED, NoiseSpec, decode, montecarlo_failure, transmit
from .cli import main
from .data_classes import DKParams, PositionVector, ShiftPattern
from .exceptions import (
    BudgetExceededError,
    DecodeFailure,
    DomainError,
    InvalidParametersError,
    RepresentationError,
    ShiftCodesError,
    VerificationError,
)
from .lattices import (
    berlekamp_lattice,
    bose_chowla,
    extract_code,
    golomb_welch,
    stacked_symmetric_lattice,
    zero_sum_isometry,
)
from .metrics import (
    Codebook,
    ball_a,
    ball_s,
    corrects_asym,
    corrects_sym,
    dist_a,
    dist_s,
    min_distance,
)
from .optimum import exact_optimum, optimal_code
from .sequences import (
    count_n,
    count_nW,
    count_nWl,
    enumerate_positions,
    from_positions,
    to_positions,
    validate,
)

__all__ = [
    "AMBIGUOUS",
    "BudgetExceededError",
    "Codebook",
    "DKParams",
    "DecodeFailure",
    "DomainError",
    "InvalidParametersError",
    "NoiseSpec",
    "PositionVector",
    "REJECTED",
    "RepresentationError",
    "ShiftCodesError",
    "ShiftPattern",
    "VerificationError",
    "ball_a",
    "ball_s",
    "berlekamp_lattice",
    "bose_chowla",
    "corrects_asym",
    "corrects_sym",
    "count_n",
    "count_nW",
    "count_nWl",
    "decode",
    "dist_a",
    "dist_s",
    "empirical_exponent",
    "enumerate_positions",
    "eval_bounds",
    "exact_optimum",
    "extract_code",
    "from_positions",
    "golomb_welch",
    "main",
    "min_distance",
    "montecarlo_failure",
    "neighborhood_lower_bound",
    "optimal_code",
    "shift_neighborhood",
    "sigma",
    "solve_rho",
    "solve_rho_w",
    "stacked_symmetric_lattice",
    "table1",
    "to_positions",
    "transmit",
    "typical_profile",
    "validate",
    "zero_sum_isometry",
]
