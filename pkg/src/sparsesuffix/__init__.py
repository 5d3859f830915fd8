"""Sparse suffix array and sparse LCP array construction.

Given a read-only byte text and b distinct suffix start positions, build the
arrays SSA (the positions sorted by the lexicographic order of their
suffixes) and SLCP (the longest common prefix length of each consecutive
pair, starting with 0). The construction groups suffixes by polynomial
fingerprints of doubling windows, sorts the resulting hierarchy, and walks
it depth first; it is Monte Carlo and returns the exact arrays with high
probability.
"""

from .driver import (
    ParamStats,
    RunConfig,
    RunCounters,
    SECOND_PASS_SEED_STEP,
    compute_b_prime,
    floor_log2,
    main_algo,
    parameterized_algo,
)
from .emitter import EmitStats, SsaSlcp, output_arrays
from .errors import InternalConsistencyError, SparseSuffixError, ValidationError
from .fingerprint import (
    MODULUS,
    Fingerprint,
    FingerprintIndex,
    fingerprint,
    preprocess,
)
from .grouper import Group, GroupForest, dump_groups, refine, sort_groups
from .oracle import naive_ssa_slcp
from .text import (
    PositionSet,
    Text,
    as_position_set,
    load_positions,
    load_text,
    sample_positions,
)

__version__ = "0.1.0"

__all__ = [
    "EmitStats",
    "Fingerprint",
    "FingerprintIndex",
    "Group",
    "GroupForest",
    "InternalConsistencyError",
    "MODULUS",
    "ParamStats",
    "PositionSet",
    "RunConfig",
    "RunCounters",
    "SECOND_PASS_SEED_STEP",
    "SparseSuffixError",
    "SsaSlcp",
    "Text",
    "ValidationError",
    "as_position_set",
    "compute_b_prime",
    "dump_groups",
    "fingerprint",
    "floor_log2",
    "load_positions",
    "load_text",
    "main_algo",
    "naive_ssa_slcp",
    "output_arrays",
    "parameterized_algo",
    "preprocess",
    "refine",
    "sample_positions",
    "sort_groups",
]
