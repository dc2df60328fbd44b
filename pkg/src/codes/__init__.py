"""Defining sets, the C_D construction and weight distributions."""

from .defining_set import (
    DefiningSet,
    Provenance,
    complex_difference_set,
    difference_set,
    from_vectors,
    partition_blocks,
    partition_set,
    union_set,
    weight_ball_set,
    weight_shell_set,
)
from .fileformat import dump_defining_set, load_defining_set, parse_defining_set, save_defining_set
from .linear_code import (
    LinearCode,
    build_code,
    code_weight_profile,
    dual_code,
    dual_min_distance,
    encode,
    min_distance,
)
from .weights import (
    MessageProfile,
    WeightDistribution,
    code_weight_distribution,
    distribution_from_weights,
    krawtchouk,
    macwilliams_transform,
    weight_distribution_bruteforce,
    weight_via_genfunc,
)

__all__ = [
    "DefiningSet",
    "LinearCode",
    "MessageProfile",
    "Provenance",
    "WeightDistribution",
    "build_code",
    "code_weight_distribution",
    "code_weight_profile",
    "complex_difference_set",
    "difference_set",
    "distribution_from_weights",
    "dual_code",
    "dual_min_distance",
    "dump_defining_set",
    "encode",
    "from_vectors",
    "krawtchouk",
    "load_defining_set",
    "macwilliams_transform",
    "min_distance",
    "parse_defining_set",
    "partition_blocks",
    "partition_set",
    "save_defining_set",
    "union_set",
    "weight_ball_set",
    "weight_distribution_bruteforce",
    "weight_shell_set",
    "weight_via_genfunc",
]
