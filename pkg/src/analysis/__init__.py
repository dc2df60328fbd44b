"""Structure tests, bounds, closed-form predictors and claim sweeps."""

from .optimality import OptimalityEntry, OptimalityTable, load_optimality_table, optimality_lookup
from .predictors import (
    CodeParams,
    predict_difference_code,
    predict_difference_dual,
    predict_difference_self_orthogonal,
    predict_face_gram_rank,
    predict_partition_code,
    predict_partition_dual,
    predict_partition_lcd,
    predict_simplex_dual,
    predict_union_code,
    predict_union_dual,
    predict_union_self_orthogonal,
)
from .report import CodeReport, analyze_code, analyze_linear_code
from .structure import (
    gram_matrix,
    gram_rank,
    griesmer_check,
    griesmer_sum,
    hull_dimension,
    is_lcd,
    is_self_orthogonal,
    singleton_check,
)
from .verify import (
    CLAIMS,
    ParameterRange,
    TheoremVerdict,
    claim_ids,
    resolve_claim,
    verify_theorem,
)

__all__ = [
    "CLAIMS",
    "CodeParams",
    "CodeReport",
    "OptimalityEntry",
    "OptimalityTable",
    "ParameterRange",
    "TheoremVerdict",
    "analyze_code",
    "analyze_linear_code",
    "claim_ids",
    "gram_matrix",
    "gram_rank",
    "griesmer_check",
    "griesmer_sum",
    "hull_dimension",
    "is_lcd",
    "is_self_orthogonal",
    "load_optimality_table",
    "optimality_lookup",
    "predict_difference_code",
    "predict_difference_dual",
    "predict_difference_self_orthogonal",
    "predict_face_gram_rank",
    "predict_partition_code",
    "predict_partition_dual",
    "predict_partition_lcd",
    "predict_simplex_dual",
    "predict_union_code",
    "predict_union_dual",
    "predict_union_self_orthogonal",
    "resolve_claim",
    "singleton_check",
    "verify_theorem",
]
