"""Full structural report for a constructed code."""

import logging
from dataclasses import dataclass, replace
from typing import Any, Dict, Optional

import config
from codes import (
    DefiningSet,
    LinearCode,
    WeightDistribution,
    build_code,
    code_weight_distribution,
    dual_min_distance,
    macwilliams_transform,
    weight_distribution_bruteforce,
)
from config import Budget
from errors import ConstructionError, RankConsistencyError
from .optimality import OptimalityTable, optimality_lookup
from .predictors import CodeParams
from .structure import griesmer_check, gram_rank, is_lcd, is_self_orthogonal, singleton_check

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CodeReport:
    """
    Parameters, distribution and Gram structure of one code.

    ``dual_params.d`` is None when the dual distance exceeds the search bound
    or the dual is the zero code.
    """

    params: CodeParams
    distribution: WeightDistribution
    t_weight: int
    self_orthogonal: bool
    lcd: bool
    gram_rank: int
    hull_dimension: int
    griesmer_sum: int
    meets_griesmer: bool
    singleton_bound: int
    dual_params: CodeParams
    dual_distribution: Optional[WeightDistribution] = None
    optimality: str = "unknown"
    label: str = ""
    provenance: str = "custom"
    m: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready view; serialize with ``sort_keys=True`` for canonical output."""
        return {
            "label": self.label,
            "provenance": self.provenance,
            "m": self.m,
            "params": self.params._asdict(),
            "distribution": list(self.distribution.counts),
            "enumerator": self.distribution.enumerator(),
            "t_weight": self.t_weight,
            "self_orthogonal": self.self_orthogonal,
            "lcd": self.lcd,
            "gram_rank": self.gram_rank,
            "hull_dimension": self.hull_dimension,
            "griesmer_sum": self.griesmer_sum,
            "meets_griesmer": self.meets_griesmer,
            "singleton_bound": self.singleton_bound,
            "dual_params": self.dual_params._asdict(),
            "dual_distribution": (
                list(self.dual_distribution.counts) if self.dual_distribution else None
            ),
            "optimality": self.optimality,
        }


def _dual_distance(
    code: LinearCode, dual_distribution: Optional[WeightDistribution], budget: Budget
) -> Optional[int]:
    if code.k == code.n:
        return None
    delta = dual_min_distance(code, budget=budget)
    if dual_distribution is None:
        return delta
    transformed = dual_distribution.min_weight
    if delta is None:
        logger.debug(f"Dual distance {transformed} of [{code.n},{code.k}] taken from MacWilliams")
        return transformed
    if delta != transformed:
        raise RankConsistencyError(
            f"column search gives dual distance {delta}, MacWilliams gives {transformed}"
        )
    return delta


def _build_report(
    code: LinearCode,
    distribution: WeightDistribution,
    budget: Budget,
    table: OptimalityTable = None,
    **identity,
) -> CodeReport:
    if distribution.dimension != code.k:
        raise RankConsistencyError(
            f"distribution sums to 2^{distribution.dimension}, code dimension is {code.k}"
        )
    d = distribution.min_weight
    total, meets = griesmer_check(code.n, code.k, d)
    singleton, _ = singleton_check(code.n, code.k, d)

    self_orthogonal = is_self_orthogonal(code)
    lcd = is_lcd(code)
    rank = gram_rank(code)
    if self_orthogonal and lcd:
        raise RankConsistencyError(f"[{code.n},{code.k}] code reported both LCD and self-orthogonal")

    dual_distribution = None
    if code.n <= config.MACWILLIAMS_MAX_LENGTH:
        dual_distribution = macwilliams_transform(distribution)
    delta = _dual_distance(code, dual_distribution, budget)

    status = "unknown"
    if table is not None:
        status = optimality_lookup(code.n, code.k, d, table, kind="lcd" if lcd else "linear")

    return CodeReport(
        params=CodeParams(code.n, code.k, d),
        distribution=distribution,
        t_weight=distribution.t_weight,
        self_orthogonal=self_orthogonal,
        lcd=lcd,
        gram_rank=rank,
        hull_dimension=code.k - rank,
        griesmer_sum=total,
        meets_griesmer=meets,
        singleton_bound=singleton,
        dual_params=CodeParams(code.n, code.n - code.k, delta),
        dual_distribution=dual_distribution,
        optimality=status,
        **identity,
    )


def analyze_code(
    defining_set: DefiningSet, budget: Budget = None, table: OptimalityTable = None
) -> CodeReport:
    """
    Build C_D and report on it.

    The distribution comes from the 2^m message enumeration when m fits the
    budget, otherwise from the 2^k codeword span.

    Args:
        defining_set: The set D
        budget: Enumeration limits
        table: Optional optimality table for the ``optimality`` field

    Returns:
        CodeReport
    """
    budget = budget or config.DEFAULT_BUDGET
    code = build_code(defining_set)
    if defining_set.m <= budget.max_message_bits:
        _, distribution = weight_distribution_bruteforce(defining_set, code.k, budget)
    else:
        distribution = code_weight_distribution(code, budget)

    report = _build_report(
        code,
        distribution,
        budget,
        table,
        label=defining_set.label,
        provenance=defining_set.provenance.value,
        m=defining_set.m,
    )
    logger.info(f"Analyzed {defining_set.label or 'defining set'}: {report.params}")
    return report


def analyze_linear_code(
    code: LinearCode, budget: Budget = None, table: OptimalityTable = None, label: str = ""
) -> CodeReport:
    """Report on a code given only by its generator (e.g. a dual code)."""
    budget = budget or config.DEFAULT_BUDGET
    if code.k == 0:
        raise ConstructionError(f"the [{code.n},0] zero code has nothing to report")
    if code.full_matrix is None:
        code = replace(code, full_matrix=code.gen)
    distribution = code_weight_distribution(code, budget)
    return _build_report(code, distribution, budget, table, label=label)
