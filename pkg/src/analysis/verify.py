"""
Sweep closed-form claims against brute force.

Each claim has a descriptive id (``difference-weights``) and a numbered alias
(``3.1``). A sweep builds every construction in its parameter range, measures
it exhaustively and compares the measurement with the predictor. Disagreements
are returned as data; nothing here asserts.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

import config
from codes import (
    build_code,
    difference_set,
    dual_min_distance,
    partition_set,
    union_set,
    weight_distribution_bruteforce,
)
from config import Budget
from errors import ConstructionError
from gf2core import BitVector, rank
from . import predictors
from .structure import gram_rank, griesmer_check, hull_dimension, is_lcd, is_self_orthogonal

logger = logging.getLogger(__name__)

Params = Tuple[int, ...]


@dataclass(frozen=True)
class TheoremVerdict:
    theorem_id: str
    params: Dict[str, int]
    predicted: Dict[str, Any]
    observed: Dict[str, Any]
    agrees: bool
    note: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "theorem_id": self.theorem_id,
            "params": dict(self.params),
            "predicted": dict(self.predicted),
            "observed": dict(self.observed),
            "agrees": self.agrees,
            "note": self.note,
        }


@dataclass(frozen=True)
class ParameterRange:
    """Upper limits for a sweep; None keeps the claim's default."""

    a_max: Optional[int] = None
    m_max: Optional[int] = None


@dataclass(frozen=True)
class Claim:
    claim_id: str
    alias: str
    names: Tuple[str, ...]
    default_max: int
    params: Callable[[int], Iterator[Params]]
    check: Callable[[Params, Budget], Tuple[Dict[str, Any], Dict[str, Any]]]
    note: Callable[[Params, Dict[str, Any]], str] = field(default=lambda p, o: "")
    uses_m: bool = False


def _faces(a: int, b: int, disjoint: bool) -> Tuple[BitVector, BitVector]:
    """A = {1..a}; B = {1..b} nested inside A, or {a+1..a+b} beside it."""
    m = a + b if disjoint else a
    A = BitVector.from_support(range(1, a + 1), m)
    start = a + 1 if disjoint else 1
    B = BitVector.from_support(range(start, start + b), m)
    return A, B


def _pairs(lowest_b: int, lowest_a: int = 1) -> Callable[[int], Iterator[Params]]:
    def generate(a_max: int) -> Iterator[Params]:
        for a in range(lowest_a, a_max + 1):
            for b in range(lowest_b, a):
                yield a, b

    return generate


def _singles(lowest: int) -> Callable[[int], Iterator[Params]]:
    def generate(a_max: int) -> Iterator[Params]:
        for a in range(lowest, a_max + 1):
            yield (a,)

    return generate


def _even(m_max: int) -> Iterator[Params]:
    for m in range(2, m_max + 1, 2):
        yield (m,)


def _weights_observed(defining_set, budget: Budget) -> Dict[str, Any]:
    code = build_code(defining_set)
    _, distribution = weight_distribution_bruteforce(defining_set, code.k, budget)
    d = distribution.min_weight
    total, meets = griesmer_check(code.n, code.k, d)
    return {
        "n": code.n,
        "k": code.k,
        "d": d,
        "distribution": list(distribution.counts),
        "meets_griesmer": meets,
    }


def _weights_predicted(params, distribution, meets: Optional[bool] = None) -> Dict[str, Any]:
    predicted = {
        "n": params.n,
        "k": params.k,
        "d": params.d,
        "distribution": list(distribution.counts),
    }
    predicted["meets_griesmer"] = (
        meets if meets is not None else griesmer_check(params.n, params.k, params.d)[1]
    )
    return predicted


def _dual_observed(defining_set, budget: Budget) -> Dict[str, Any]:
    code = build_code(defining_set)
    return {
        "n": code.n,
        "k": code.n - code.k,
        "d": dual_min_distance(code, budget=budget),
    }


def _check_difference_weights(p: Params, budget: Budget):
    a, b = p
    params, distribution = predictors.predict_difference_code(a, b)
    observed = _weights_observed(difference_set(*_faces(a, b, False), budget), budget)
    return _weights_predicted(params, distribution, meets=True), observed


def _check_difference_dual(p: Params, budget: Budget):
    a, b = p
    predicted = predictors.predict_difference_dual(a, b)._asdict()
    return predicted, _dual_observed(difference_set(*_faces(a, b, False), budget), budget)


def _check_simplex_dual(p: Params, budget: Budget):
    (a,) = p
    predicted = predictors.predict_simplex_dual(a)._asdict()
    A = BitVector.ones(a)
    return predicted, _dual_observed(difference_set(A, BitVector.zero(a), budget), budget)


# Parameters quoted for individual union instances, checked alongside the formula.
QUOTED_UNION_DISTANCES: Dict[Params, int] = {(3, 2): 3}


def _check_union_weights(p: Params, budget: Budget):
    a, b = p
    params, distribution = predictors.predict_union_code(a, b)
    observed = _weights_observed(union_set(*_faces(a, b, True), budget), budget)
    predicted = _weights_predicted(params, distribution)
    if p in QUOTED_UNION_DISTANCES:
        predicted["example_d"] = QUOTED_UNION_DISTANCES[p]
        observed["example_d"] = observed["d"]
    return predicted, observed


def _check_union_dual(p: Params, budget: Budget):
    a, b = p
    predicted = predictors.predict_union_dual(a, b)._asdict()
    return predicted, _dual_observed(union_set(*_faces(a, b, True), budget), budget)


def _check_partition_weights(p: Params, budget: Budget):
    (m,) = p
    params, distribution = predictors.predict_partition_code(m)
    observed = _weights_observed(partition_set(m, budget), budget)
    return _weights_predicted(params, distribution), observed


def _check_partition_dual(p: Params, budget: Budget):
    (m,) = p
    predicted = predictors.predict_partition_dual(m)._asdict()
    return predicted, _dual_observed(partition_set(m, budget), budget)


def _check_face_gram_rank(p: Params, budget: Budget):
    (a,) = p
    code = build_code(difference_set(BitVector.ones(a), BitVector.zero(a), budget))
    predicted = {"rank": a, "gram_rank": predictors.predict_face_gram_rank(a)}
    observed = {"rank": rank(code.full_matrix), "gram_rank": gram_rank(code)}
    return predicted, observed


def _check_difference_self_orthogonal(p: Params, budget: Budget):
    a, b = p
    code = build_code(difference_set(*_faces(a, b, False), budget))
    predicted = {"self_orthogonal": predictors.predict_difference_self_orthogonal(a, b)}
    return predicted, {"self_orthogonal": is_self_orthogonal(code)}


def _check_union_self_orthogonal(p: Params, budget: Budget):
    a, b = p
    code = build_code(union_set(*_faces(a, b, True), budget))
    predicted = {"self_orthogonal": predictors.predict_union_self_orthogonal(a, b)}
    return predicted, {"self_orthogonal": is_self_orthogonal(code)}


def _check_partition_lcd(p: Params, budget: Budget):
    (m,) = p
    code = build_code(partition_set(m, budget))
    predicted = {"lcd": predictors.predict_partition_lcd(m), "gram_rank": m, "hull_dimension": 0}
    observed = {"lcd": is_lcd(code), "gram_rank": gram_rank(code), "hull_dimension": hull_dimension(code)}
    return predicted, observed


def _union_weights_note(p: Params, observed: Dict[str, Any]) -> str:
    if p not in QUOTED_UNION_DISTANCES:
        return ""
    quoted = f"[{observed['n']},{observed['k']},{QUOTED_UNION_DISTANCES[p]}]"
    return (
        f"this construction is often quoted as a {quoted} self-orthogonal code; "
        f"brute force gives d={observed['d']}, and (a, b) = {p} is outside the "
        "self-orthogonality condition a > b >= 3"
    )


def _partition_weights_note(p: Params, observed: Dict[str, Any]) -> str:
    (m,) = p
    printed = predictors.printed_partition_enumerator_total(m)
    return (
        "enumerator checked in the sum form 1 + sum_{l<k} C(k,l) 3^(k-l) z^(m-2l); "
        f"the printed product form 1 + prod_l 3^l C(k,l) z^(m-2l) totals {printed}, "
        f"not 2^{m} = {2**m}"
    )


def _partition_lcd_note(p: Params, observed: Dict[str, Any]) -> str:
    return "G G^T is block diagonal with 2x2 blocks [[0,1],[1,0]], not I_2; its rank is still m"


CLAIMS: Tuple[Claim, ...] = (
    Claim("difference-weights", "3.1", ("a", "b"), 8, _pairs(0), _check_difference_weights),
    Claim(
        "difference-dual",
        "3.2",
        ("a", "b"),
        8,
        lambda a_max: (p for p in _pairs(1, 2)(a_max) if p != (2, 1)),
        _check_difference_dual,
    ),
    Claim("simplex-dual", "3.3", ("a",), 8, _singles(2), _check_simplex_dual),
    Claim(
        "union-weights",
        "3.4",
        ("a", "b"),
        7,
        _pairs(1, 2),
        _check_union_weights,
        note=_union_weights_note,
    ),
    Claim("union-dual", "3.5", ("a", "b"), 7, _pairs(1, 2), _check_union_dual),
    Claim(
        "partition-weights",
        "3.6",
        ("m",),
        16,
        _even,
        _check_partition_weights,
        note=_partition_weights_note,
        uses_m=True,
    ),
    Claim("partition-dual", "3.7", ("m",), 16, _even, _check_partition_dual, uses_m=True),
    Claim("face-gram-rank", "4.1", ("a",), 10, _singles(1), _check_face_gram_rank),
    Claim(
        "difference-self-orthogonal",
        "4.2",
        ("a", "b"),
        8,
        _pairs(0),
        _check_difference_self_orthogonal,
    ),
    Claim(
        "union-self-orthogonal",
        "4.5",
        ("a", "b"),
        7,
        _pairs(1, 2),
        _check_union_self_orthogonal,
    ),
    Claim(
        "partition-lcd",
        "4.6",
        ("m",),
        16,
        _even,
        _check_partition_lcd,
        note=_partition_lcd_note,
        uses_m=True,
    ),
)

_BY_NAME: Dict[str, Claim] = {}
for _claim in CLAIMS:
    _BY_NAME[_claim.claim_id] = _claim
    _BY_NAME[_claim.alias] = _claim


def claim_ids() -> List[str]:
    return [c.claim_id for c in CLAIMS]


def resolve_claim(claim_id: str) -> Claim:
    """
    Raises:
        ConstructionError: unknown claim id or alias
    """
    claim = _BY_NAME.get(str(claim_id).strip().lower())
    if claim is None:
        raise ConstructionError(
            f"unknown claim {claim_id!r}; expected one of {', '.join(claim_ids())} "
            f"or {', '.join(c.alias for c in CLAIMS)}"
        )
    return claim


def claim_parameters(claim: Claim, ranges: ParameterRange = None) -> List[Params]:
    ranges = ranges or ParameterRange()
    limit = ranges.m_max if claim.uses_m else ranges.a_max
    return sorted(claim.params(limit if limit is not None else claim.default_max))


def _verdict(claim: Claim, p: Params, budget: Budget) -> TheoremVerdict:
    predicted, observed = claim.check(p, budget)
    agrees = predicted == observed
    if not agrees:
        logger.warning(f"{claim.claim_id} {p}: predicted {predicted}, observed {observed}")
    return TheoremVerdict(
        theorem_id=claim.claim_id,
        params=dict(zip(claim.names, p)),
        predicted=predicted,
        observed=observed,
        agrees=agrees,
        note=claim.note(p, observed),
    )


def verify_theorem(
    claim_id: str, ranges: ParameterRange = None, budget: Budget = None
) -> List[TheoremVerdict]:
    """
    Compare one claim with brute force over its parameter range.

    Args:
        claim_id: Descriptive id or numbered alias
        ranges: Sweep limits (claim defaults when omitted)
        budget: Enumeration limits; its worker count also bounds the
            number of parameter tuples measured at once

    Returns:
        Verdicts sorted by parameter tuple

    Raises:
        ConstructionError: unknown claim
        BudgetExceededError: an instance does not fit the budget
    """
    budget = budget or config.DEFAULT_BUDGET
    claim = resolve_claim(claim_id)
    params = claim_parameters(claim, ranges)
    logger.info(f"Verifying {claim.claim_id} over {len(params)} parameter tuples")

    if budget.workers <= 1 or len(params) <= 1:
        verdicts = [_verdict(claim, p, budget) for p in params]
    else:
        with ThreadPoolExecutor(max_workers=budget.workers) as pool:
            verdicts = list(pool.map(lambda p: _verdict(claim, p, budget), params))

    disagreements = sum(1 for v in verdicts if not v.agrees)
    logger.info(
        f"{claim.claim_id}: {len(verdicts) - disagreements} agree, {disagreements} disagree"
    )
    return sorted(verdicts, key=lambda v: tuple(v.params.values()))
