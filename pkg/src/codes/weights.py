"""Weight distributions: brute force, generating-function route, MacWilliams."""

import logging
from dataclasses import dataclass
from math import comb
from typing import Dict, Iterable, Optional, Tuple

import numpy as np

import config
from config import Budget
from errors import BudgetExceededError, ConstructionError, DimensionMismatchError, RankConsistencyError
from gf2core import BitVector, span_weight_profile
from simplicial import SimplicialComplex, genfunc_eval_pm1
from .linear_code import LinearCode, build_code, code_weight_profile

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeightDistribution:
    """(A_0, ..., A_n) with A_i the number of codewords of weight i."""

    n: int
    counts: Tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} counts, got {len(self.counts)}")
        if any(c < 0 for c in self.counts):
            raise ValueError("weight counts must be nonnegative")

    @classmethod
    def from_mapping(cls, n: int, counts: Dict[int, int]) -> "WeightDistribution":
        """Build from {weight: count}; A_0 = 1 is implied when missing."""
        values = [0] * (n + 1)
        values[0] = 1
        for w, c in counts.items():
            if not 0 <= w <= n:
                raise ValueError(f"weight {w} outside [0, {n}]")
            values[w] = c
        return cls(n, tuple(values))

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def t_weight(self) -> int:
        """Number of distinct nonzero weights."""
        return sum(1 for c in self.counts[1:] if c)

    @property
    def min_weight(self) -> Optional[int]:
        for w, c in enumerate(self.counts[1:], 1):
            if c:
                return w
        return None

    @property
    def dimension(self) -> int:
        total = self.total
        if total & (total - 1):
            raise RankConsistencyError(f"codeword count {total} is not a power of two")
        return total.bit_length() - 1

    def nonzero_terms(self) -> Dict[int, int]:
        return {w: c for w, c in enumerate(self.counts) if c}

    def enumerator(self) -> str:
        """The weight enumerator as text, e.g. ``1 + 7z^4``."""
        parts = []
        for w, c in enumerate(self.counts):
            if not c:
                continue
            if w == 0:
                parts.append(str(c))
            elif w == 1:
                parts.append(f"{c}z")
            else:
                parts.append(f"{c}z^{w}")
        return " + ".join(parts) if parts else "0"

    def __str__(self) -> str:
        return self.enumerator()


@dataclass(frozen=True)
class MessageProfile:
    """Weights of c_u over all 2^m messages u, before collapsing repeats."""

    m: int
    n: int
    counts: Tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def collapse(self, k: int) -> WeightDistribution:
        """
        Divide out the 2^{m-k} repetition of every codeword.

        Raises:
            RankConsistencyError: a count is not divisible, i.e. k is wrong
        """
        repeat = 1 << (self.m - k)
        if any(c % repeat for c in self.counts):
            raise RankConsistencyError(
                f"message profile is not divisible by 2^{self.m - k}; rank {k} is inconsistent"
            )
        return WeightDistribution(self.n, tuple(c // repeat for c in self.counts))


def weight_distribution_bruteforce(
    defining_set, k: int = None, budget: Budget = None
) -> Tuple[MessageProfile, WeightDistribution]:
    """
    Weight of c_u for every u in F_2^m, then the code distribution.

    Args:
        defining_set: The set D
        k: Code dimension; computed from the construction when omitted
        budget: Enumeration limits

    Returns:
        (message profile summing to 2^m, code distribution summing to 2^k)
    """
    budget = budget or config.DEFAULT_BUDGET
    m = defining_set.m
    if m > budget.max_message_bits:
        raise BudgetExceededError(
            f"enumerating 2^{m} messages exceeds the budget of 2^{budget.max_message_bits}"
        )
    if k is None:
        k = build_code(defining_set).k

    columns = np.array([v.bits for v in defining_set.vectors], dtype=np.uint64)
    raw = span_weight_profile(columns, m, workers=budget.workers)
    profile = MessageProfile(m, defining_set.n, tuple(int(c) for c in raw))
    if profile.total != 1 << m:
        raise RankConsistencyError(f"message profile sums to {profile.total}, not 2^{m}")
    logger.debug(f"Collapsing 2^{m} message weights by the repetition factor 2^{m - k}")
    return profile, profile.collapse(k)


def code_weight_distribution(code: LinearCode, budget: Budget = None) -> WeightDistribution:
    """Distribution of the code by enumerating its 2^k generator span."""
    counts = code_weight_profile(code, budget)
    return WeightDistribution(code.n, tuple(int(c) for c in counts))


def weight_via_genfunc(
    outer: SimplicialComplex, inner: SimplicialComplex, u: BitVector
) -> int:
    """
    wt(c_u) for D = Δ_1 \\ Δ_2 from generating-function values at (-1)^u.

    wt = |D|/2 - H_1((-1)^u)/2 + H_2((-1)^u)/2, valid for u != 0.

    Raises:
        ConstructionError: u = 0, or Δ_2 is not inside Δ_1
    """
    if outer.m != inner.m or u.m != outer.m:
        raise DimensionMismatchError("complexes and message must share a dimension")
    if u.is_zero():
        raise ConstructionError("the generating-function weight formula needs u != 0")
    if not inner.is_subcomplex_of(outer):
        raise ConstructionError("inner complex is not contained in the outer complex")

    size = genfunc_eval_pm1(outer, BitVector.zero(u.m)) - genfunc_eval_pm1(inner, BitVector.zero(u.m))
    doubled = size - genfunc_eval_pm1(outer, u) + genfunc_eval_pm1(inner, u)
    if doubled % 2:
        raise RankConsistencyError(f"odd doubled weight {doubled}; generating-function mismatch")
    return doubled // 2


def krawtchouk(n: int, j: int, i: int) -> int:
    """K_j(i) = sum_s (-1)^s C(i, s) C(n - i, j - s)."""
    return sum((-1) ** s * comb(i, s) * comb(n - i, j - s) for s in range(0, min(i, j) + 1))


def macwilliams_transform(distribution: WeightDistribution) -> WeightDistribution:
    """
    Dual distribution B_j = 2^{-k} sum_i A_i K_j(i), in exact integers.

    Raises:
        RankConsistencyError: a transformed count is not an integer
    """
    n = distribution.n
    k = distribution.dimension
    terms = [(i, a) for i, a in enumerate(distribution.counts) if a]
    dual = []
    for j in range(n + 1):
        value = sum(a * krawtchouk(n, j, i) for i, a in terms)
        if value % (1 << k):
            raise RankConsistencyError(f"MacWilliams coefficient B_{j} is not integral")
        dual.append(value >> k)
    return WeightDistribution(n, tuple(dual))


def distribution_from_weights(n: int, weights: Iterable[int]) -> WeightDistribution:
    counts = [0] * (n + 1)
    for w in weights:
        counts[w] += 1
    return WeightDistribution(n, tuple(counts))
