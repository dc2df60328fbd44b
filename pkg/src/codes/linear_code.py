"""Linear codes C_D and their duals."""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

import numpy as np

import config
from config import Budget
from errors import BudgetExceededError, ConstructionError, DimensionMismatchError, ZeroDualError
from gf2core import (
    BitArray,
    BitVector,
    Gf2Matrix,
    independent_rows,
    nullspace_basis,
    span_weight_profile,
)
from .defining_set import DefiningSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearCode:
    """
    Binary [n, k] code given by a generator with k independent rows.

    ``full_matrix`` is the m x n matrix G whose columns are the defining-set
    vectors; it is absent for codes that were not built from a defining set.
    """

    n: int
    k: int
    gen: Gf2Matrix
    full_matrix: Optional[Gf2Matrix] = None

    @classmethod
    def from_generator(cls, matrix: Gf2Matrix, full_matrix: Gf2Matrix = None) -> "LinearCode":
        """Keep an independent subset of the rows of ``matrix``."""
        keep = independent_rows(matrix)
        gen = matrix.select_rows(keep)
        return cls(n=matrix.cols, k=len(keep), gen=gen, full_matrix=full_matrix)

    @property
    def redundancy(self) -> int:
        return self.n - self.k


def build_code(defining_set: DefiningSet) -> LinearCode:
    """
    C_D with G = [g_1^T ... g_n^T] in defining-set order.

    The generator is G' (zero rows deleted) reduced to its earliest
    independent rows, so k = rank(G).
    """
    full = Gf2Matrix.from_columns(defining_set.vectors, defining_set.m)
    code = LinearCode.from_generator(full, full_matrix=full)
    logger.debug(f"Built [{code.n},{code.k}] code from {defining_set.label or 'defining set'}")
    return code


def encode(defining_set: DefiningSet, u: BitVector) -> BitArray:
    """c_u = (u.g_1, ..., u.g_n)."""
    if u.m != defining_set.m:
        raise DimensionMismatchError(f"message of dimension {u.m}, expected {defining_set.m}")
    return BitArray([u.dot(g) for g in defining_set.vectors])


def code_weight_profile(code: LinearCode, budget: Budget = None) -> np.ndarray:
    """Weights of every codeword xG over the 2^k span of the generator."""
    budget = budget or config.DEFAULT_BUDGET
    if code.k > budget.max_codeword_bits:
        raise BudgetExceededError(
            f"enumerating 2^{code.k} codewords exceeds the budget of 2^{budget.max_codeword_bits}"
        )
    return span_weight_profile(code.gen.column_masks(), code.k, workers=budget.workers)


def min_distance(code: LinearCode, budget: Budget = None) -> int:
    """Minimum nonzero codeword weight by enumerating the generator span."""
    if code.k == 0:
        raise ConstructionError("the zero code has no minimum distance")
    counts = code_weight_profile(code, budget)
    return int(np.flatnonzero(counts[1:])[0]) + 1


def dual_code(code: LinearCode) -> LinearCode:
    """
    C^⊥ generated by a nullspace basis of the generator.

    A full-length code (k = n) has the zero code as its dual; it is returned
    with k = 0 and a warning.
    """
    if code.k == 0:
        raise ConstructionError("dual of the zero code requested")
    basis = nullspace_basis(code.gen)
    if not basis:
        logger.warning(f"[{code.n},{code.k}] code is the full space; its dual is the zero code")
        return LinearCode(n=code.n, k=0, gen=Gf2Matrix.zeros(0, code.n))
    return LinearCode(n=code.n, k=len(basis), gen=Gf2Matrix.from_rows(basis, code.n))


def _dependent_columns(columns: np.ndarray, w: int) -> bool:
    """True iff some w of the given columns XOR to zero (assuming none fewer do)."""
    n = columns.size
    if n < w:
        return False
    if w == 1:
        return bool((columns == 0).any())
    if w == 2:
        return np.unique(columns).size < n
    if w == 3:
        present = set(columns.tolist())
        for i in range(n - 1):
            if not present.isdisjoint((columns[i] ^ columns[i + 1:]).tolist()):
                return True
        return False
    if w == 4:
        # no dependency of size <= 3 means equal pair sums come from disjoint pairs,
        # and pair sums are nonzero values below 2^bits
        bits = int(columns.max()).bit_length()
        if n * (n - 1) // 2 >= 1 << bits:
            return True
        seen = set()
        for i in range(n - 1):
            row = (columns[i] ^ columns[i + 1:]).tolist()
            if not seen.isdisjoint(row):
                return True
            seen.update(row)
        return False
    index = {int(c): i for i, c in enumerate(columns)}
    for combo in combinations(range(n), w - 1):
        acc = 0
        for i in combo:
            acc ^= int(columns[i])
        j = index.get(acc)
        if j is not None and j > combo[-1]:
            return True
    return False


def dual_min_distance(
    code: LinearCode, w_max: int = None, budget: Budget = None
) -> Optional[int]:
    """
    Minimum distance of C^⊥: the fewest linearly dependent columns of the generator.

    Dependencies of size w <= 4 are searched exhaustively first. If none is
    found and the dual is small enough (n - k <= max_codeword_bits), the dual
    is enumerated and its exact distance returned. Otherwise the column search
    continues up to ``w_max``.

    Args:
        code: The code whose dual is measured
        w_max: Largest dependency size searched (defaults to config.DUAL_SEARCH_MAX_WEIGHT)
        budget: Enumeration limits

    Returns:
        The dual distance, or None if it exceeds ``w_max`` and the dual is too
        large to enumerate

    Raises:
        ZeroDualError: the dual is the zero code
    """
    budget = budget or config.DEFAULT_BUDGET
    w_max = w_max or config.DUAL_SEARCH_MAX_WEIGHT
    if code.k >= code.n:
        raise ZeroDualError(f"[{code.n},{code.k}] code has the zero code as its dual")

    columns = code.gen.column_masks()
    for w in range(1, min(w_max, 4) + 1):
        if _dependent_columns(columns, w):
            return w

    if code.redundancy <= budget.max_codeword_bits:
        logger.debug(f"Enumerating the [{code.n},{code.redundancy}] dual for its distance")
        return min_distance(dual_code(code), budget)

    for w in range(5, w_max + 1):
        if _dependent_columns(columns, w):
            return w
    logger.info(f"Dual distance of the [{code.n},{code.k}] code exceeds {w_max}")
    return None
