"""Gram-matrix structure tests and the Griesmer / Singleton bounds."""

import logging
from typing import Tuple

import config
from codes import LinearCode, dual_code
from errors import ConstructionError, RankConsistencyError
from gf2core import Gf2Matrix, matmul_transpose, rank

logger = logging.getLogger(__name__)


def _construction_matrix(code: LinearCode) -> Gf2Matrix:
    if code.full_matrix is None:
        raise ConstructionError(
            f"[{code.n},{code.k}] code has no construction matrix; Gram tests need G"
        )
    return code.full_matrix


def gram_matrix(code: LinearCode) -> Gf2Matrix:
    """G G^T for the construction matrix G (m x m)."""
    return matmul_transpose(_construction_matrix(code))


def gram_rank(code: LinearCode) -> int:
    """
    Rank of G G^T over GF(2).

    Raises:
        ConstructionError: the code carries no construction matrix
    """
    return rank(gram_matrix(code))


def hull_dimension(code: LinearCode) -> int:
    """
    dim(C ∩ C^⊥) computed directly as k + (n - k) - rank([gen; H]).

    H is a generator of the dual, so this does not go through G G^T and serves
    as an independent check of the Gram-rank LCD test.
    """
    if code.k == 0 or code.k == code.n:
        return 0
    dual = dual_code(code)
    return code.k + dual.k - rank(code.gen.vstack(dual.gen))


def is_self_orthogonal(code: LinearCode) -> bool:
    """
    True iff G G^T = 0.

    The answer is cross-checked against pairwise orthogonality of the
    independent generator rows.

    Raises:
        RankConsistencyError: the two tests disagree
    """
    by_gram = gram_matrix(code).is_zero()
    by_rows = matmul_transpose(code.gen).is_zero()
    if by_gram != by_rows:
        raise RankConsistencyError(
            f"Gram test ({by_gram}) and generator-row test ({by_rows}) disagree "
            f"on self-orthogonality of the [{code.n},{code.k}] code"
        )
    return by_gram


def is_lcd(code: LinearCode) -> bool:
    """
    True iff rank(G G^T) = rank(G).

    For codes of length up to config.HULL_CHECK_MAX_LENGTH the result is
    compared with the direct hull test C ∩ C^⊥ = {0}.

    Raises:
        RankConsistencyError: the Gram test and the hull test disagree
    """
    lcd = gram_rank(code) == code.k
    if code.n <= config.HULL_CHECK_MAX_LENGTH:
        hull = hull_dimension(code)
        if lcd != (hull == 0):
            raise RankConsistencyError(
                f"Gram-rank LCD test ({lcd}) contradicts hull dimension {hull} "
                f"of the [{code.n},{code.k}] code"
            )
    return lcd


def griesmer_sum(k: int, d: int) -> int:
    """sum_{i<k} ceil(d / 2^i)."""
    return sum(-(-d >> i) for i in range(k))


def griesmer_check(n: int, k: int, d: int) -> Tuple[int, bool]:
    """
    Evaluate the binary Griesmer bound for an [n, k, d] code.

    Args:
        n: Length
        k: Dimension, at least 1
        d: Minimum distance, at least 1

    Returns:
        (Griesmer sum, whether it equals n)

    Raises:
        ConstructionError: k or d below 1
        RankConsistencyError: the sum exceeds n, so the parameters are impossible
    """
    if k < 1 or d < 1:
        raise ConstructionError(f"Griesmer bound needs k >= 1 and d >= 1, got k={k} d={d}")
    total = griesmer_sum(k, d)
    if total > n:
        raise RankConsistencyError(
            f"[{n},{k},{d}] violates the Griesmer bound (sum {total} > {n})"
        )
    return total, total == n


def singleton_check(n: int, k: int, d: int) -> Tuple[int, bool]:
    """
    Singleton bound d <= n - k + 1.

    Returns:
        (n - k + 1, whether d attains it)

    Raises:
        RankConsistencyError: d exceeds the bound
    """
    bound = n - k + 1
    if d > bound:
        raise RankConsistencyError(f"[{n},{k},{d}] violates the Singleton bound {bound}")
    return bound, d == bound
