"""
Closed-form parameters for the difference, union and partition constructions.

Every predictor is pure and raises ConstructionError outside the parameter
domain in which its formula holds. ``a`` and ``b`` are the sizes |A| and |B|
of the generating faces; ``m`` is the (even) ambient dimension of the
partition construction.
"""

from math import comb
from typing import Dict, NamedTuple, Tuple

from codes import WeightDistribution
from errors import ConstructionError


class CodeParams(NamedTuple):
    n: int
    k: int
    d: int

    def __str__(self) -> str:
        return f"[{self.n},{self.k},{self.d}]"


def _distribution(n: int, terms: Dict[int, int]) -> WeightDistribution:
    counts: Dict[int, int] = {}
    for w, c in terms.items():
        counts[w] = counts.get(w, 0) + c
    return WeightDistribution.from_mapping(n, counts)


def _check_partition_dimension(m: int):
    if m < 2 or m % 2:
        raise ConstructionError(f"partition construction needs an even m >= 2, got {m}")


def predict_difference_code(a: int, b: int) -> Tuple[CodeParams, WeightDistribution]:
    """
    D = Δ_A \\ Δ_B.

    b = 0 gives the one-weight [2^a - 1, a, 2^(a-1)] simplex code; otherwise
    the two-weight [2^a - 2^b, a, 2^(a-1) - 2^(b-1)] code.
    """
    if not 0 <= b < a:
        raise ConstructionError(f"need 0 <= b < a, got a={a} b={b}")
    if b == 0:
        n = 2**a - 1
        d = 2 ** (a - 1)
        return CodeParams(n, a, d), _distribution(n, {d: n})

    n = 2**a - 2**b
    d = 2 ** (a - 1) - 2 ** (b - 1)
    terms = {d: 2**a - 2 ** (a - b), 2 ** (a - 1): 2 ** (a - b) - 1}
    return CodeParams(n, a, d), _distribution(n, terms)


def predict_difference_dual(a: int, b: int) -> CodeParams:
    """Dual of the difference code: distance 3 if a > b + 1, 4 if a = b + 1 >= 3."""
    if b < 1:
        raise ConstructionError("b = 0 is the simplex case; use predict_simplex_dual")
    if a > b + 1:
        delta = 3
    elif a == b + 1 and a >= 3:
        delta = 4
    else:
        raise ConstructionError(f"(a, b) = ({a}, {b}) is outside the dual-distance domain")
    n = 2**a - 2**b
    return CodeParams(n, n - a, delta)


def predict_simplex_dual(a: int) -> CodeParams:
    """The [2^a - 1, 2^a - 1 - a, 3] Hamming code."""
    if a <= 1:
        raise ConstructionError(f"Hamming dual needs a > 1, got a={a}")
    n = 2**a - 1
    return CodeParams(n, n - a, 3)


def predict_union_code(a: int, b: int) -> Tuple[CodeParams, WeightDistribution]:
    """
    D = (Δ_A ∪ Δ_B) \\ {0} for disjoint A, B: a three-weight
    [2^a + 2^b - 2, a + b, 2^(b-1)] code.
    """
    if not 0 < b < a:
        raise ConstructionError(f"need 0 < b < a, got a={a} b={b}")
    n = 2**a + 2**b - 2
    low, high = 2 ** (b - 1), 2 ** (a - 1)
    terms = {
        low: 2**b - 1,
        high: 2**a - 1,
        low + high: (2**b - 1) * (2**a - 1),
    }
    return CodeParams(n, a + b, low), _distribution(n, terms)


def predict_union_dual(a: int, b: int) -> CodeParams:
    if not 0 < b < a:
        raise ConstructionError(f"need 0 < b < a, got a={a} b={b}")
    n = 2**a + 2**b - 2
    if a + b >= n:
        raise ConstructionError(f"(a, b) = ({a}, {b}) leaves no room for a nonzero dual")
    return CodeParams(n, n - a - b, 3)


def partition_enumerator_terms(m: int) -> Dict[int, int]:
    """
    Nonzero-weight terms of the partition code: sum_{l<k} C(k,l) 3^(k-l) z^(m-2l).

    l counts the blocks that a message misses; each of the other k - l blocks
    contributes weight 2 in one of three ways.
    """
    _check_partition_dimension(m)
    k = m // 2
    return {m - 2 * l: comb(k, l) * 3 ** (k - l) for l in range(k)}


def printed_partition_enumerator_total(m: int) -> int:
    """Coefficient total of the product form 1 + prod_l 3^l C(k,l) z^(m-2l)."""
    _check_partition_dimension(m)
    k = m // 2
    product = 1
    for l in range(k):
        product *= 3**l * comb(k, l)
    return 1 + product


def predict_partition_code(m: int) -> Tuple[CodeParams, WeightDistribution]:
    """The [3m/2, m, 2] partition code and its enumerator."""
    _check_partition_dimension(m)
    n = 3 * m // 2
    return CodeParams(n, m, 2), _distribution(n, partition_enumerator_terms(m))


def predict_partition_dual(m: int) -> CodeParams:
    _check_partition_dimension(m)
    return CodeParams(3 * m // 2, m // 2, 3)


def predict_difference_self_orthogonal(a: int, b: int) -> bool:
    """Self-orthogonal iff b = 0 and a >= 3, or a > b >= 3."""
    if not 0 <= b < a:
        raise ConstructionError(f"need 0 <= b < a, got a={a} b={b}")
    return (b == 0 and a >= 3) or b >= 3


def predict_union_self_orthogonal(a: int, b: int) -> bool:
    """Self-orthogonal iff a > b >= 3."""
    if not 0 < b < a:
        raise ConstructionError(f"need 0 < b < a, got a={a} b={b}")
    return b >= 3


def predict_face_gram_rank(a: int) -> int:
    """rank(G G^T) for D = Δ_A \\ {0}: 0 when a >= 3, otherwise a."""
    if a < 1:
        raise ConstructionError(f"need a >= 1, got a={a}")
    return 0 if a >= 3 else a


def predict_partition_lcd(m: int) -> bool:
    """Partition codes are always LCD, with rank(G G^T) = m."""
    _check_partition_dimension(m)
    return True
