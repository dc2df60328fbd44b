"""Defining sets D of F_2^m and the constructions that produce them."""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Tuple

import config
from config import Budget
from errors import BudgetExceededError, ConstructionError, DimensionMismatchError
from gf2core import BitVector
from simplicial import SimplicialComplex, face_complex, from_maximal, weight_layer_complex

logger = logging.getLogger(__name__)


class Provenance(str, Enum):
    DIFFERENCE = "difference"
    UNION = "union"
    PARTITION = "partition"
    CUSTOM = "custom"


@dataclass(frozen=True)
class DefiningSet:
    """
    Nonzero vectors of F_2^m in ascending integer order; the columns of G.

    When the set was built as a difference of complexes, ``outer`` and
    ``inner`` hold Δ_1 and Δ_2 with D = Δ_1 \\ Δ_2, so the generating-function
    weight formula can be applied.
    """

    m: int
    vectors: Tuple[BitVector, ...]
    provenance: Provenance = Provenance.CUSTOM
    outer: Optional[SimplicialComplex] = None
    inner: Optional[SimplicialComplex] = None
    label: str = ""

    def __post_init__(self):
        if not self.vectors:
            raise ConstructionError("a defining set needs at least one vector")
        previous = 0
        for v in self.vectors:
            if v.m != self.m:
                raise DimensionMismatchError(f"vector of dimension {v.m}, expected {self.m}")
            if v.bits == 0:
                raise ConstructionError("the zero vector cannot belong to a defining set")
            if v.bits <= previous:
                raise ConstructionError("defining-set vectors must be strictly ascending")
            previous = v.bits

    @property
    def n(self) -> int:
        return len(self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)


def from_vectors(
    m: int,
    vectors: Iterable[BitVector],
    provenance: Provenance = Provenance.CUSTOM,
    label: str = "",
) -> DefiningSet:
    """
    Validate and canonically order a user-supplied defining set.

    Raises:
        ConstructionError: zero vector, duplicate vector or empty set
    """
    seen = set()
    for v in vectors:
        if v.m != m:
            raise DimensionMismatchError(f"vector of dimension {v.m}, expected {m}")
        if v.bits == 0:
            raise ConstructionError("the zero vector cannot belong to a defining set")
        if v.bits in seen:
            raise ConstructionError(f"duplicate vector {v.to_string()}")
        seen.add(v.bits)
    ordered = tuple(BitVector(bits, m) for bits in sorted(seen))
    return DefiningSet(m, ordered, provenance, label=label)


def complex_difference_set(
    outer: SimplicialComplex,
    inner: SimplicialComplex,
    provenance: Provenance = Provenance.DIFFERENCE,
    label: str = "",
    budget: Budget = None,
) -> DefiningSet:
    """
    D = Δ_1 \\ Δ_2 for nested complexes Δ_2 ⊆ Δ_1.

    Args:
        outer: Δ_1
        inner: Δ_2, must be a subcomplex of Δ_1
        provenance: Tag recorded on the result
        label: Human-readable construction name
        budget: Enumeration limits

    Returns:
        DefiningSet with ``outer``/``inner`` attached
    """
    budget = budget or config.DEFAULT_BUDGET
    if outer.m != inner.m:
        raise DimensionMismatchError(f"dimension mismatch: {outer.m} vs {inner.m}")
    if not inner.is_subcomplex_of(outer):
        raise ConstructionError("inner complex is not contained in the outer complex")

    members = [
        v for v in outer.enumerate_members(budget.member_cap)
        if v.bits and not inner.contains(v)
    ]
    if not members:
        raise ConstructionError("the complexes coincide outside 0; defining set is empty")
    if len(members) > budget.max_length:
        raise BudgetExceededError(
            f"defining set of size {len(members)} exceeds the length cap {budget.max_length}"
        )
    logger.debug(f"Built {label or 'difference'} defining set with {len(members)} vectors")
    return DefiningSet(outer.m, tuple(members), provenance, outer, inner, label)


def difference_set(A: BitVector, B: BitVector, budget: Budget = None) -> DefiningSet:
    """
    D = Δ_A \\ Δ_B with supp(B) strictly inside supp(A); |D| = 2^|A| - 2^|B|.

    B may be the zero vector, in which case D = Δ_A \\ {0}.
    """
    if A.m != B.m:
        raise DimensionMismatchError(f"dimension mismatch: {A.m} vs {B.m}")
    if A.is_zero():
        raise ConstructionError("A must be a nonzero vector")
    if not B.is_subset_of(A) or A == B:
        raise ConstructionError(
            f"supp(B)={list(B.support())} is not strictly contained in supp(A)={list(A.support())}"
        )
    return complex_difference_set(
        face_complex(A),
        face_complex(B),
        Provenance.DIFFERENCE,
        label=f"difference |A|={A.weight()} |B|={B.weight()}",
        budget=budget,
    )


def union_set(A: BitVector, B: BitVector, budget: Budget = None) -> DefiningSet:
    """D = (Δ_A ∪ Δ_B) \\ {0} for disjoint A, B with 0 < |B| < |A|."""
    if A.m != B.m:
        raise DimensionMismatchError(f"dimension mismatch: {A.m} vs {B.m}")
    if A.bits & B.bits:
        raise ConstructionError("A and B must have disjoint supports")
    if not 0 < B.weight() < A.weight():
        raise ConstructionError(
            f"need 0 < |B| < |A|, got |A|={A.weight()} |B|={B.weight()}"
        )
    return complex_difference_set(
        from_maximal(A.m, [A, B]),
        SimplicialComplex.point(A.m),
        Provenance.UNION,
        label=f"union |A|={A.weight()} |B|={B.weight()}",
        budget=budget,
    )


def partition_blocks(m: int) -> Tuple[BitVector, ...]:
    """Consecutive pairs {2i-1, 2i} covering [m]."""
    return tuple(BitVector.from_support([2 * i + 1, 2 * i + 2], m) for i in range(m // 2))


def partition_set(m: int, budget: Budget = None) -> DefiningSet:
    """D = (Δ_{A_1} ∪ ... ∪ Δ_{A_k}) \\ {0} for the pair partition of [m]; |D| = 3m/2."""
    if m < 2 or m % 2:
        raise ConstructionError(f"partition construction needs an even m >= 2, got {m}")
    return complex_difference_set(
        SimplicialComplex(m, partition_blocks(m)),
        SimplicialComplex.point(m),
        Provenance.PARTITION,
        label=f"partition m={m}",
        budget=budget,
    )


def weight_shell_set(m: int, t: int, budget: Budget = None) -> DefiningSet:
    """D_t, all vectors of weight t, written as Δ_{D_t} \\ Δ_{D_{t-1}}."""
    if not 1 <= t <= m - 1:
        raise ConstructionError(f"need 1 <= t <= m-1, got t={t} m={m}")
    return complex_difference_set(
        weight_layer_complex(m, t),
        weight_layer_complex(m, t - 1),
        Provenance.DIFFERENCE,
        label=f"shell m={m} t={t}",
        budget=budget,
    )


def weight_ball_set(m: int, t: int, budget: Budget = None) -> DefiningSet:
    """D_{<=t}, all vectors of weight 1..t, written as Δ_{D_t} \\ {0}."""
    if not 1 <= t <= m - 1:
        raise ConstructionError(f"need 1 <= t <= m-1, got t={t} m={m}")
    return complex_difference_set(
        weight_layer_complex(m, t),
        SimplicialComplex.point(m),
        Provenance.DIFFERENCE,
        label=f"ball m={m} t={t}",
        budget=budget,
    )
