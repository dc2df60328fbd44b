"""Simplicial complexes of F_2^m stored by their maximal elements."""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Tuple

import config
from errors import BudgetExceededError, DimensionMismatchError
from gf2core import BitVector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimplicialComplex:
    """
    Downward-closed subset of F_2^m given by its antichain of maximal elements.

    An empty ``maximal`` tuple is the empty complex; ``(0,)`` is the complex {0}.
    """

    m: int
    maximal: Tuple[BitVector, ...]

    @classmethod
    def empty(cls, m: int) -> "SimplicialComplex":
        return cls(m, ())

    @classmethod
    def point(cls, m: int) -> "SimplicialComplex":
        """The complex {0}."""
        return cls(m, (BitVector.zero(m),))

    def contains(self, v: BitVector) -> bool:
        if v.m != self.m:
            raise DimensionMismatchError(f"dimension mismatch: {v.m} vs {self.m}")
        return any(v.bits & ~face.bits == 0 for face in self.maximal)

    def __contains__(self, v: BitVector) -> bool:
        return self.contains(v)

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        """True iff every member of self is a member of other."""
        if other.m != self.m:
            raise DimensionMismatchError(f"dimension mismatch: {other.m} vs {self.m}")
        return all(other.contains(face) for face in self.maximal)

    def union(self, other: "SimplicialComplex") -> "SimplicialComplex":
        if other.m != self.m:
            raise DimensionMismatchError(f"dimension mismatch: {other.m} vs {self.m}")
        return from_maximal(self.m, list(self.maximal) + list(other.maximal))

    def is_antichain(self) -> bool:
        return all(
            not (a.bits & ~b.bits == 0 or b.bits & ~a.bits == 0)
            for a, b in combinations(self.maximal, 2)
        )

    def enumeration_cost(self) -> int:
        """Upper bound on the member count: sum of 2^|F| over maximal F."""
        return sum(1 << face.weight() for face in self.maximal)

    def enumerate_members(self, cap: int = None) -> List[BitVector]:
        """
        All members, sorted by integer value, without duplicates.

        Args:
            cap: Limit on the summed face sizes (defaults to config.MEMBER_CAP)

        Returns:
            Sorted list of member vectors
        """
        cap = cap or config.MEMBER_CAP
        cost = self.enumeration_cost()
        if cost > cap:
            raise BudgetExceededError(
                f"enumerating {cost} face members exceeds the cap of {cap}"
            )
        logger.debug(f"Enumerating up to {cost} members of a complex in F_2^{self.m}")
        members = set()
        for face in self.maximal:
            members.update(_submasks(face.bits))
        return [BitVector(bits, self.m) for bits in sorted(members)]

    def size(self) -> int:
        """|Δ| by inclusion-exclusion over the maximal elements."""
        return sum(
            coeff << mask.bit_count()
            for mask, coeff in inclusion_exclusion_terms(self).items()
        )

    def __len__(self) -> int:
        return self.size()


def from_maximal(m: int, gens: Iterable[BitVector]) -> SimplicialComplex:
    """
    Complex generated by ``gens``: duplicates and dominated generators dropped.

    Args:
        m: Ambient dimension
        gens: Generating vectors, all of dimension m

    Returns:
        SimplicialComplex whose ``maximal`` is an antichain sorted by value
    """
    unique = set()
    for g in gens:
        if g.m != m:
            raise DimensionMismatchError(f"generator of dimension {g.m}, expected {m}")
        unique.add(g.bits)
    # heavier faces first so a dominated face is seen after its dominator
    ordered = sorted(unique, key=lambda b: (-b.bit_count(), b))
    kept: List[int] = []
    for bits in ordered:
        if not any(bits & ~other == 0 for other in kept):
            kept.append(bits)
    maximal = tuple(BitVector(bits, m) for bits in sorted(kept))
    return SimplicialComplex(m, maximal)


def face_complex(face: BitVector) -> SimplicialComplex:
    """Δ_F, the complex generated by a single vector."""
    return SimplicialComplex(face.m, (face,))


def weight_layer_complex(m: int, t: int) -> SimplicialComplex:
    """Δ_{D_t}: generated by every vector of weight t (0 <= t <= m)."""
    if not 0 <= t <= m:
        raise DimensionMismatchError(f"weight {t} outside [0, {m}]")
    gens = [BitVector.from_support([i + 1 for i in idx], m) for idx in combinations(range(m), t)]
    return SimplicialComplex(m, tuple(sorted(gens)))


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def inclusion_exclusion_terms(delta: SimplicialComplex) -> Dict[int, int]:
    """
    Collapse sum over nonempty S of (-1)^{|S|+1} prod_{i in ∩S} (1 + x_i).

    Terms with the same intersection ∩S are merged, so the result maps an
    intersection mask to its net signed coefficient (zeros dropped).

    Raises:
        BudgetExceededError: more than config.MAX_MAXIMAL_ELEMENTS maximal elements
    """
    if len(delta.maximal) > config.MAX_MAXIMAL_ELEMENTS:
        raise BudgetExceededError(
            f"{len(delta.maximal)} maximal elements exceed the inclusion-exclusion "
            f"limit of {config.MAX_MAXIMAL_ELEMENTS}"
        )
    terms: Dict[int, int] = {}
    for face in delta.maximal:
        extended: Dict[int, int] = dict(terms)
        # every earlier subset S gains the new face: sign flips, ∩ shrinks
        for mask, coeff in terms.items():
            key = mask & face.bits
            extended[key] = extended.get(key, 0) - coeff
        extended[face.bits] = extended.get(face.bits, 0) + 1
        terms = {k: v for k, v in extended.items() if v}
    return terms
