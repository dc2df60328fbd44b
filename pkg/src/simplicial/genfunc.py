"""Generating functions of simplicial complexes and the disjointness indicator."""

import config
from errors import BudgetExceededError, DimensionMismatchError
from gf2core import BitVector
from .complex import SimplicialComplex, inclusion_exclusion_terms
from .polynomial import MultilinearPoly


def chi(u: BitVector, X: BitVector) -> int:
    """1 iff supp(u) and X are disjoint."""
    if u.m != X.m:
        raise DimensionMismatchError(f"dimension mismatch: {u.m} vs {X.m}")
    return 0 if u.bits & X.bits else 1


def genfunc_poly(delta: SimplicialComplex, cap: int = None) -> MultilinearPoly:
    """
    Expand the generating function of Δ from its maximal elements.

    Each inclusion-exclusion term c * prod_{i in I}(1 + x_i) contributes c to
    every monomial indexed by a subset of I. The result has coefficient 1 on
    exactly the member supports.

    Args:
        delta: The complex
        cap: Limit on the number of expanded monomials (defaults to config.MEMBER_CAP)

    Returns:
        MultilinearPoly in delta.m variables
    """
    cap = cap or config.MEMBER_CAP
    terms = inclusion_exclusion_terms(delta)
    cost = sum(1 << mask.bit_count() for mask in terms)
    if cost > cap:
        raise BudgetExceededError(f"expanding {cost} monomials exceeds the cap of {cap}")

    expanded = []
    for mask, coeff in terms.items():
        sub = mask
        while True:
            expanded.append((sub, coeff))
            if sub == 0:
                break
            sub = (sub - 1) & mask
    return MultilinearPoly.from_terms(delta.m, expanded)


def genfunc_eval_pm1(delta: SimplicialComplex, u: BitVector) -> int:
    """
    Value of the generating function at x_i = (-1)^{u_i}.

    Equal to the character sum over members d of (-1)^{u.d}: a single face I
    evaluates to 2^{|I|} when u misses I and to 0 otherwise.
    """
    if u.m != delta.m:
        raise DimensionMismatchError(f"dimension mismatch: {u.m} vs {delta.m}")
    return sum(
        coeff << mask.bit_count()
        for mask, coeff in inclusion_exclusion_terms(delta).items()
        if not mask & u.bits
    )


def character_sum(delta: SimplicialComplex, u: BitVector, cap: int = None) -> int:
    """Direct sum of (-1)^{u.d} over the enumerated members of Δ."""
    members = delta.enumerate_members(cap)
    return sum(-1 if u.dot(d) else 1 for d in members)


__all__ = ["character_sum", "chi", "genfunc_eval_pm1", "genfunc_poly"]
