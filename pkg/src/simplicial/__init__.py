"""Simplicial complexes of F_2^m and their generating functions."""

from .complex import (
    SimplicialComplex,
    face_complex,
    from_maximal,
    inclusion_exclusion_terms,
    weight_layer_complex,
)
from .genfunc import character_sum, chi, genfunc_eval_pm1, genfunc_poly
from .polynomial import MultilinearPoly


def contains(delta: SimplicialComplex, v) -> bool:
    return delta.contains(v)


def enumerate_members(delta: SimplicialComplex, cap: int = None):
    return delta.enumerate_members(cap)


def size(delta: SimplicialComplex) -> int:
    return delta.size()


__all__ = [
    "MultilinearPoly",
    "SimplicialComplex",
    "character_sum",
    "chi",
    "contains",
    "enumerate_members",
    "face_complex",
    "from_maximal",
    "genfunc_eval_pm1",
    "genfunc_poly",
    "inclusion_exclusion_terms",
    "size",
    "weight_layer_complex",
]
