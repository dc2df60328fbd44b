"""Bit-vector and dense GF(2) matrix arithmetic."""

from .bitarray import BitArray
from .bitvector import BitVector
from .elimination import (
    RowReduction,
    independent_rows,
    matmul_transpose,
    nullspace_basis,
    rank,
    row_reduce,
    row_space_contains,
)
from .enumeration import span_weight_profile
from .matrix import Gf2Matrix


def weight(v) -> int:
    """Hamming weight of a BitVector or BitArray."""
    return v.weight()


def dot(u, v) -> int:
    """Euclidean inner product over GF(2); raises on dimension mismatch."""
    return u.dot(v)


__all__ = [
    "BitArray",
    "BitVector",
    "Gf2Matrix",
    "RowReduction",
    "dot",
    "independent_rows",
    "matmul_transpose",
    "nullspace_basis",
    "rank",
    "row_reduce",
    "row_space_contains",
    "span_weight_profile",
    "weight",
]
