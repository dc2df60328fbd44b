"""Gaussian elimination over GF(2): rank, nullspace, Gram products."""

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from .bitarray import BitArray
from .matrix import Gf2Matrix


@dataclass(frozen=True)
class RowReduction:
    """Reduced row echelon form of a matrix together with its pivot columns."""

    matrix: Gf2Matrix
    pivots: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)


def row_reduce(M: Gf2Matrix) -> RowReduction:
    """
    Reduce M to reduced row echelon form.

    Pivots are taken left to right; for each pivot column the first row at or
    below the current position holding a one is swapped up. The input is not
    modified.

    Args:
        M: Matrix to reduce

    Returns:
        RowReduction with the RREF matrix and its pivot columns
    """
    A = M.data.copy()
    rows, cols = A.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        candidates = np.flatnonzero(A[r:, c])
        if candidates.size == 0:
            continue
        p = r + int(candidates[0])
        if p != r:
            A[[r, p]] = A[[p, r]]
        ones = np.flatnonzero(A[:, c])
        ones = ones[ones != r]
        if ones.size:
            A[ones] ^= A[r]
        pivots.append(c)
        r += 1
    return RowReduction(matrix=Gf2Matrix(A), pivots=tuple(pivots))


def rank(M: Gf2Matrix) -> int:
    return row_reduce(M).rank


def matmul_transpose(M: Gf2Matrix) -> Gf2Matrix:
    """Gram matrix M M^T; entry (i, j) is the parity of the overlap of rows i, j."""
    data = M.data.astype(np.int64)
    return Gf2Matrix((data @ data.T) & 1)


def nullspace_basis(M: Gf2Matrix) -> List[BitArray]:
    """
    Basis of {x : M x = 0}, one vector per free column of the RREF.

    The basis vector for free column f has a one at f and, at every pivot
    column p, the RREF entry in p's row and column f.
    """
    reduction = row_reduce(M)
    cols = M.cols
    pivots = list(reduction.pivots)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    if not free:
        return []
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    basis[np.arange(len(free)), free] = 1
    if pivots:
        rref = reduction.matrix.data
        basis[:, pivots] = rref[: len(pivots)][:, free].T
    return [BitArray(row) for row in basis]


def independent_rows(M: Gf2Matrix) -> List[int]:
    """
    Indices of the earliest maximal linearly independent subset of rows.

    Zero rows are never selected, so for a construction matrix G this yields
    the generator G' with zero (and redundant) rows deleted.
    """
    return list(row_reduce(M.transpose()).pivots)


def row_space_contains(M: Gf2Matrix, x: BitArray) -> bool:
    """True iff x is a GF(2) combination of the rows of M."""
    base = rank(M)
    return rank(M.vstack(Gf2Matrix.from_rows([x], M.cols))) == base
