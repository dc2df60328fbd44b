"""Dense GF(2) matrices."""

from typing import Iterable, List, Sequence, Union

import numpy as np

import config
from errors import DimensionMismatchError
from .bitarray import BitArray
from .bitvector import BitVector


RowLike = Union[Sequence[int], np.ndarray, BitArray]


class Gf2Matrix:
    """
    Immutable row-major matrix over GF(2).

    Entries are stored as a read-only ``uint8`` array of zeros and ones, so
    row operations are vectorized XORs.
    """

    __slots__ = ("_data",)

    def __init__(self, data: Union[np.ndarray, Sequence[Sequence[int]]], cols: int = None):
        arr = np.array(data, dtype=np.uint8)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, cols or 0)
        if arr.ndim != 2:
            raise DimensionMismatchError(f"expected a 2-D array, got shape {arr.shape}")
        if cols is not None and arr.shape[1] != cols:
            raise DimensionMismatchError(
                f"rows have width {arr.shape[1]}, expected {cols}"
            )
        arr &= 1
        arr.flags.writeable = False
        self._data = arr

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Gf2Matrix":
        return cls(np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def identity(cls, size: int) -> "Gf2Matrix":
        return cls(np.eye(size, dtype=np.uint8))

    @classmethod
    def from_rows(cls, rows: Iterable[RowLike], cols: int) -> "Gf2Matrix":
        """Stack rows (sequences, arrays or BitArrays) of a common width."""
        stacked: List[np.ndarray] = []
        for row in rows:
            arr = row.bits if isinstance(row, BitArray) else np.asarray(row, dtype=np.uint8)
            if arr.shape != (cols,):
                raise DimensionMismatchError(
                    f"row of length {arr.size} does not fit {cols} columns"
                )
            stacked.append(arr)
        if not stacked:
            return cls.zeros(0, cols)
        return cls(np.vstack(stacked))

    @classmethod
    def from_columns(cls, columns: Sequence[BitVector], m: int) -> "Gf2Matrix":
        """
        Build the m x n matrix whose j-th column is ``columns[j]``.

        Row i-1 holds coordinate i of every column, matching G = [g_1^T ... g_n^T].
        """
        masks = np.array([v.bits for v in columns], dtype=np.uint64)
        for v in columns:
            if v.m != m:
                raise DimensionMismatchError(f"column of dimension {v.m}, expected {m}")
        shifts = np.arange(m, dtype=np.uint64)
        data = ((masks[None, :] >> shifts[:, None]) & np.uint64(1)).astype(np.uint8)
        return cls(data.reshape(m, len(columns)))

    @property
    def rows(self) -> int:
        return int(self._data.shape[0])

    @property
    def cols(self) -> int:
        return int(self._data.shape[1])

    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def shape(self):
        return self._data.shape

    def row(self, i: int) -> BitArray:
        return BitArray(self._data[i])

    def row_list(self) -> List[BitArray]:
        return [BitArray(r) for r in self._data]

    def select_rows(self, indices: Sequence[int]) -> "Gf2Matrix":
        return Gf2Matrix(self._data[list(indices)].reshape(len(indices), self.cols))

    def transpose(self) -> "Gf2Matrix":
        return Gf2Matrix(self._data.T.copy())

    def vstack(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if other.cols != self.cols:
            raise DimensionMismatchError(f"cannot stack {self.shape} on {other.shape}")
        return Gf2Matrix(np.vstack([self._data, other.data]))

    def is_zero(self) -> bool:
        return not self._data.any()

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and bool(np.array_equal(self._data, self._data.T))

    def multiply(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        product = self._data.astype(np.int64) @ other.data.astype(np.int64)
        return Gf2Matrix(product & 1)

    def apply(self, x: BitArray) -> BitArray:
        """Return M x for a column vector x."""
        if len(x) != self.cols:
            raise DimensionMismatchError(f"vector of length {len(x)} for {self.shape}")
        return BitArray((self._data.astype(np.int64) @ x.bits.astype(np.int64)) & 1)

    def column_masks(self) -> np.ndarray:
        """
        Pack every column into an integer, bit i-1 holding row i.

        Returns:
            ``uint64`` array of length ``cols``; requires ``rows <= 64``
        """
        if self.rows > config.MAX_DIMENSION:
            raise DimensionMismatchError(
                f"{self.rows} rows do not fit a {config.MAX_DIMENSION}-bit column mask"
            )
        weights = np.uint64(1) << np.arange(self.rows, dtype=np.uint64)
        masks = np.zeros(self.cols, dtype=np.uint64)
        for i in range(self.rows):
            masks |= self._data[i].astype(np.uint64) * weights[i]
        return masks

    def __eq__(self, other) -> bool:
        if not isinstance(other, Gf2Matrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._data, other.data))

    def __hash__(self) -> int:
        return hash((self.shape, self._data.tobytes()))

    def __repr__(self) -> str:
        body = "; ".join("".join(str(b) for b in r) for r in self._data)
        return f"Gf2Matrix({self.rows}x{self.cols}: {body})"
