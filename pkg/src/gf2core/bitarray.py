"""Arbitrary-length bit arrays for codewords and dual basis vectors."""

from typing import Iterable, Sequence, Tuple

import numpy as np

from errors import DimensionMismatchError


class BitArray:
    """Immutable numpy-backed vector of F_2^n with the BitVector interface."""

    __slots__ = ("_bits",)

    def __init__(self, bits: Iterable[int]):
        arr = np.array(bits, dtype=np.uint8).reshape(-1) & 1
        arr.flags.writeable = False
        self._bits = arr

    @classmethod
    def zeros(cls, length: int) -> "BitArray":
        return cls(np.zeros(length, dtype=np.uint8))

    @classmethod
    def from_support(cls, support: Iterable[int], length: int) -> "BitArray":
        arr = np.zeros(length, dtype=np.uint8)
        for i in support:
            if not 1 <= i <= length:
                raise DimensionMismatchError(f"coordinate {i} outside [1, {length}]")
            arr[i - 1] = 1
        return cls(arr)

    @classmethod
    def from_string(cls, text: str) -> "BitArray":
        if set(text) - {"0", "1"}:
            raise ValueError(f"not a 0/1 string: {text!r}")
        return cls([1 if ch == "1" else 0 for ch in text])

    @property
    def bits(self) -> np.ndarray:
        return self._bits

    def __len__(self) -> int:
        return int(self._bits.size)

    def weight(self) -> int:
        return int(np.count_nonzero(self._bits))

    def dot(self, other: "BitArray") -> int:
        if len(self) != len(other):
            raise DimensionMismatchError(
                f"length mismatch: {len(self)} vs {len(other)}"
            )
        return int(np.count_nonzero(self._bits & other.bits) & 1)

    def support(self) -> Tuple[int, ...]:
        return tuple(int(i) + 1 for i in np.flatnonzero(self._bits))

    def to_string(self) -> str:
        return "".join("1" if b else "0" for b in self._bits)

    def tolist(self) -> Sequence[int]:
        return [int(b) for b in self._bits]

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitArray):
            return NotImplemented
        return len(self) == len(other) and bool(np.array_equal(self._bits, other.bits))

    def __hash__(self) -> int:
        return hash(self._bits.tobytes())

    def __repr__(self) -> str:
        return f"BitArray('{self.to_string()}')"
