"""Elements of F_2^m stored as machine-word bitmasks.

Coordinate i (1-based) of a vector lives in bit position i-1, so a vector and
its support (a subset of {1, ..., m}) are the same object seen two ways.
"""

from dataclasses import dataclass
from typing import Iterable, Tuple

import config
from errors import DimensionMismatchError


@dataclass(frozen=True, order=True)
class BitVector:
    """A vector of F_2^m, 1 <= m <= 64."""

    bits: int
    m: int

    def __post_init__(self):
        if not 1 <= self.m <= config.MAX_DIMENSION:
            raise DimensionMismatchError(
                f"dimension must be in [1, {config.MAX_DIMENSION}], got {self.m}"
            )
        if self.bits < 0 or self.bits >> self.m:
            raise DimensionMismatchError(
                f"bitmask {self.bits:#x} does not fit dimension {self.m}"
            )

    @classmethod
    def zero(cls, m: int) -> "BitVector":
        return cls(0, m)

    @classmethod
    def ones(cls, m: int) -> "BitVector":
        return cls((1 << m) - 1, m)

    @classmethod
    def unit(cls, i: int, m: int) -> "BitVector":
        """The vector e_i (1-based coordinate)."""
        return cls.from_support([i], m)

    @classmethod
    def from_support(cls, support: Iterable[int], m: int) -> "BitVector":
        """
        Build a vector from a set of 1-based coordinates.

        Args:
            support: Coordinates in [1, m]
            m: Ambient dimension

        Returns:
            The vector whose support is exactly ``support``
        """
        bits = 0
        for i in support:
            if not 1 <= i <= m:
                raise DimensionMismatchError(f"coordinate {i} outside [1, {m}]")
            bits |= 1 << (i - 1)
        return cls(bits, m)

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        """Parse a 0/1 string; the leftmost character is coordinate 1."""
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a 0/1 string: {text!r}")
        return cls.from_support(
            (i + 1 for i, ch in enumerate(text) if ch == "1"), len(text)
        )

    def to_string(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.m))

    def support(self) -> Tuple[int, ...]:
        """Sorted 1-based coordinates of the nonzero entries."""
        return tuple(i + 1 for i in range(self.m) if (self.bits >> i) & 1)

    def weight(self) -> int:
        return self.bits.bit_count()

    def dot(self, other: "BitVector") -> int:
        _check_same_dimension(self, other)
        return (self.bits & other.bits).bit_count() & 1

    def is_zero(self) -> bool:
        return self.bits == 0

    def is_subset_of(self, other: "BitVector") -> bool:
        """True iff supp(self) is contained in supp(other)."""
        _check_same_dimension(self, other)
        return self.bits & ~other.bits == 0

    def __and__(self, other: "BitVector") -> "BitVector":
        _check_same_dimension(self, other)
        return BitVector(self.bits & other.bits, self.m)

    def __or__(self, other: "BitVector") -> "BitVector":
        _check_same_dimension(self, other)
        return BitVector(self.bits | other.bits, self.m)

    def __xor__(self, other: "BitVector") -> "BitVector":
        _check_same_dimension(self, other)
        return BitVector(self.bits ^ other.bits, self.m)

    def __int__(self) -> int:
        return self.bits

    def __str__(self) -> str:
        return self.to_string()


def _check_same_dimension(u: BitVector, v: BitVector):
    if u.m != v.m:
        raise DimensionMismatchError(f"dimension mismatch: {u.m} vs {v.m}")
