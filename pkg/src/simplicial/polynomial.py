"""Integer multilinear polynomials in x_1, ..., x_m."""

from dataclasses import dataclass
from typing import Dict, Iterable, Sequence, Tuple

from errors import DimensionMismatchError
from gf2core import BitVector


@dataclass(frozen=True)
class MultilinearPoly:
    """
    Polynomial whose monomials are indexed by subsets of [m].

    ``terms`` holds (support bitmask, coefficient) pairs sorted by mask, with bit
    i-1 standing for x_i. Coefficients are nonzero; absent masks have
    coefficient 0.
    """

    m: int
    terms: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_terms(cls, m: int, terms: Iterable[Tuple[int, int]]) -> "MultilinearPoly":
        """Accumulate (mask, coefficient) pairs, dropping zero coefficients."""
        acc: Dict[int, int] = {}
        for mask, coeff in terms:
            if mask >> m:
                raise DimensionMismatchError(f"monomial {mask:#x} outside {m} variables")
            acc[mask] = acc.get(mask, 0) + coeff
        return cls(m, tuple((k, v) for k, v in sorted(acc.items()) if v))

    def coefficient(self, monomial: BitVector) -> int:
        if monomial.m != self.m:
            raise DimensionMismatchError(f"dimension mismatch: {monomial.m} vs {self.m}")
        return dict(self.terms).get(monomial.bits, 0)

    def monomials(self) -> Tuple[BitVector, ...]:
        return tuple(BitVector(mask, self.m) for mask, _ in self.terms)

    def evaluate(self, values: Sequence[int]) -> int:
        """Evaluate at an integer point (x_1, ..., x_m)."""
        if len(values) != self.m:
            raise DimensionMismatchError(f"expected {self.m} values, got {len(values)}")
        total = 0
        for mask, coeff in self.terms:
            term = coeff
            for i in range(self.m):
                if (mask >> i) & 1:
                    term *= values[i]
            total += term
        return total

    def evaluate_pm1(self, u: BitVector) -> int:
        """Evaluate at x_i = (-1)^{u_i}."""
        return sum(
            -coeff if (mask & u.bits).bit_count() & 1 else coeff
            for mask, coeff in self.terms
        )

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        ordered = sorted(self.terms, key=lambda kv: (kv[0].bit_count(), _lex(kv[0])))
        parts = []
        for mask, coeff in ordered:
            names = "*".join(f"x{i + 1}" for i in range(self.m) if (mask >> i) & 1)
            if not names:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = names
            else:
                body = f"{abs(coeff)}*{names}"
            sign = "-" if coeff < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _lex(mask: int) -> Tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if (mask >> i) & 1)
