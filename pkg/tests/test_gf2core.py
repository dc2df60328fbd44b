"""Tests for bit vectors, GF(2) matrices and elimination."""

import numpy as np
import pytest

from errors import DimensionMismatchError
from gf2core import (
    BitArray,
    BitVector,
    Gf2Matrix,
    dot,
    independent_rows,
    matmul_transpose,
    nullspace_basis,
    rank,
    row_reduce,
    row_space_contains,
    span_weight_profile,
    weight,
)


def vec(text):
    return BitVector.from_string(text)


@pytest.mark.parametrize(
    "v, expected",
    [(vec("000"), 0), (vec("110"), 2), (BitVector.ones(5), 5)],
)
def test_weight(v, expected):
    assert weight(v) == expected


@pytest.mark.parametrize(
    "u, v, expected",
    [
        (vec("110"), vec("011"), 1),
        (vec("110"), vec("000"), 0),
        (vec("101"), vec("101"), 0),
    ],
)
def test_dot(u, v, expected):
    assert dot(u, v) == expected


def test_dot_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        dot(vec("11"), vec("110"))


def test_support_round_trip():
    for bits in range(16):
        v = BitVector(bits, 4)
        assert BitVector.from_support(v.support(), 4) == v


def test_coordinate_one_is_leftmost():
    v = vec("100")
    assert v.bits == 1
    assert v.support() == (1,)
    assert v.to_string() == "100"


def test_bitvector_rejects_overflow_and_bad_strings():
    with pytest.raises(DimensionMismatchError):
        BitVector(8, 3)
    with pytest.raises(ValueError):
        BitVector.from_string("102")
    with pytest.raises(DimensionMismatchError):
        BitVector.from_support([4], 3)


def test_bitvector_set_operations():
    a, b = vec("1100"), vec("0110")
    assert (a & b) == vec("0100")
    assert (a | b) == vec("1110")
    assert (a ^ b) == vec("1010")
    assert vec("0100").is_subset_of(a)
    assert not b.is_subset_of(a)


def test_bitarray_interface():
    x = BitArray.from_string("0110")
    y = BitArray.from_support([2, 4], 4)
    assert x.weight() == 2
    assert x.support() == (2, 3)
    assert x.dot(y) == 1
    assert y.to_string() == "0101"
    assert BitArray.zeros(3) == BitArray([0, 0, 0])
    with pytest.raises(DimensionMismatchError):
        x.dot(BitArray.zeros(3))


def test_from_columns_puts_coordinate_i_in_row_i():
    M = Gf2Matrix.from_columns([vec("100"), vec("110")], 3)
    assert M.data.tolist() == [[1, 1], [0, 1], [0, 0]]
    assert M.column_masks().tolist() == [1, 3]


def test_matrix_is_read_only():
    M = Gf2Matrix.identity(2)
    with pytest.raises(ValueError):
        M.data[0, 0] = 0


def test_rank_examples():
    assert rank(Gf2Matrix.identity(3)) == 3
    assert rank(Gf2Matrix.zeros(3, 4)) == 0
    simplex = Gf2Matrix.from_columns([BitVector(b, 3) for b in range(1, 8)], 3)
    assert rank(simplex) == 3
    assert rank(matmul_transpose(simplex)) == 0


def test_matmul_transpose_examples():
    assert matmul_transpose(Gf2Matrix.identity(3)) == Gf2Matrix.identity(3)
    assert matmul_transpose(Gf2Matrix([[1, 1, 1, 1]])) == Gf2Matrix.zeros(1, 1)


def test_partition_gram_is_block_exchange():
    columns = [BitVector(b, 4) for b in (1, 2, 3, 4, 8, 12)]
    G = Gf2Matrix.from_columns(columns, 4)
    gram = matmul_transpose(G)
    assert gram.data.tolist() == [
        [0, 1, 0, 0],
        [1, 0, 0, 0],
        [0, 0, 0, 1],
        [0, 0, 1, 0],
    ]
    assert rank(gram) == 4


def test_row_reduce_pivots_left_to_right():
    M = Gf2Matrix([[0, 1, 1], [1, 1, 0], [1, 0, 1]])
    reduction = row_reduce(M)
    assert reduction.pivots == (0, 1)
    assert reduction.matrix.data.tolist() == [[1, 0, 1], [0, 1, 1], [0, 0, 0]]
    # input untouched
    assert M.data.tolist() == [[0, 1, 1], [1, 1, 0], [1, 0, 1]]


def test_nullspace_examples():
    assert nullspace_basis(Gf2Matrix.identity(3)) == []
    assert nullspace_basis(Gf2Matrix([[1, 1]])) == [BitArray([1, 1])]
    simplex = Gf2Matrix.from_columns([BitVector(b, 3) for b in range(1, 8)], 3)
    assert len(nullspace_basis(simplex)) == 4


def test_independent_rows_skips_zero_and_repeated_rows():
    M = Gf2Matrix([[1, 1, 0], [0, 0, 0], [1, 1, 0], [0, 1, 1]])
    assert independent_rows(M) == [0, 3]


def test_row_space_contains():
    M = Gf2Matrix([[1, 1, 0], [0, 1, 1]])
    assert row_space_contains(M, BitArray([1, 0, 1]))
    assert not row_space_contains(M, BitArray([1, 0, 0]))


@pytest.mark.parametrize("seed", range(8))
def test_random_matrix_invariants(seed):
    rng = np.random.default_rng(seed)
    rows, cols = rng.integers(1, 9, size=2)
    M = Gf2Matrix(rng.integers(0, 2, size=(rows, cols)))

    r = rank(M)
    assert r == rank(M.transpose())
    assert r <= min(rows, cols)

    basis = nullspace_basis(M)
    assert len(basis) + r == cols
    for x in basis:
        assert M.apply(x).weight() == 0

    assert matmul_transpose(M).is_symmetric()


def test_span_weight_profile_is_worker_independent():
    columns = np.arange(1, 8, dtype=np.uint64)
    serial = span_weight_profile(columns, 3, workers=1)
    parallel = span_weight_profile(columns, 3, workers=4, chunk_cells=8)
    assert serial.tolist() == [1, 0, 0, 0, 7, 0, 0, 0]
    assert parallel.tolist() == serial.tolist()
