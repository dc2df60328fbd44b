"""Shared fixtures."""

import pytest

import config
from codes import difference_set
from config import Budget
from gf2core import BitVector
from simplicial import from_maximal


@pytest.fixture
def two_face_complex():
    """<(1,1,0), (0,1,1)>."""
    return from_maximal(3, [BitVector.from_string("110"), BitVector.from_string("011")])


@pytest.fixture
def simplex_set():
    """All 7 nonzero vectors of F_2^3."""
    return difference_set(BitVector.ones(3), BitVector.zero(3))


@pytest.fixture
def small_budget():
    return Budget(
        max_message_bits=6,
        max_codeword_bits=6,
        max_length=64,
        member_cap=128,
        workers=1,
    )


@pytest.fixture
def table_path():
    return config.OPTIMALITY_TABLE_FILE
