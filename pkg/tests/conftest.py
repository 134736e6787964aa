import pytest

from batchkit import GF2, LinearBatchCode, MatrixFq

# 4x9 two-layer subcube generator; certified [9, 4, 4]_2 batch code.
EXAMPLE2_ROWS = [
    [1, 0, 1, 0, 0, 0, 1, 0, 1],
    [0, 1, 1, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 1, 0, 1, 1, 0, 1],
    [0, 0, 0, 0, 1, 1, 0, 1, 1],
]

# Generator of a classical [4, 3, 2]_2 ECC that is NOT a batch code for m=2.
EXAMPLE3_ROWS = [
    [1, 1, 1, 1],
    [0, 1, 0, 1],
    [0, 0, 1, 1],
]

SUBCUBE_ROWS = [
    [1, 0, 1],
    [0, 1, 1],
]


@pytest.fixture
def example2_matrix():
    return MatrixFq(GF2, EXAMPLE2_ROWS)


@pytest.fixture
def example2_code(example2_matrix):
    return LinearBatchCode.with_unit_buckets(example2_matrix)


@pytest.fixture
def example3_matrix():
    return MatrixFq(GF2, EXAMPLE3_ROWS)


@pytest.fixture
def example3_code(example3_matrix):
    return LinearBatchCode.with_unit_buckets(example3_matrix)


@pytest.fixture
def subcube_322_code():
    return LinearBatchCode.with_unit_buckets(MatrixFq(GF2, SUBCUBE_ROWS))
