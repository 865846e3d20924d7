import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gausscircuits import _gf2py
from gausscircuits.errors import (
    FormatError,
    IndexOutOfRangeError,
    NonSquareError,
    SingularError,
)
from gausscircuits.gf2 import BitMatrix, from_text, to_text

from conftest import brute_rank, random_bitmatrix_rows

try:
    from gausscircuits import _gf2fast

    KERNELS = [_gf2py, _gf2fast]
except ImportError:
    KERNELS = [_gf2py]


def test_rank_equal_rows():
    assert BitMatrix.from_rows([[1, 1], [1, 1]]).rank() == 1


def test_rank_identity():
    assert BitMatrix.identity(4).rank() == 4


def test_rank_golden_four():
    m = BitMatrix.from_rows([[0, 1, 0, 1], [1, 1, 0, 0], [0, 0, 1, 1], [1, 0, 1, 1]])
    assert m.rank() == 4


def test_det_examples():
    assert BitMatrix.from_rows([[1, 1], [1, 1]]).det() == 0
    assert BitMatrix.zeros(0, 0).det() == 1
    m = BitMatrix.from_rows([[0, 1, 0, 1], [1, 1, 0, 0], [0, 0, 1, 1], [1, 0, 1, 1]])
    assert m.det() == 1


def test_det_non_square():
    with pytest.raises(NonSquareError):
        BitMatrix.zeros(2, 3).det()


def test_inverse_identity():
    assert BitMatrix.identity(3).inverse() == BitMatrix.identity(3)


def test_inverse_golden():
    m = BitMatrix.from_rows([[0, 1, 0, 1], [1, 1, 0, 0], [0, 0, 1, 1], [1, 0, 1, 1]])
    inv = m.inverse()
    assert inv.to_lists() == [[0, 0, 1, 1], [0, 1, 1, 1], [1, 1, 0, 1], [1, 1, 1, 1]]
    assert m @ inv == BitMatrix.identity(4)


def test_inverse_singular():
    with pytest.raises(SingularError):
        BitMatrix.from_rows([[1, 1], [1, 1]]).inverse()


def test_zero_by_zero_is_first_class():
    m = BitMatrix.zeros(0, 0)
    assert m.rank() == 0
    assert m.det() == 1
    assert m.inverse() == m


def test_delete_rows_cols():
    m = BitMatrix.from_rows(
        [
            [0, 1, 0, 0, 0],
            [1, 0, 1, 0, 1],
            [0, 1, 1, 0, 1],
            [0, 0, 0, 1, 1],
            [0, 1, 1, 1, 1],
        ]
    )
    # dropping the fourth letter leaves the matrix over the other four
    got = m.delete_rows_cols({3})
    assert got.to_lists() == [
        [0, 1, 0, 0],
        [1, 0, 1, 1],
        [0, 1, 1, 1],
        [0, 1, 1, 1],
    ]
    assert m.delete_rows_cols(range(5)) == BitMatrix.zeros(0, 0)
    assert m.delete_rows_cols(set()) == m


def test_delete_out_of_range():
    with pytest.raises(IndexOutOfRangeError):
        BitMatrix.identity(2).delete_rows_cols({2})


@pytest.mark.parametrize("kernel", KERNELS, ids=lambda k: k.__name__.rsplit(".")[-1])
def test_kernels_agree_with_bruteforce_rank(kernel):
    rng = random.Random(1)
    for _ in range(150):
        n_rows = rng.randint(0, 6)
        n_cols = rng.randint(0, 6)
        rows = random_bitmatrix_rows(n_rows, n_cols, rng)
        assert kernel.rank(rows, n_rows, n_cols) == brute_rank(rows, n_rows)


def test_kernels_agree_with_each_other():
    if len(KERNELS) < 2:
        pytest.skip("compiled kernel not built")
    rng = random.Random(2)
    for _ in range(200):
        n = rng.randint(0, 70)  # crosses the one-word boundary
        rows = random_bitmatrix_rows(n, n, rng)
        assert _gf2py.rank(rows, n, n) == KERNELS[1].rank(rows, n, n)
        assert _gf2py.inverse(rows, n) == KERNELS[1].inverse(rows, n)


def test_det_iff_full_rank():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(0, 8)
        m = BitMatrix(n, n, random_bitmatrix_rows(n, n, rng))
        assert (m.det() == 1) == (m.rank() == n)


def test_inverse_involution_and_product():
    rng = random.Random(4)
    found = 0
    while found < 100:
        n = rng.randint(1, 10)
        m = BitMatrix(n, n, random_bitmatrix_rows(n, n, rng))
        if m.det() == 0:
            continue
        found += 1
        inv = m.inverse()
        assert inv.inverse() == m
        assert m @ inv == BitMatrix.identity(n)


def test_symmetric_inverse_is_symmetric(rng):
    found = 0
    while found < 100:
        n = rng.randint(1, 9)
        rows = [0] * n
        for i in range(n):
            for j in range(i + 1):
                if rng.random() < 0.5:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        m = BitMatrix(n, n, tuple(rows))
        if m.det() == 0:
            continue
        found += 1
        assert m.inverse().is_symmetric()


@given(st.integers(0, 6).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(0, (1 << n) - 1) if n else st.just(0), min_size=n, max_size=n))))
@settings(max_examples=80)
def test_transpose_involution(nm):
    n, rows = nm
    m = BitMatrix(n, n, tuple(rows))
    assert m.transpose().transpose() == m


def test_text_round_trip():
    m = BitMatrix.from_rows([[0, 1, 0], [1, 0, 1], [0, 1, 1]])
    assert from_text(to_text(m)) == m


def test_text_rejects_garbage():
    with pytest.raises(FormatError):
        from_text("")
    with pytest.raises(FormatError):
        from_text("2\n0 1\n0 2\n")
    with pytest.raises(FormatError):
        from_text("2\n0 1\n")
