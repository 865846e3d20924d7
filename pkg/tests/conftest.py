import random

import pytest
from hypothesis import strategies as st

from gausscircuits.symmat import SymMatrix, in_sym_plus
from gausscircuits.words import Framing, FramedWord, Mark


def random_bitmatrix_rows(n_rows, n_cols, rng):
    return tuple(rng.getrandbits(n_cols) for _ in range(n_rows))


def random_symmetric(n, rng):
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1):
            if rng.random() < 0.5:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return SymMatrix(tuple(rows))


def random_sym_plus(n, rng):
    while True:
        m = random_symmetric(n, rng)
        if in_sym_plus(m):
            return m


def brute_rank(rows, n_rows):
    """GF(2) rank as log2 of the row span, by enumerating all combinations."""
    span = set()
    for bits in range(1 << n_rows):
        acc = 0
        for i in range(n_rows):
            if (bits >> i) & 1:
                acc ^= rows[i]
        span.add(acc)
    return len(span).bit_length() - 1


# Marks realizing a framing, in (first, second) occurrence order; both
# sign choices are listed so strategies exercise the quotient.
_MARK_CHOICES = {
    Framing.ZERO: ((Mark.PLUS, Mark.PLUS), (Mark.MINUS, Mark.MINUS)),
    Framing.ONE: ((Mark.PLUS, Mark.MINUS), (Mark.MINUS, Mark.PLUS)),
    Framing.GAUSS: ((Mark.GAUSS, Mark.GAUSS),),
}


@st.composite
def framed_words(draw, max_n=5, framings=tuple(Framing)):
    n = draw(st.integers(0, max_n))
    pattern = [i for i in range(n) for _ in range(2)]
    pattern = draw(st.permutations(pattern)) if n else []
    framing = [draw(st.sampled_from(framings)) for _ in range(n)]
    marks = [draw(st.sampled_from(_MARK_CHOICES[f])) for f in framing]
    count = [0] * n
    letters = []
    for i in pattern:
        letters.append((f"v{i + 1}", marks[i][count[i]]))
        count[i] += 1
    return FramedWord(tuple(letters))


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
