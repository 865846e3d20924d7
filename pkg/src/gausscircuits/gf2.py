"""Dense linear algebra over the two-element field.

Matrices are immutable; each row is a Python integer read as a bit vector
(bit ``j`` = column ``j``), so the only elimination step is a row XOR.  The
0x0 matrix is a first-class citizen: rank 0, determinant 1, its own inverse.

The elimination kernels run either in the compiled extension ``_gf2fast``
or in the pure-Python module ``_gf2py``; the choice is made once at import
(set ``GAUSSCIRCUITS_PURE=1`` to force the fallback) and is exposed as
``BACKEND``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    FormatError,
    IndexOutOfRangeError,
    NonSquareError,
    SingularError,
)

if os.environ.get("GAUSSCIRCUITS_PURE"):
    from . import _gf2py as _kernel

    BACKEND = "pure"
else:
    try:
        from . import _gf2fast as _kernel  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _gf2py as _kernel  # type: ignore[no-redef]

        BACKEND = "pure"


@dataclass(frozen=True)
class BitMatrix:
    """Dense GF(2) matrix with bit-packed rows."""

    n_rows: int
    n_cols: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n_rows < 0 or self.n_cols < 0 or len(self.rows) != self.n_rows:
            raise FormatError("inconsistent matrix dimensions")
        mask = (1 << self.n_cols) - 1
        for r in self.rows:
            if r < 0 or r & ~mask:
                raise FormatError("row has bits outside the matrix width")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], n_cols: int | None = None) -> "BitMatrix":
        """Build from nested 0/1 lists; ``n_cols`` is only needed for 0-row matrices."""
        packed = []
        width = n_cols
        for row in rows:
            row = list(row)
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise FormatError("ragged rows")
            bits = 0
            for j, v in enumerate(row):
                if v not in (0, 1):
                    raise FormatError(f"entry {v!r} is not a bit")
                bits |= v << j
            packed.append(bits)
        return cls(len(packed), width or 0, tuple(packed))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "BitMatrix":
        return cls(n_rows, n_cols, (0,) * n_rows)

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.n_cols)] for r in self.rows]

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self.entry(i, j) == self.entry(j, i)
            for i in range(self.n_rows)
            for j in range(i)
        )

    def __add__(self, other: "BitMatrix") -> "BitMatrix":
        if (self.n_rows, self.n_cols) != (other.n_rows, other.n_cols):
            raise FormatError("size mismatch in matrix sum")
        return BitMatrix(
            self.n_rows, self.n_cols, tuple(a ^ b for a, b in zip(self.rows, other.rows))
        )

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.n_cols != other.n_rows:
            raise FormatError("size mismatch in matrix product")
        cols = other.transpose().rows
        out = []
        for r in self.rows:
            bits = 0
            for j, c in enumerate(cols):
                bits |= ((r & c).bit_count() & 1) << j
            out.append(bits)
        return BitMatrix(self.n_rows, other.n_cols, tuple(out))

    def transpose(self) -> "BitMatrix":
        out = [0] * self.n_cols
        for i, r in enumerate(self.rows):
            while r:
                j = (r & -r).bit_length() - 1
                out[j] |= 1 << i
                r &= r - 1
        return BitMatrix(self.n_cols, self.n_rows, tuple(out))

    def rank(self) -> int:
        return _kernel.rank(self.rows, self.n_rows, self.n_cols)

    def corank(self) -> int:
        return self.n_cols - self.rank()

    def det(self) -> int:
        """GF(2) determinant; 1 for the 0x0 matrix (empty product)."""
        if not self.is_square:
            raise NonSquareError("determinant of a non-square matrix")
        return 1 if self.rank() == self.n_rows else 0

    def inverse(self) -> "BitMatrix":
        if not self.is_square:
            raise NonSquareError("inverse of a non-square matrix")
        inv = _kernel.inverse(self.rows, self.n_rows)
        if inv is None:
            raise SingularError("matrix is singular over GF(2)")
        return BitMatrix(self.n_rows, self.n_rows, tuple(inv))

    def delete_rows_cols(self, idx: Iterable[int]) -> "BitMatrix":
        """Remove the listed rows and the matching columns, order preserved."""
        if not self.is_square:
            raise NonSquareError("row/column deletion needs a square matrix")
        drop = set(idx)
        for i in drop:
            if not 0 <= i < self.n_rows:
                raise IndexOutOfRangeError(f"index {i} outside 0..{self.n_rows - 1}")
        keep = [i for i in range(self.n_rows) if i not in drop]
        rows = []
        for i in keep:
            bits = 0
            for jj, j in enumerate(keep):
                bits |= self.entry(i, j) << jj
            rows.append(bits)
        return BitMatrix(len(keep), len(keep), tuple(rows))


def to_text(m: BitMatrix) -> str:
    """Square-matrix text format: first line n, then n rows of 0/1 tokens."""
    if not m.is_square:
        raise NonSquareError("text format is for square matrices")
    lines = [str(m.n_rows)]
    for r in m.rows:
        lines.append(" ".join(str((r >> j) & 1) for j in range(m.n_cols)))
    return "\n".join(lines) + "\n"


def from_text(text: str) -> BitMatrix:
    """Parse the square-matrix text format; tokens must be 0 or 1."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty matrix text")
    try:
        n = int(lines[0])
    except ValueError:
        raise FormatError(f"bad size line {lines[0]!r}") from None
    if n < 0 or len(lines) != n + 1:
        raise FormatError(f"expected {n} rows, got {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != n or any(t not in ("0", "1") for t in toks):
            raise FormatError(f"bad matrix row {ln!r}")
        rows.append([int(t) for t in toks])
    return BitMatrix.from_rows(rows, n_cols=n)
