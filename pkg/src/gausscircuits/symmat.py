"""Local complementation and pivot on symmetric GF(2) matrices.

Two equivalences live on Sym(n, Z_2): equality up to the diagonal, and the
closure of local complementation (at diagonal-1 entries) plus pivot (at
off-diagonal 1 entries with zero diagonal).  On the subset Sym+ of
matrices A with det(A + E) = 1, the map A -> class of (A + E)^-1 up to
diagonal descends to a bijection between the two quotients; its inverse
picks a determinant-1 representative by adjusting the diagonal greedily.

Orbit questions are decided only by bounded breadth-first search; matrix
realizability by chord diagrams is decided by exhaustive search over
double-occurrence patterns, again for small n only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import (
    DiagonalNotOneError,
    FormatError,
    IndexOutOfRangeError,
    NotSymPlusError,
    PreconditionError,
    SingularError,
    SizeMismatchError,
    TooLargeError,
)
from .gf2 import BitMatrix
from .gf2 import from_text as _bm_from_text
from .gf2 import to_text as _bm_to_text
from .words import FramedAdjacency, FramedWord, _MARKS_FOR_FRAMING


@dataclass(frozen=True)
class SymMatrix:
    """Symmetric GF(2) matrix, diagonal included, as bit-packed rows."""

    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        for i, r in enumerate(self.rows):
            if r < 0 or r >> n:
                raise FormatError("row has bits outside the matrix width")
            for j in range(i):
                if ((r >> j) & 1) != ((self.rows[j] >> i) & 1):
                    raise FormatError("matrix must be symmetric")

    @classmethod
    def from_rows(cls, rows) -> "SymMatrix":
        packed = []
        n = len(rows)
        for row in rows:
            row = list(row)
            if len(row) != n:
                raise FormatError("matrix must be square")
            bits = 0
            for j, v in enumerate(row):
                if v not in (0, 1):
                    raise FormatError(f"entry {v!r} is not a bit")
                bits |= v << j
            packed.append(bits)
        return cls(tuple(packed))

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def diag(self) -> tuple[int, ...]:
        return tuple((r >> i) & 1 for i, r in enumerate(self.rows))

    def zero_diag(self) -> "SymMatrix":
        return SymMatrix(tuple(r & ~(1 << i) for i, r in enumerate(self.rows)))

    def to_bitmatrix(self) -> BitMatrix:
        return BitMatrix(self.n, self.n, self.rows)

    @classmethod
    def from_bitmatrix(cls, m: BitMatrix) -> "SymMatrix":
        return cls(m.rows)

    def plus_identity(self) -> BitMatrix:
        return BitMatrix(self.n, self.n, tuple(r ^ (1 << i) for i, r in enumerate(self.rows)))


def to_text(m: SymMatrix) -> str:
    return _bm_to_text(m.to_bitmatrix())


def from_text(text: str) -> SymMatrix:
    bm = _bm_from_text(text)
    if not bm.is_symmetric():
        raise FormatError("matrix must be symmetric")
    return SymMatrix.from_bitmatrix(bm)


def loc_unchecked(a: SymMatrix, k: int) -> SymMatrix:
    """The complementation formula with no diagonal precondition.

    Toggles a_pq for all p, q != k adjacent to k (p = q included, so the
    neighbours' diagonal flips too); row and column k are untouched.
    """
    if not 0 <= k < a.n:
        raise IndexOutOfRangeError(f"index {k} outside 0..{a.n - 1}")
    nbrs = a.rows[k] & ~(1 << k)
    rows = list(a.rows)
    for p in range(a.n):
        if p != k and (nbrs >> p) & 1:
            rows[p] ^= nbrs
    return SymMatrix(tuple(rows))


def loc(a: SymMatrix, k: int) -> SymMatrix:
    """Local complementation at a diagonal-1 entry."""
    if not 0 <= k < a.n:
        raise IndexOutOfRangeError(f"index {k} outside 0..{a.n - 1}")
    if not a.entry(k, k):
        raise DiagonalNotOneError(f"diagonal entry {k} is not 1")
    return loc_unchecked(a, k)


def pivot(a: SymMatrix, i: int, j: int) -> SymMatrix:
    """Pivot at a_ij = 1 with a_ii = a_jj = 0.

    Off-diagonal entries come from the triple complementation at i, j, i;
    the diagonal is copied from the input.
    """
    if i == j or not (0 <= i < a.n and 0 <= j < a.n):
        raise PreconditionError("pivot needs two distinct valid indices")
    if a.entry(i, i) or a.entry(j, j) or not a.entry(i, j):
        raise PreconditionError("pivot needs a_ii = a_jj = 0 and a_ij = 1")
    triple = loc_unchecked(loc_unchecked(loc_unchecked(a, i), j), i)
    rows = tuple(
        (tr & ~(1 << p)) | (ar & (1 << p))
        for p, (tr, ar) in enumerate(zip(triple.rows, a.rows))
    )
    return SymMatrix(rows)


def equal_up_to_diag(a: SymMatrix, b: SymMatrix) -> bool:
    if a.n != b.n:
        raise SizeMismatchError(f"sizes {a.n} and {b.n} differ")
    return a.zero_diag() == b.zero_diag()


def _moves(a: SymMatrix) -> Iterator[SymMatrix]:
    d = a.diag()
    for k in range(a.n):
        if d[k]:
            yield loc(a, k)
    for i in range(a.n):
        if d[i]:
            continue
        for j in range(i + 1, a.n):
            if not d[j] and a.entry(i, j):
                yield pivot(a, i, j)


def orbit(a: SymMatrix, max_n: int = 8) -> frozenset[SymMatrix]:
    """Closure of {a} under loc and pivot, by breadth-first search."""
    if a.n > max_n:
        raise TooLargeError(f"size {a.n} exceeds the orbit bound {max_n}")
    seen = {a}
    frontier = [a]
    while frontier:
        nxt = []
        for m in frontier:
            for nb in _moves(m):
                if nb not in seen:
                    seen.add(nb)
                    nxt.append(nb)
        frontier = nxt
    return frozenset(seen)


def in_sym_plus(a: SymMatrix) -> bool:
    return a.plus_identity().det() == 1


@dataclass(frozen=True)
class DiagClass:
    """Equivalence class up to the diagonal; canonical rep has zero diagonal."""

    rep: SymMatrix

    def __post_init__(self) -> None:
        if any(self.rep.diag()):
            raise FormatError("canonical representative must have zero diagonal")

    @classmethod
    def of(cls, m: SymMatrix) -> "DiagClass":
        return cls(m.zero_diag())

    @property
    def n(self) -> int:
        return self.rep.n


@dataclass(frozen=True, eq=False)
class CircuitClass:
    """Class under loc/pivot moves, held by a representative.

    Equality of classes is decidable only through a bounded orbit search;
    compare with :meth:`same_class`, which raises beyond the bound instead
    of guessing.
    """

    rep: SymMatrix

    @property
    def n(self) -> int:
        return self.rep.n

    def orbit(self, max_n: int = 8) -> frozenset[SymMatrix]:
        return orbit(self.rep, max_n=max_n)

    def canonical(self, max_n: int = 8) -> SymMatrix:
        """Lexicographically minimal orbit member (by bit-packed rows)."""
        return min(self.orbit(max_n=max_n), key=lambda m: m.rows)

    def contains(self, m: SymMatrix, max_n: int = 8) -> bool:
        return m in self.orbit(max_n=max_n)

    def same_class(self, other: "CircuitClass", max_n: int = 8) -> bool:
        if self.rep.n != other.rep.n:
            raise SizeMismatchError("classes of different sizes")
        return other.rep in self.orbit(max_n=max_n)


def chi(a: SymMatrix) -> DiagClass:
    """Diagonal-blind class of (A + E)^-1; constant on loc/pivot orbits."""
    b = a.plus_identity()
    try:
        inv = b.inverse()
    except SingularError:
        raise NotSymPlusError("det(A + E) = 0") from None
    return DiagClass.of(SymMatrix.from_bitmatrix(inv))


def det_one_representative(c: DiagClass) -> SymMatrix:
    """A matrix in the class with determinant 1.

    The diagonal is chosen left to right so every leading minor has
    determinant 1: with the previous minor equal to 1, the determinant of
    the next leading block is affine in the new diagonal entry with unit
    coefficient, so one of the two choices works.
    """
    rows = list(c.rep.rows)
    for k in range(c.n):
        mask = (1 << (k + 1)) - 1
        leading = BitMatrix(k + 1, k + 1, tuple(r & mask for r in rows[: k + 1]))
        if leading.det() == 0:
            rows[k] ^= 1 << k
    return SymMatrix(tuple(rows))


def chi_inverse(c: DiagClass) -> CircuitClass:
    """Class of B^-1 + E for a determinant-1 representative B of c."""
    b = det_one_representative(c).to_bitmatrix()
    inv = b.inverse()
    rep = SymMatrix(tuple(r ^ (1 << i) for i, r in enumerate(inv.rows)))
    return CircuitClass(rep)


def _search_pattern(want: tuple[int, ...], n: int) -> Optional[list[int]]:
    """Double-occurrence pattern whose interlacement, with letters numbered
    by first occurrence, equals ``want``; None if there is none.  Branches
    are pruned as soon as a closing chord contradicts the target."""
    m = 2 * n
    pattern = [-1] * m
    placed: list[tuple[int, int]] = []

    def rec() -> bool:
        li = len(placed)
        if li == n:
            return True
        p1 = pattern.index(-1)
        for p2 in range(p1 + 1, m):
            if pattern[p2] != -1:
                continue
            ok = True
            for lj, (q1, q2) in enumerate(placed):
                # q1 < p1 always: letter lj opened earlier.
                if ((p1 < q2) != (p2 < q2)) != bool((want[li] >> lj) & 1):
                    ok = False
                    break
            if not ok:
                continue
            pattern[p1] = pattern[p2] = li
            placed.append((p1, p2))
            if rec():
                return True
            placed.pop()
            pattern[p1] = pattern[p2] = -1
        return False

    return pattern if rec() else None


def realize(target: FramedAdjacency, max_n: int = 7) -> Optional[FramedWord]:
    """Search for a word whose adjacency equals the target.

    Exhaustive over all double-occurrence patterns on n letters and all
    simultaneous renumberings of the target (a matrix realised by a diagram
    under one chord numbering may interlace in first-occurrence order only
    after renumbering).  The result carries the requested framings and its
    adjacency in the target's letter order reproduces the target exactly;
    None when no pattern matches.
    """
    n = target.n
    if n > max_n:
        raise TooLargeError(f"size {n} exceeds the search bound {max_n}")
    if n == 0:
        return FramedWord(())
    m = 2 * n
    tried: set[tuple] = set()
    from itertools import permutations

    for perm in permutations(range(n)):
        rows = tuple(
            sum(target.entry(perm[i], perm[j]) << j for j in range(n)) for i in range(n)
        )
        diag = tuple(target.diag[p] for p in perm)
        if (rows, diag) in tried:
            continue
        tried.add((rows, diag))
        pattern = _search_pattern(rows, n)
        if pattern is None:
            continue
        names = tuple(target.letters[p] for p in perm)
        count = [0] * n
        letters = []
        for pos in range(m):
            li = pattern[pos]
            k = count[li]
            count[li] += 1
            letters.append((names[li], _MARKS_FOR_FRAMING[diag[li]][k]))
        return FramedWord(tuple(letters))
    return None
