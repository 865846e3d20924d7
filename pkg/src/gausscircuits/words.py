"""Framed double-occurrence cyclic words (framed chord diagrams).

A framed word is a cyclic sequence in which every letter occurs exactly
twice and each occurrence carries a mark: plus, minus, or ``G``.  The two
marks of a letter encode its framing: equal signs mean framing 0, opposite
signs framing 1, and a double ``G`` a Gaussian letter.  Words are compared
as cyclic classes: equal up to rotation, up to mirror reversal with mark
conjugation (signs flip, ``G`` is fixed), and up to flipping both signs of
any one letter.  Only letter positions and framings survive the quotient,
which is what :func:`canonical` normalises.

Grammar accepted by :func:`parse` (whitespace separates tokens)::

    word   := "(" token* ")"
    token  := ident ("^G" | "^-1" | "^+1" | "^1")?
    ident  := [A-Za-z][A-Za-z0-9_]*

A bare ident means the plus mark.  Compact single-letter strings such as
``(ab^{-1}acd^Ge^{-1}d^Gb^{-1}c^{-1}e)`` are accepted too: when the body
contains no whitespace, every letter is its own ident and ``^{...}``
braces are allowed around the superscript.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import (
    FormatError,
    LetterCountError,
    MarkMismatchError,
    NotInterlacedError,
    UnknownLetterError,
    WordSyntaxError,
)
from .gf2 import BitMatrix


class Mark(enum.Enum):
    """Superscript of one letter occurrence."""

    PLUS = "+"
    MINUS = "-"
    GAUSS = "G"

    def bar(self) -> "Mark":
        """Mark conjugation used by mirror reversal: signs flip, G is fixed."""
        if self is Mark.PLUS:
            return Mark.MINUS
        if self is Mark.MINUS:
            return Mark.PLUS
        return Mark.GAUSS


class Framing(enum.Enum):
    """Framing of a letter (chord/vertex): 0, 1, or Gaussian."""

    ZERO = "0"
    ONE = "1"
    GAUSS = "G"

    @property
    def bit(self) -> int:
        """GF(2) value of a non-Gaussian framing."""
        if self is Framing.GAUSS:
            raise ValueError("Gaussian framing has no bit value")
        return 0 if self is Framing.ZERO else 1


def framing_of(first: Mark, second: Mark) -> Framing:
    """Framing encoded by the two marks of one letter."""
    if first is Mark.GAUSS and second is Mark.GAUSS:
        return Framing.GAUSS
    if Mark.GAUSS in (first, second):
        raise MarkMismatchError("one occurrence Gaussian, the other signed")
    return Framing.ZERO if first is second else Framing.ONE


# Canonical marks of a letter, by framing, for (first, second) occurrence.
_MARKS_FOR_FRAMING = {
    Framing.ZERO: (Mark.PLUS, Mark.PLUS),
    Framing.ONE: (Mark.PLUS, Mark.MINUS),
    Framing.GAUSS: (Mark.GAUSS, Mark.GAUSS),
}

_MARK_CODE = {Mark.PLUS: 0, Mark.MINUS: 1, Mark.GAUSS: 2}


@dataclass(frozen=True, eq=False)
class FramedWord:
    """Cyclic double-occurrence word; equality is cyclic-class equality."""

    letters: tuple[tuple[str, Mark], ...]

    def __post_init__(self) -> None:
        seen: dict[str, list[Mark]] = {}
        for name, mark in self.letters:
            seen.setdefault(name, []).append(mark)
        for name, marks in seen.items():
            if len(marks) != 2:
                raise LetterCountError(f"letter {name!r} occurs {len(marks)} time(s)")
        for name, marks in seen.items():
            framing_of(marks[0], marks[1])  # raises MarkMismatchError

    @property
    def n(self) -> int:
        return len(self.letters) // 2

    @cached_property
    def names(self) -> tuple[str, ...]:
        """Letter names in first-occurrence order."""
        out: list[str] = []
        for name, _ in self.letters:
            if name not in out:
                out.append(name)
        return tuple(out)

    @cached_property
    def positions(self) -> dict[str, tuple[int, int]]:
        pos: dict[str, tuple[int, ...]] = {}
        for i, (name, _) in enumerate(self.letters):
            pos[name] = pos.get(name, ()) + (i,)
        return {name: (p[0], p[1]) for name, p in pos.items()}

    @cached_property
    def framings(self) -> dict[str, Framing]:
        marks: dict[str, list[Mark]] = {}
        for name, mark in self.letters:
            marks.setdefault(name, []).append(mark)
        return {name: framing_of(m[0], m[1]) for name, m in marks.items()}

    def has_gaussian(self) -> bool:
        return any(f is Framing.GAUSS for f in self.framings.values())

    @cached_property
    def _canonical_key(self) -> tuple:
        """Lexicographically minimal encoding over rotations and reversal.

        Marks are re-derived from framings, which absorbs both the per-letter
        sign flip and the conjugation that mirror reversal would apply.
        """
        base = [name for name, _ in self.letters]
        m = len(base)
        if m == 0:
            return ()
        framings = self.framings
        best = None
        for seq in (base, base[::-1]):
            for r in range(m):
                rotated = seq[r:] + seq[:r]
                index: dict[str, int] = {}
                count: dict[str, int] = {}
                encoded = []
                for name in rotated:
                    if name not in index:
                        index[name] = len(index)
                    k = count.get(name, 0)
                    count[name] = k + 1
                    mark = _MARKS_FOR_FRAMING[framings[name]][k]
                    encoded.append((index[name], _MARK_CODE[mark]))
                key = tuple(encoded)
                if best is None or key < best:
                    best = key
        return best

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FramedWord):
            return NotImplemented
        return self._canonical_key == other._canonical_key

    def __hash__(self) -> int:
        return hash(self._canonical_key)

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"FramedWord({to_text(self)!r})"


_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_SUFFIXES = {
    "^G": Mark.GAUSS,
    "^-1": Mark.MINUS,
    "^+1": Mark.PLUS,
    "^1": Mark.PLUS,
    "^{G}": Mark.GAUSS,
    "^{-1}": Mark.MINUS,
    "^{+1}": Mark.PLUS,
    "^{1}": Mark.PLUS,
}


def _parse_token(tok: str) -> tuple[str, Mark]:
    m = _IDENT_RE.match(tok)
    if not m:
        raise WordSyntaxError(f"bad token {tok!r}")
    name, rest = m.group(0), tok[m.end() :]
    if not rest:
        return name, Mark.PLUS
    if rest in _SUFFIXES:
        return name, _SUFFIXES[rest]
    raise WordSyntaxError(f"bad superscript {rest!r} in token {tok!r}")


def _parse_compact(body: str) -> list[tuple[str, Mark]]:
    """Single-letter idents, optional ^ suffix with or without braces."""
    out = []
    i = 0
    while i < len(body):
        ch = body[i]
        if not ch.isalpha():
            raise WordSyntaxError(f"unexpected character {ch!r}")
        i += 1
        mark = Mark.PLUS
        if i < len(body) and body[i] == "^":
            for suffix, mk in _SUFFIXES.items():
                if body.startswith(suffix[1:], i + 1):
                    mark = mk
                    i += len(suffix)
                    break
            else:
                raise WordSyntaxError(f"bad superscript at offset {i}")
        out.append((ch, mark))
    return out


def parse(text: str) -> FramedWord:
    """Parse word text; see the module docstring for the grammar."""
    stripped = text.strip()
    if not (stripped.startswith("(") and stripped.endswith(")")):
        raise WordSyntaxError("word must be enclosed in parentheses")
    body = stripped[1:-1].strip()
    if not body:
        return FramedWord(())
    try:
        return FramedWord(tuple(_parse_token(tok) for tok in body.split()))
    except FormatError as primary:
        # Compact one-chunk strings like (ab^{-1}ab): retry with
        # single-letter idents, but never when whitespace was present.
        if not any(ch.isspace() for ch in body):
            try:
                return FramedWord(tuple(_parse_compact(body)))
            except FormatError:
                pass
        raise primary


def to_text(w: FramedWord) -> str:
    """Render one representative; parse(to_text(w)) == w as cyclic classes."""
    toks = []
    for name, mark in w.letters:
        if mark is Mark.PLUS:
            toks.append(name)
        elif mark is Mark.MINUS:
            toks.append(name + "^-1")
        else:
            toks.append(name + "^G")
    return "(" + " ".join(toks) + ")"


def rotate(w: FramedWord, k: int) -> FramedWord:
    """Representative rotated by k positions (same cyclic class)."""
    if not w.letters:
        return w
    k %= len(w.letters)
    return FramedWord(w.letters[k:] + w.letters[:k])


def mirror_bar(w: FramedWord) -> FramedWord:
    """Mirror reversal with mark conjugation (same cyclic class)."""
    return FramedWord(tuple((name, mark.bar()) for name, mark in reversed(w.letters)))


def canonical(w: FramedWord) -> FramedWord:
    """Unique representative of the cyclic class.

    Minimal reading over all rotations and the mirror reversal, letters
    relabelled v1..vn in order of first occurrence, marks normalised from
    the framings (0 -> both plus, 1 -> plus then minus, Gaussian -> G).
    """
    key = w._canonical_key
    letters = tuple((f"v{idx + 1}", _CODE_MARK[code]) for idx, code in key)
    return FramedWord(letters)


_CODE_MARK = {code: mark for mark, code in _MARK_CODE.items()}


def _positions_of(w: FramedWord, name: str) -> tuple[int, int]:
    try:
        return w.positions[name]
    except KeyError:
        raise UnknownLetterError(f"letter {name!r} not in word") from None


def interlaced(w: FramedWord, a: str, b: str) -> bool:
    """True iff a and b alternate cyclically: ...a...b...a...b..."""
    if a == b:
        raise UnknownLetterError("interlacement needs two distinct letters")
    a1, a2 = _positions_of(w, a)
    b1, b2 = _positions_of(w, b)
    return (a1 < b1 < a2) != (a1 < b2 < a2)


@dataclass(frozen=True)
class FramedAdjacency:
    """Adjacency matrix of a framed word: interlacement off the diagonal,
    framings (0/1/G) on the diagonal."""

    letters: tuple[str, ...]
    diag: tuple[Framing, ...]
    rows: tuple[int, ...]  # off-diagonal bits only; diagonal bits are 0

    def __post_init__(self) -> None:
        n = len(self.letters)
        if len(self.diag) != n or len(self.rows) != n:
            raise FormatError("inconsistent adjacency dimensions")
        if len(set(self.letters)) != n:
            raise FormatError("duplicate letters")
        for i, r in enumerate(self.rows):
            if r < 0 or r >> n:
                raise FormatError("row has bits outside the matrix width")
            if (r >> i) & 1:
                raise FormatError("off-diagonal rows must have zero diagonal")
            for j in range(i):
                if ((r >> j) & 1) != ((self.rows[j] >> i) & 1):
                    raise FormatError("adjacency must be symmetric")

    @property
    def n(self) -> int:
        return len(self.letters)

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def offdiag_matrix(self) -> BitMatrix:
        """The interlacement part as a BitMatrix with zero diagonal."""
        return BitMatrix(self.n, self.n, self.rows)

    def with_bit_diag(self) -> BitMatrix:
        """Full GF(2) matrix with framing bits on the diagonal."""
        from .errors import HasGaussianChordError

        rows = []
        for i, f in enumerate(self.diag):
            if f is Framing.GAUSS:
                raise HasGaussianChordError("Gaussian framing has no bit value")
            rows.append(self.rows[i] | (f.bit << i))
        return BitMatrix(self.n, self.n, tuple(rows))

    def drop_gaussian(self) -> "FramedAdjacency":
        """Sub-adjacency over the non-Gaussian letters."""
        keep = [i for i, f in enumerate(self.diag) if f is not Framing.GAUSS]
        return self.take(keep)

    def take(self, indices: Sequence[int]) -> "FramedAdjacency":
        rows = []
        for i in indices:
            bits = 0
            for jj, j in enumerate(indices):
                bits |= self.entry(i, j) << jj
            rows.append(bits)
        return FramedAdjacency(
            tuple(self.letters[i] for i in indices),
            tuple(self.diag[i] for i in indices),
            tuple(rows),
        )

    def permuted(self, order: Sequence[str]) -> "FramedAdjacency":
        index = {name: i for i, name in enumerate(self.letters)}
        try:
            return self.take([index[name] for name in order])
        except KeyError as exc:
            raise UnknownLetterError(f"letter {exc.args[0]!r} not in adjacency") from None


def adjacency(w: FramedWord, order: Optional[Sequence[str]] = None) -> FramedAdjacency:
    """Adjacency matrix of a word.

    Indices follow first-occurrence order unless an explicit letter order is
    given (it must list exactly the word's letters).
    """
    names = w.names if order is None else tuple(order)
    if sorted(names) != sorted(w.names):
        raise UnknownLetterError("order must list exactly the word's letters")
    pos = [w.positions[name] for name in names]
    framings = w.framings
    n = len(names)
    rows = [0] * n
    for i in range(n):
        a1, a2 = pos[i]
        for j in range(i):
            b1, b2 = pos[j]
            if (a1 < b1 < a2) != (a1 < b2 < a2):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return FramedAdjacency(names, tuple(framings[name] for name in names), tuple(rows))


def adjacency_to_text(adj: FramedAdjacency) -> str:
    """Matrix text with 0/1/G tokens; the diagonal carries the framings."""
    lines = [str(adj.n)]
    for i in range(adj.n):
        toks = []
        for j in range(adj.n):
            toks.append(adj.diag[i].value if i == j else str(adj.entry(i, j)))
        lines.append(" ".join(toks))
    return "\n".join(lines) + "\n"


def adjacency_from_text(text: str, letters: Optional[Sequence[str]] = None) -> FramedAdjacency:
    """Parse the 0/1/G matrix text; G may only appear on the diagonal."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty matrix text")
    try:
        n = int(lines[0])
    except ValueError:
        raise FormatError(f"bad size line {lines[0]!r}") from None
    if n < 0 or len(lines) != n + 1:
        raise FormatError(f"expected {n} rows, got {len(lines) - 1}")
    names = tuple(letters) if letters is not None else tuple(f"v{i + 1}" for i in range(n))
    diag = []
    rows = []
    for i, ln in enumerate(lines[1:]):
        toks = ln.split()
        if len(toks) != n:
            raise FormatError(f"bad matrix row {ln!r}")
        bits = 0
        for j, t in enumerate(toks):
            if i == j:
                if t == "G":
                    diag.append(Framing.GAUSS)
                elif t in ("0", "1"):
                    diag.append(Framing.ZERO if t == "0" else Framing.ONE)
                else:
                    raise FormatError(f"bad diagonal token {t!r}")
            else:
                if t not in ("0", "1"):
                    raise FormatError(f"bad off-diagonal token {t!r}")
                bits |= int(t) << j
        rows.append(bits)
    return FramedAdjacency(names, tuple(diag), tuple(rows))


def _bar_segment(seg: Sequence[tuple[str, Mark]]) -> tuple[tuple[str, Mark], ...]:
    return tuple((name, mark.bar()) for name, mark in reversed(seg))


def framed_star(w: FramedWord, a: str) -> FramedWord:
    """Star operation at letter a.

    Writing the word as (a m1 a m2), the segment m1 between the two
    occurrences of a is replaced by its reversal with conjugated marks, and
    a's framing changes Gaussian <-> 0 while framing 1 stays framing 1.
    An involution on cyclic classes; the word shadow of rerouting an Euler
    tour at one vertex.
    """
    p1, p2 = _positions_of(w, a)
    seq = w.letters[p1:] + w.letters[:p1]
    cut = p2 - p1
    m1, m2 = seq[1:cut], seq[cut + 1 :]
    framing = w.framings[a]
    if framing is Framing.GAUSS:
        new = _MARKS_FOR_FRAMING[Framing.ZERO]
    elif framing is Framing.ZERO:
        new = _MARKS_FOR_FRAMING[Framing.GAUSS]
    else:
        new = _MARKS_FOR_FRAMING[Framing.ONE]
    return FramedWord(((a, new[0]),) + _bar_segment(m1) + ((a, new[1]),) + m2)


def star_pivot(w: FramedWord, a: str, b: str) -> FramedWord:
    """The triple star ((w*a)*b)*a at an interlaced pair.

    On a framing-1 interlaced pair this turns both letters Gaussian; on a
    framing-0 interlaced pair it maps rotating words to rotating words.
    """
    if not interlaced(w, a, b):
        raise NotInterlacedError(f"letters {a!r} and {b!r} do not alternate")
    return framed_star(framed_star(framed_star(w, a), b), a)
