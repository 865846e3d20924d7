"""Gauss-circuit existence, the inversion formula, surgery, d-diagrams.

The two central facts implemented here: a framed 4-graph has a Gauss
circuit iff the non-Gaussian part A of the adjacency matrix of any of its
Euler tours satisfies corank(A + E) = 0; and when it does, the adjacency
matrix of the Gauss circuit is (A + E)^-1 up to the diagonal (which is all
Gaussian).  Both are cross-checked against the opposite-slot traversal
oracle in :func:`gauss_word`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    HasGaussianChordError,
    NoGaussCircuitError,
    PreconditionError,
    SingularError,
)
from .gf2 import BitMatrix
from .graphs import from_word, gauss_traverse, natural_key, tour_word
from .words import (
    FramedAdjacency,
    FramedWord,
    Framing,
    adjacency,
    framed_star,
)


def _reduced_plus_identity(w: FramedWord) -> BitMatrix:
    """A-hat + E: adjacency over the non-Gaussian letters, framing bits on
    the diagonal, plus the identity."""
    sub = adjacency(w).drop_gaussian()
    return sub.with_bit_diag() + BitMatrix.identity(sub.n)


def gauss_corank(w: FramedWord) -> int:
    return _reduced_plus_identity(w).corank()


def gauss_exists(w: FramedWord) -> bool:
    """Whether the framed graph of w has a Gauss circuit."""
    return gauss_corank(w) == 0


def to_rotating(w: FramedWord) -> FramedWord:
    """Gaussian-free word of the same graph.

    Deterministic: star the smallest Gaussian letter (natural name order)
    until none remain; each step removes one Gaussian letter and creates
    none.
    """
    while True:
        gaussian = [a for a, f in w.framings.items() if f is Framing.GAUSS]
        if not gaussian:
            return w
        w = framed_star(w, min(gaussian, key=natural_key))


def gauss_matrix(w: FramedWord, order: Optional[Sequence[str]] = None) -> FramedAdjacency:
    """Adjacency matrix of the Gauss circuit, computed by one inversion.

    The word is first normalised to a rotating one; the result has
    off-diagonal (A + E)^-1 and an all-Gaussian diagonal, indexed by the
    given letter order (default: first-occurrence order of w).
    """
    names = tuple(order) if order is not None else w.names
    adj = adjacency(to_rotating(w), order=names)
    b = adj.with_bit_diag() + BitMatrix.identity(adj.n)
    try:
        inv = b.inverse()
    except SingularError:
        raise NoGaussCircuitError("corank(A + E) is positive") from None
    n = adj.n
    rows = tuple(r & ~(1 << i) for i, r in enumerate(inv.rows))
    return FramedAdjacency(names, (Framing.GAUSS,) * n, rows)


@dataclass(frozen=True)
class GaussResult:
    """Gauss circuit by formula and by traversal, with the cross-check."""

    matrix: FramedAdjacency
    word: FramedWord
    consistent: bool


def gauss_word(w: FramedWord, order: Optional[Sequence[str]] = None) -> GaussResult:
    """Gauss circuit of w's graph: traversal word, formula matrix, and
    whether their off-diagonals agree (expected always)."""
    g, _ = from_word(w)
    circuit = gauss_traverse(g)
    if circuit is None:
        raise NoGaussCircuitError("opposite-slot walk closes early")
    names = tuple(order) if order is not None else w.names
    word = tour_word(g, circuit)
    matrix = gauss_matrix(w, order=names)
    consistent = adjacency(word, order=names).rows == matrix.rows
    return GaussResult(matrix=matrix, word=word, consistent=consistent)


def surgery_components(w: FramedWord) -> int:
    """Number of circles after smoothing every chord.

    The circle is cut into 2n arcs between the letter occurrences; a
    framing-0 chord reconnects the strands at its two endpoints preserving
    the rotational direction, a framing-1 chord reverses it.  Components
    are counted as cycles of the successor map on directed arcs (each
    circle appears once per orientation).
    """
    if any(f is Framing.GAUSS for f in w.framings.values()):
        raise HasGaussianChordError("surgery needs a Gaussian-free word")
    m = len(w.letters)
    if m == 0:
        return 1
    partner = [0] * m
    fbit = [0] * m
    for name, (p1, p2) in w.positions.items():
        partner[p1], partner[p2] = p2, p1
        fbit[p1] = fbit[p2] = w.framings[name].bit

    def successor(arc: int) -> int:
        i, back = arc >> 1, arc & 1
        q = i if back else (i + 1) % m
        q2 = partner[q]
        outgoing_back = back ^ fbit[q]
        if outgoing_back:
            return ((q2 - 1) % m) << 1 | 1
        return q2 << 1

    seen = [False] * (2 * m)
    cycles = 0
    for start in range(2 * m):
        if seen[start]:
            continue
        cycles += 1
        a = start
        while not seen[a]:
            seen[a] = True
            a = successor(a)
    return cycles // 2


def is_d_diagram(w: FramedWord) -> Optional[tuple[frozenset[str], frozenset[str]]]:
    """Split of the chords into two interlacement-free sets, if one exists.

    Requires every chord to have framing 0 and the interlacement graph to
    be bipartite; returns one split, or None.
    """
    if any(f is not Framing.ZERO for f in w.framings.values()):
        return None
    adj = adjacency(w)
    color = [-1] * adj.n
    for start in range(adj.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            i = queue.pop(0)
            for j in range(adj.n):
                if not adj.entry(i, j):
                    continue
                if color[j] < 0:
                    color[j] = 1 - color[i]
                    queue.append(j)
                elif color[j] == color[i]:
                    return None
    names = adj.letters
    return (
        frozenset(names[i] for i in range(adj.n) if color[i] == 0),
        frozenset(names[i] for i in range(adj.n) if color[i] == 1),
    )


@dataclass(frozen=True)
class DiagonalOnesReport:
    """Outcome of :func:`diagonal_ones_probe` on one (word, lambda) pair."""

    final: BitMatrix
    diagonal_all_ones: bool
    input_is_d_diagram: bool
    d_diagram_checked: bool
    d_diagram_preserved: Optional[bool]
    realization: Optional[FramedWord]


def diagonal_ones_probe(
    w: FramedWord, lambdas: Sequence[int], max_realize_n: int = 7
) -> DiagonalOnesReport:
    """Check the perturbed-inverse diagonal claim on one instance.

    For an all-framing-0 word with det(A + E) = 1 and a diagonal
    perturbation lambda keeping (A + E)^-1 + diag(lambda) invertible, the
    claim is that the new inverse has an all-ones diagonal; and when the
    word is a d-diagram and n is within the search bound, that the new
    off-diagonal is again realised by a d-diagram (verified by brute-force
    search, reported as unchecked beyond the bound).
    """
    from .symmat import realize

    n = w.n
    if any(f is not Framing.ZERO for f in w.framings.values()):
        raise PreconditionError("every chord must have framing 0")
    lambdas = list(lambdas)
    if len(lambdas) != n or any(v not in (0, 1) for v in lambdas):
        raise PreconditionError(f"lambda must be {n} bits")
    b = adjacency(w).with_bit_diag() + BitMatrix.identity(n)
    try:
        inv = b.inverse()
    except SingularError:
        raise PreconditionError("det(A + E) = 0") from None
    perturbed = BitMatrix(n, n, tuple(r ^ (v << i) for i, (r, v) in enumerate(zip(inv.rows, lambdas))))
    try:
        final = perturbed.inverse()
    except SingularError:
        raise PreconditionError("det((A + E)^-1 + diag(lambda)) = 0") from None
    diagonal_all_ones = all(final.entry(i, i) == 1 for i in range(n))
    input_is_d = is_d_diagram(w) is not None
    checked = False
    preserved: Optional[bool] = None
    realization: Optional[FramedWord] = None
    if input_is_d and n <= max_realize_n:
        checked = True
        target = FramedAdjacency(
            w.names,
            (Framing.ZERO,) * n,
            tuple(r & ~(1 << i) for i, r in enumerate(final.rows)),
        )
        realization = realize(target, max_n=max_realize_n)
        preserved = realization is not None and is_d_diagram(realization) is not None
    return DiagonalOnesReport(
        final=final,
        diagonal_all_ones=diagonal_all_ones,
        input_is_d_diagram=input_is_d,
        d_diagram_checked=checked,
        d_diagram_preserved=preserved,
        realization=realization,
    )
