"""Framed 4-valent graphs, Euler tours, and traversal oracles.

Half-edges are darts ``4*vertex + slot`` with slots 0..3; the opposite
pairs at a vertex are {0,2} and {1,3}, so the opposite dart is ``d ^ 2``.
A tour is the cyclic sequence of departing darts; the visit at step i
enters through the mate of the previous dart and leaves through dart i.

The visit (in, out) slot pairs encode the framing of a vertex relative to
the tour: passing to the opposite slot is Gaussian; otherwise each visit
uses one slot of each opposite pair, and the vertex has framing 1 when an
opposite pair carries one incoming and one outgoing half-edge, framing 0
when it carries two of the same kind.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Optional

from .errors import (
    FormatError,
    InvalidTourError,
    TooLargeError,
    UnknownVertexError,
)
from .words import Framing, FramedWord, _MARKS_FOR_FRAMING

# (in, out) slots for the first and second visit, per framing.
_SLOT_PLANS = {
    Framing.GAUSS: ((0, 2), (1, 3)),
    Framing.ZERO: ((0, 1), (2, 3)),
    Framing.ONE: ((0, 1), (3, 2)),
}

# The three ways to pair the four slots into two transitions.
_TRANSITIONS = (
    (1, 0, 3, 2),  # {0,1} {2,3}
    (2, 3, 0, 1),  # {0,2} {1,3}
    (3, 2, 1, 0),  # {0,3} {1,2}
)


@dataclass(frozen=True)
class FramedGraph:
    """4-valent graph with opposite-pair structure, as a dart matching."""

    labels: tuple[str, ...]
    mate: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.labels)
        if len(self.mate) != 4 * n:
            raise FormatError("mate table must cover 4 darts per vertex")
        if len(set(self.labels)) != n:
            raise FormatError("duplicate vertex labels")
        for d, m in enumerate(self.mate):
            if not 0 <= m < 4 * n or m == d or self.mate[m] != d:
                raise FormatError("mate table is not a fixed-point-free involution")
        if n and not self._connected():
            raise FormatError("framed graph must be connected")

    def _connected(self) -> bool:
        n = len(self.labels)
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for s in range(4):
                w = self.mate[4 * v + s] >> 2
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == n

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    @property
    def n_edges(self) -> int:
        return 2 * len(self.labels)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as dart pairs (d, mate[d]) with d < mate[d]."""
        return [(d, m) for d, m in enumerate(self.mate) if d < m]


@dataclass(frozen=True, eq=False)
class EulerTour:
    """Closed edge traversal as a cyclic tuple of departing darts."""

    graph: FramedGraph
    darts: tuple[int, ...]

    @cached_property
    def canonical_darts(self) -> tuple[int, ...]:
        """Minimal rotation over both traversal directions."""
        if not self.darts:
            return ()
        mate = self.graph.mate
        candidates = []
        for seq in (self.darts, tuple(mate[d] for d in reversed(self.darts))):
            for r in range(len(seq)):
                candidates.append(seq[r:] + seq[:r])
        return min(candidates)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EulerTour):
            return NotImplemented
        return self.graph == other.graph and self.canonical_darts == other.canonical_darts

    def __hash__(self) -> int:
        return hash(self.canonical_darts)

    def visit_slots(self) -> dict[int, list[tuple[int, int]]]:
        """Per vertex, the (in, out) slot pairs in tour order."""
        mate = self.graph.mate
        out: dict[int, list[tuple[int, int]]] = {}
        for i, d in enumerate(self.darts):
            arrival = mate[self.darts[i - 1]]
            out.setdefault(d >> 2, []).append((arrival & 3, d & 3))
        return out

    def vertex_framings(self) -> dict[int, Framing]:
        return {v: _visit_framing(pairs) for v, pairs in self.visit_slots().items()}


def _visit_framing(pairs: list[tuple[int, int]]) -> Framing:
    (in1, out1), (in2, out2) = pairs
    if out1 == in1 ^ 2:
        return Framing.GAUSS
    ins_in_pair = (in1 in (0, 2)) + (in2 in (0, 2))
    return Framing.ONE if ins_in_pair == 1 else Framing.ZERO


def from_word(w: FramedWord) -> tuple[FramedGraph, EulerTour]:
    """Framed graph plus a tour on it whose word is w."""
    names = w.names
    index = {name: i for i, name in enumerate(names)}
    m = len(w.letters)
    mate = [-1] * (4 * len(names))
    visits = []
    count: dict[str, int] = {}
    for name, _ in w.letters:
        k = count.get(name, 0)
        count[name] = k + 1
        in_s, out_s = _SLOT_PLANS[w.framings[name]][k]
        visits.append((index[name], in_s, out_s))
    darts = []
    for p in range(m):
        v, _, out_s = visits[p]
        v2, in_s2, _ = visits[(p + 1) % m]
        d1, d2 = 4 * v + out_s, 4 * v2 + in_s2
        mate[d1], mate[d2] = d2, d1
        darts.append(d1)
    g = FramedGraph(names, tuple(mate))
    return g, EulerTour(g, tuple(darts))


def _check_tour(g: FramedGraph, t: EulerTour) -> None:
    if t.graph != g:
        raise InvalidTourError("tour belongs to a different graph")
    m = len(t.darts)
    if m != g.n_edges:
        raise InvalidTourError("tour does not traverse every edge once")
    edges = set()
    for i, d in enumerate(t.darts):
        if (d >> 2) != (g.mate[t.darts[i - 1]] >> 2):
            raise InvalidTourError("consecutive darts do not meet at a vertex")
        edges.add(min(d, g.mate[d]))
    if len(edges) != m:
        raise InvalidTourError("an edge is traversed twice")


def tour_word(g: FramedGraph, t: EulerTour) -> FramedWord:
    """Framed word of a tour: vertices in visit order, marks by framing."""
    _check_tour(g, t)
    if not t.darts:
        return FramedWord(())
    framings = t.vertex_framings()
    count: dict[int, int] = {}
    letters = []
    for d in t.darts:
        v = d >> 2
        k = count.get(v, 0)
        count[v] = k + 1
        letters.append((g.labels[v], _MARKS_FOR_FRAMING[framings[v]][k]))
    return FramedWord(tuple(letters))


def k_transform(g: FramedGraph, t: EulerTour, v: int) -> EulerTour:
    """The unique other tour re-joining the two closed paths at vertex v.

    Reverses the traversal segment between the two visits of v; at word
    level this is the framed star at v.
    """
    if not 0 <= v < g.n_vertices:
        raise UnknownVertexError(f"vertex {v} outside 0..{g.n_vertices - 1}")
    steps = [i for i, d in enumerate(t.darts) if d >> 2 == v]
    rot = t.darts[steps[0] :] + t.darts[: steps[0]]
    j = steps[1] - steps[0]
    reversed_segment = tuple(g.mate[d] for d in reversed(rot[:j]))
    return EulerTour(g, reversed_segment + rot[j:])


def all_euler_tours(g: FramedGraph, max_vertices: int = 10) -> set[EulerTour]:
    """Every Euler tour of g, one per single-curve transition system."""
    n = g.n_vertices
    if n > max_vertices:
        raise TooLargeError(f"{n} vertices exceeds the bound {max_vertices}")
    if n == 0:
        return {EulerTour(g, ())}
    tours = set()
    for assignment in product(range(3), repeat=n):
        seq = _trace(g, assignment)
        if seq is not None:
            tours.add(EulerTour(g, seq))
    return tours


def _trace(g: FramedGraph, assignment: tuple[int, ...]) -> Optional[tuple[int, ...]]:
    """Walk the transition system from dart 0; return the dart sequence if
    it is a single curve covering every edge once."""
    mate = g.mate
    want = g.n_edges
    seq = []
    d = 0
    while True:
        seq.append(d)
        h = mate[d]
        d = (h & ~3) | _TRANSITIONS[assignment[h >> 2]][h & 3]
        if d == 0:
            break
        if len(seq) > want:
            return None
    if len(seq) != want:
        return None
    if len({min(d, mate[d]) for d in seq}) != want:
        return None
    return tuple(seq)


def some_euler_tour(g: FramedGraph) -> EulerTour:
    """A deterministic Euler tour (always exists: connected, all degrees 4)."""
    n = g.n_vertices
    if n == 0:
        return EulerTour(g, ())
    mate = g.mate
    used = [False] * (4 * n)

    def closed_walk(v: int) -> list[int]:
        walk = []
        while True:
            for s in range(4):
                d = 4 * v + s
                if not used[d]:
                    used[d] = used[mate[d]] = True
                    walk.append(d)
                    v = mate[d] >> 2
                    break
            else:
                return walk

    tour = closed_walk(0)
    i = 0
    while i < len(tour):
        sub = closed_walk(tour[i] >> 2)
        if sub:
            tour[i:i] = sub
        else:
            i += 1
    return EulerTour(g, tuple(tour))


def rotating_circuit(g: FramedGraph) -> EulerTour:
    """A tour with no Gaussian vertex.

    Starting from any tour, re-routing at a Gaussian vertex turns it into a
    framing-0 vertex and never creates new Gaussian ones, so repeatedly
    transforming at the smallest Gaussian vertex terminates.
    """
    t = some_euler_tour(g)
    while True:
        gaussian = [v for v, f in t.vertex_framings().items() if f is Framing.GAUSS]
        if not gaussian:
            return t
        t = k_transform(g, t, min(gaussian))


def gauss_traverse(g: FramedGraph) -> Optional[EulerTour]:
    """Walk always exiting through the opposite slot.

    Returns the closed walk if it covers every edge exactly once (it is then
    the unique Gauss circuit), otherwise None.  Independent of the formula
    machinery, hence usable as its oracle.
    """
    if g.n_vertices == 0:
        return EulerTour(g, ())
    mate = g.mate
    want = g.n_edges
    seq = []
    d = 0
    while True:
        seq.append(d)
        d = mate[d] ^ 2
        if d == 0:
            break
        if len(seq) > want:
            return None
    if len(seq) != want:
        return None
    if len({min(d, mate[d]) for d in seq}) != want:
        return None
    return EulerTour(g, tuple(seq))


_MODES = ("any", "gaussian_only", "rotating_only")


def random_word(n: int, seed: int, mode: str = "any") -> FramedWord:
    """Seeded random double-occurrence word on n letters.

    ``gaussian_only`` makes every letter Gaussian (the word is then its own
    Gauss circuit); ``rotating_only`` draws framings from {0, 1} only.
    """
    if mode not in _MODES:
        raise ValueError(f"mode must be one of {_MODES}")
    rng = random.Random(seed)
    pattern = [i for i in range(n) for _ in range(2)]
    rng.shuffle(pattern)
    if mode == "gaussian_only":
        framings = [Framing.GAUSS] * n
    elif mode == "rotating_only":
        framings = [rng.choice((Framing.ZERO, Framing.ONE)) for _ in range(n)]
    else:
        framings = [rng.choice(tuple(Framing)) for _ in range(n)]
    count: dict[int, int] = {}
    letters = []
    for i in pattern:
        k = count.get(i, 0)
        count[i] = k + 1
        letters.append((f"v{i + 1}", _MARKS_FOR_FRAMING[framings[i]][k]))
    return FramedWord(tuple(letters))


def natural_key(name: str) -> tuple:
    """Sort key treating digit runs numerically: v2 < v10."""
    return tuple(int(t) if t.isdigit() else t for t in re.split(r"(\d+)", name))
