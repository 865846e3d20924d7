"""Gauss circuits of framed 4-valent graphs via GF(2) linear algebra.

The package works on three interchangeable views of the same object:
framed double-occurrence cyclic words, framed chord diagrams (their
adjacency matrices), and framed 4-valent graphs with Euler tours.  It
decides Gauss-circuit existence, produces the Gauss circuit both by
matrix inversion and by direct traversal, simulates surgery, and carries
the local-complementation/pivot calculus on symmetric GF(2) matrices.
"""

from .circuits import (
    DiagonalOnesReport,
    GaussResult,
    diagonal_ones_probe,
    gauss_corank,
    gauss_exists,
    gauss_matrix,
    gauss_word,
    is_d_diagram,
    surgery_components,
    to_rotating,
)
from .gf2 import BACKEND, BitMatrix
from .graphs import (
    EulerTour,
    FramedGraph,
    all_euler_tours,
    from_word,
    gauss_traverse,
    k_transform,
    random_word,
    rotating_circuit,
    some_euler_tour,
    tour_word,
)
from .symmat import (
    CircuitClass,
    DiagClass,
    SymMatrix,
    chi,
    chi_inverse,
    det_one_representative,
    equal_up_to_diag,
    in_sym_plus,
    loc,
    loc_unchecked,
    orbit,
    pivot,
    realize,
)
from .words import (
    FramedAdjacency,
    FramedWord,
    Framing,
    Mark,
    adjacency,
    canonical,
    framed_star,
    interlaced,
    mirror_bar,
    parse,
    rotate,
    star_pivot,
    to_text,
)

__version__ = "0.1.0"
