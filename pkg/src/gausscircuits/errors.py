"""Exception types shared across the package."""


class GaussCircuitsError(Exception):
    """Base class for all errors raised by this package."""


class FormatError(GaussCircuitsError):
    """Malformed word or matrix text."""


class WordSyntaxError(FormatError):
    """Word text does not match the grammar."""


class LetterCountError(FormatError):
    """A letter does not occur exactly twice."""


class MarkMismatchError(FormatError):
    """One occurrence of a letter is Gaussian and the other is not."""


class NonSquareError(GaussCircuitsError):
    """Operation requires a square matrix."""


class SingularError(GaussCircuitsError):
    """Matrix has no inverse over GF(2)."""


class IndexOutOfRangeError(GaussCircuitsError):
    """Row/column index outside the matrix."""


class UnknownLetterError(GaussCircuitsError):
    """Letter not present in the word."""


class NotInterlacedError(GaussCircuitsError):
    """The two letters do not alternate in the word."""


class UnknownVertexError(GaussCircuitsError):
    """Vertex index outside the graph."""


class InvalidTourError(GaussCircuitsError):
    """Sequence of half-edges is not an Euler tour of the graph."""


class TooLargeError(GaussCircuitsError):
    """Instance exceeds the configured enumeration bound."""


class NoGaussCircuitError(GaussCircuitsError):
    """The framed graph has no Gauss circuit."""


class HasGaussianChordError(GaussCircuitsError):
    """Operation requires a word free of Gaussian letters."""


class DiagonalNotOneError(GaussCircuitsError):
    """Local complementation requires a 1 on the chosen diagonal entry."""


class SizeMismatchError(GaussCircuitsError):
    """Matrices have different sizes."""


class NotSymPlusError(GaussCircuitsError):
    """Matrix A does not satisfy det(A + E) = 1."""


class PreconditionError(GaussCircuitsError):
    """A stated precondition does not hold; the message says which."""
