"""Exception hierarchy shared across the package."""


class VbraidError(Exception):
    """Base class for all errors raised by this package."""


class WordSyntaxError(VbraidError):
    """Malformed word text; ``position`` is the 0-based offset of the bad token."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class IndexOutOfRangeError(WordSyntaxError):
    """Generator index outside 1..n-1."""


class LetterNotAllowedError(WordSyntaxError):
    """Letter kind not present in the requested flavor's alphabet."""


class InverseNotAllowedError(WordSyntaxError):
    """Inverse of a non-invertible monoid generator."""


class FlavorError(VbraidError):
    """Operation not defined for the word's flavor."""


class SizeMismatchError(VbraidError):
    """Strand counts or ranks disagree."""


class MonoidHasNoInversesError(FlavorError):
    """Inversion requested for a word in a monoid flavor."""


class DimensionMismatchError(VbraidError):
    """Matrix dimensions disagree."""


class NonUnitDeterminantError(VbraidError):
    """Matrix inverse requested but the determinant is not a unit."""


class GaussSyntaxError(VbraidError):
    """Malformed Gauss code text."""


class LabelCountError(GaussSyntaxError):
    """A crossing label does not appear exactly once as O and once as U."""


class NotAKnotError(VbraidError):
    """Braid closure has more than one component."""
