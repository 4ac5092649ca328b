"""Exception types shared across the package."""


class ALPVError(Exception):
    """Base class for every domain error raised by this package."""


class InvalidMatrix(ALPVError):
    """A matrix argument is malformed (wrong ndim, non-finite entries)."""


class NonFiniteEntry(InvalidMatrix):
    """NaN or Inf where a finite value is required."""


class DimensionMismatch(ALPVError):
    """Shapes of matrices, vectors or sequences do not line up."""


class InvalidAlphabet(ALPVError):
    """The scheduling alphabet size D must be a positive integer."""


class InvalidWord(ALPVError):
    """A word contains symbols outside 1..D."""


class WordTooShort(ALPVError):
    """Kernel coefficients are defined only for words of length >= 2."""


class HorizonExceeded(ALPVError):
    """A lookup needs kernel values beyond the stored horizon."""


class ShapeMismatch(ALPVError):
    """A Hankel block matrix has the wrong bounds for the requested step."""


class NotIsomorphic(ALPVError):
    """No state-space isomorphism links the two systems within tolerance."""


class MissingVariable(ALPVError):
    """A polynomial evaluation lacks a value for one of its variables."""


class TrajectoryTooShort(ALPVError):
    """Equation residuals need strictly more steps than the equation order."""


class OutputDimNotScalar(ALPVError):
    """Input-output equation checking is restricted to single-output maps."""


class ZeroLeadingCoefficient(ALPVError):
    """The coefficient of the current output must not be the zero polynomial."""
