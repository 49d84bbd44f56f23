"""Exception types shared across the package."""


class UnsupportedRangeError(ValueError):
    """A size parameter exceeds the supported enumeration or search cap."""


class InconsistentEnumeratorError(ValueError):
    """A weight transform produced a negative or non-integer count.

    Raised when the input claimed to be the weight distribution of a
    linear code but the transform proves otherwise.
    """


class RecursionInconsistencyError(ArithmeticError):
    """The sparse-multiple counting recursion left a non-integer value."""


class TheoremViolationError(RuntimeError):
    """An exhaustive search failed to find a witness that is guaranteed
    to exist; indicates a bug, never an expected outcome."""
