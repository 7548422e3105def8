"""Errors raised while building and querying semigroups."""


class SemigroupError(ValueError):
    """Base class for every error raised by :mod:`semigrouplib`."""


class ZeroVector(SemigroupError):
    """Raised when the zero vector is given where a nonzero one is required."""


class DimensionMismatch(SemigroupError):
    """Raised when a point does not live in the ambient space of the rays."""


class InvalidRays(SemigroupError):
    """Raised when rays are negative, not primitive, or linearly dependent."""


class LimitExceeded(SemigroupError):
    """Raised when an enumeration would exceed its configured budget.

    Attributes
    ----------
    size : int
        The size of the enumeration that was refused.
    budget : int
        The budget that it exceeded.

    """

    def __init__(self, what: str, size: int, budget: int):
        self.what = what
        self.size = size
        self.budget = budget
        super().__init__(f"{what} has size {size}, which exceeds the budget of {budget}.")

    def __reduce__(self):
        # worker processes send exceptions back pickled
        return (self.__class__, (self.what, self.size, self.budget))


class NotInOmega(SemigroupError):
    """Raised when an element is required to lie in the interior of the cone."""


class Inapplicable(SemigroupError):
    """Raised when a criterion is asked about a model outside its hypotheses."""


class MalformedDocument(SemigroupError):
    """Raised when an input or report document cannot be understood."""
