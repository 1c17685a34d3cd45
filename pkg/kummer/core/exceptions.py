"""The module contains the global Kummer exception classes."""

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing_extensions import Self


class ImproperlyConfigured(Exception):
    """Raised when Kummer is somehow improperly configured."""


class InvalidInput(ValueError):
    """The base class for the errors caused by invalid arguments."""


class InvalidParams(InvalidInput):
    """Raised when the parameters of a function are outside its domain
    (e.g., b is zero or a negative integer, or a value is not finite).
    """


class EpsilonOutOfRange(InvalidInput):
    """Raised when the requested precision is not in the open interval (0, 1)."""


class NumericFailure(Exception):
    """The base class for the failures of the numerical methods."""


class PoleAtIndex(NumericFailure):
    """Raised when a series term hits the pole b + n = 0."""


class NotApplicable(NumericFailure):
    """Raised when a transformation is requested for parameters
    it does not apply to.
    """


class NoPositiveRoot(NumericFailure):
    """Raised when the mode quadratic has no positive root, so the terms
    decrease from n = 0 and there is no region of interest to locate.
    """


class NegativeDiscriminant(NoPositiveRoot):
    """Raised when the mode quadratic has no real roots at all."""


class ModeTooSmall(NumericFailure):
    """Raised when the mode is too close to zero to expand
    the log-ratio around it in the lower direction.
    """


class PrecisionBelowMinimum(NumericFailure):
    """Raised when the requested precision is smaller than the smallest
    precision a cubic Taylor variant can estimate.
    """

    def __init__(self: 'Self', msg: str, log_eps_min: float) -> None:
        super().__init__(msg)
        self.log_eps_min = log_eps_min


class InvalidBounds(NumericFailure):
    """Raised when a region of interest does not fit the parameters it is
    applied to.
    """


class NoConvergence(NumericFailure):
    """Raised when a summation does not converge within the allowed
    number of terms.
    """


class SeriesOverflow(NumericFailure):
    """Raised when a term or a partial sum exceeds the floating-point range."""


class CatastrophicCancellation(NumericFailure):
    """Raised when terms of opposite signs cancel so much that the rounding
    errors of the largest term exceed the requested precision of the sum.
    """
