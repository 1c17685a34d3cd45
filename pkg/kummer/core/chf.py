"""The module contains the series term algebra of Kummer's function
M(a, b, z) = sum over n of a^(n) z^n / (b^(n) n!), where x^(n) is the rising
factorial: the parameters, the ratio of consecutive terms, the log-magnitude of
any single term and Kummer's reflection for negative z.
"""

import math
import numbers
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
from scipy.special import gammaln

from kummer.core.constants import MAX_EXP_ARG, NEG_INF
from kummer.core.exceptions import InvalidParams, NotApplicable, PoleAtIndex

if TYPE_CHECKING:
    from typing_extensions import Self


def is_nonpositive_integer(x: float) -> bool:
    """Whether x is one of 0, -1, -2, ..."""

    return x <= 0 and x == math.floor(x)


@dataclass(frozen=True)
class ChfParams:
    """The class represents the parameters (a, b, z) of M(a, b, z)."""

    a: float
    b: float
    z: float

    def __post_init__(self: 'Self') -> None:
        for name in ('a', 'b', 'z'):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, numbers.Real):
                msg = f'{name} must be a real number, got {value!r}'
                raise InvalidParams(msg)

            if not math.isfinite(value):
                msg = f'{name} must be finite, got {value!r}'
                raise InvalidParams(msg)

            object.__setattr__(self, name, float(value))

        if is_nonpositive_integer(self.b):
            msg = f'b must not be zero or a negative integer, got {self.b!r}'
            raise InvalidParams(msg)

    @property
    def terminates(self: 'Self') -> bool:
        """Whether the series is a polynomial (a is a non-positive integer)."""

        return is_nonpositive_integer(self.a)


@dataclass(frozen=True)
class SignedLog:
    """The class represents a real number as its sign and the natural log
    of its magnitude, so that values far outside the floating-point range
    can be carried around. Zero is (0, -inf).
    """

    sign: int
    log_mag: float

    def __post_init__(self: 'Self') -> None:
        if self.sign not in (-1, 0, 1):
            msg = f'sign must be -1, 0 or 1, got {self.sign!r}'
            raise ValueError(msg)

        if self.sign == 0 and self.log_mag != NEG_INF:
            msg = 'the zero value must carry log_mag = -inf'
            raise ValueError(msg)

        if self.sign != 0 and not math.isfinite(self.log_mag):
            msg = f'log_mag must be finite for a nonzero value, got {self.log_mag!r}'
            raise ValueError(msg)

    @classmethod
    def zero(cls: type['Self']) -> 'Self':
        """Returns the representation of zero."""

        return cls(0, NEG_INF)

    @classmethod
    def one(cls: type['Self']) -> 'Self':
        """Returns the representation of one."""

        return cls(1, 0.0)

    @classmethod
    def from_float(cls: type['Self'], value: float) -> 'Self':
        """Returns the representation of a finite double."""

        if not math.isfinite(value):
            msg = f'cannot represent {value!r}'
            raise ValueError(msg)

        if value == 0:
            return cls.zero()

        return cls(1 if value > 0 else -1, math.log(abs(value)))

    @property
    def is_zero(self: 'Self') -> bool:
        """Whether the value is zero."""

        return self.sign == 0

    def __mul__(self: 'Self', other: 'SignedLog') -> 'SignedLog':
        if self.sign == 0 or other.sign == 0:
            return SignedLog.zero()

        return SignedLog(self.sign * other.sign, self.log_mag + other.log_mag)

    def __truediv__(self: 'Self', other: 'SignedLog') -> 'SignedLog':
        if other.sign == 0:
            msg = 'division by zero'
            raise ZeroDivisionError(msg)

        if self.sign == 0:
            return SignedLog.zero()

        return SignedLog(self.sign * other.sign, self.log_mag - other.log_mag)

    def to_float(self: 'Self') -> float:
        """Returns the value as a double, or a signed infinity when
        the magnitude is out of range.
        """

        if self.sign == 0:
            return 0.0

        if self.log_mag > MAX_EXP_ARG:
            return math.copysign(math.inf, self.sign)

        return self.sign * math.exp(self.log_mag)

    def __float__(self: 'Self') -> float:
        return self.to_float()


def term_ratio(params: ChfParams, n: int) -> float:
    """Returns the ratio m_(n+1) / m_n = (a + n) / (b + n) * z / (n + 1)."""

    if params.b + n == 0:
        msg = f'b + n = 0 at n = {n}'
        raise PoleAtIndex(msg)

    return (params.a + n) / (params.b + n) * params.z / (n + 1)


def log_term(params: ChfParams, n: int) -> SignedLog:
    """Returns the sign and the log-magnitude of the n-th term
    m_n = a^(n) z^n / (b^(n) n!).
    """

    if n < 0:
        msg = f'n must be nonnegative, got {n}'
        raise ValueError(msg)

    if n == 0:
        return SignedLog.one()

    a, b, z = params.a, params.b, params.z
    if (params.terminates and n > -a) or z == 0:
        return SignedLog.zero()

    if a > 0 and b > 0:
        sign = -1 if z < 0 and n % 2 else 1
        log_mag = (
            float(gammaln(a + n)) - float(gammaln(a))
            - float(gammaln(b + n)) + float(gammaln(b))
            + n * math.log(abs(z)) - float(gammaln(n + 1))
        )
        return SignedLog(sign, log_mag)

    return _log_term_by_product(params, n)


def _log_term_by_product(params: ChfParams, n: int) -> SignedLog:
    """Computes the term as a sign-tracked sum of the logs of its factors,
    which works for any sign of the parameters.
    """

    i = np.arange(n, dtype=np.float64)
    numerators = params.a + i
    denominators = params.b + i
    if not np.all(denominators):
        index = int(np.flatnonzero(denominators == 0)[0])
        msg = f'b + n = 0 at n = {index}'
        raise PoleAtIndex(msg)

    negatives = int(np.count_nonzero(numerators < 0) + np.count_nonzero(denominators < 0))
    if params.z < 0:
        negatives += n

    log_mag = float(
        np.sum(np.log(np.abs(numerators)))
        - np.sum(np.log(np.abs(denominators)))
        - np.sum(np.log1p(i)),
    ) + n * math.log(abs(params.z))

    return SignedLog(-1 if negatives % 2 else 1, log_mag)


def reflect_params(params: ChfParams) -> ChfParams:
    """Returns the parameters (b - a, b, -z) of Kummer's transformation.
    The mapping is an involution.
    """

    return ChfParams(params.b - params.a, params.b, -params.z)


def kummer_reflect(params: ChfParams) -> tuple[ChfParams, SignedLog]:
    """Applies Kummer's transformation M(a, b, z) = e^z M(b - a, b, -z) to
    parameters with z < 0, returning the new parameters and the scale e^z.
    """

    if params.z >= 0:
        msg = f'Kummer reflection is applied to z < 0 only, got z = {params.z!r}'
        raise NotApplicable(msg)

    return reflect_params(params), SignedLog(1, params.z)
