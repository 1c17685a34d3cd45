"""The module contains error-free floating-point transformations and the
compensated accumulators built on them: a running two-term sum, a pairwise
sum of arrays for the series engine and a double-double number for
the reference oracle.
"""

import math
from typing import TYPE_CHECKING, NamedTuple

import numpy as np

if TYPE_CHECKING:
    from collections.abc import Iterable

    from typing_extensions import Self

_SPLITTER = 134217729.0  # 2**27 + 1

_HAS_FMA = hasattr(math, 'fma')


def two_sum(a: float, b: float) -> tuple[float, float]:
    """Returns (s, err) such that s + err == a + b exactly."""

    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def quick_two_sum(a: float, b: float) -> tuple[float, float]:
    """The same as two_sum, assuming |a| >= |b|."""

    s = a + b
    return s, b - (s - a)


def _split(a: float) -> tuple[float, float]:
    """Dekker split of a into two halves of at most 26 significant bits."""

    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def two_prod(a: float, b: float) -> tuple[float, float]:
    """Returns (p, err) such that p + err == a * b exactly."""

    p = a * b
    if _HAS_FMA:
        return p, math.fma(a, b, -p)  # type: ignore[attr-defined]

    a_hi, a_lo = _split(a)
    b_hi, b_lo = _split(b)
    err = ((a_hi * b_hi - p) + a_hi * b_lo + a_lo * b_hi) + a_lo * b_lo
    return p, err


class DoubleDouble(NamedTuple):
    """An unevaluated sum hi + lo of two doubles with |lo| <= ulp(hi) / 2,
    giving about 32 significant decimal digits.
    """

    hi: float
    lo: float = 0.0

    @classmethod
    def of(cls: type['Self'], value: 'float | DoubleDouble') -> 'DoubleDouble':
        """Promotes a double to a double-double."""

        if isinstance(value, DoubleDouble):
            return value

        return cls(float(value), 0.0)

    def __add__(self: 'Self', other: 'float | DoubleDouble') -> 'DoubleDouble':  # type: ignore[override]
        other = DoubleDouble.of(other)
        s, e = two_sum(self.hi, other.hi)
        t, f = two_sum(self.lo, other.lo)
        e += t
        s, e = quick_two_sum(s, e)
        e += f
        return DoubleDouble(*quick_two_sum(s, e))

    __radd__ = __add__

    def __neg__(self: 'Self') -> 'DoubleDouble':
        return DoubleDouble(-self.hi, -self.lo)

    def __sub__(self: 'Self', other: 'float | DoubleDouble') -> 'DoubleDouble':
        return self + (-DoubleDouble.of(other))

    def __mul__(self: 'Self', other: 'float | DoubleDouble') -> 'DoubleDouble':  # type: ignore[override]
        other = DoubleDouble.of(other)
        p, e = two_prod(self.hi, other.hi)
        e += self.hi * other.lo + self.lo * other.hi
        return DoubleDouble(*quick_two_sum(p, e))

    __rmul__ = __mul__

    def __truediv__(self: 'Self', other: 'float | DoubleDouble') -> 'DoubleDouble':
        other = DoubleDouble.of(other)
        q1 = self.hi / other.hi
        r = self - other * q1
        q2 = r.hi / other.hi
        r = r - other * q2
        q3 = r.hi / other.hi
        return DoubleDouble(*quick_two_sum(q1, q2)) + q3

    def __abs__(self: 'Self') -> 'DoubleDouble':
        return -self if self.hi < 0 else self

    def __float__(self: 'Self') -> float:
        return self.hi + self.lo

    def log(self: 'Self') -> float:
        """Returns the natural log of the (positive) value."""

        return math.log(self.hi) + math.log1p(self.lo / self.hi)


class CompensatedSum:
    """A running sum that carries the rounding error of every addition
    in a second word, like math.fsum but incremental.
    """

    __slots__ = ('_s', '_t')

    def __init__(self: 'Self', values: 'Iterable[float]' = ()) -> None:
        self._s = 0.0
        self._t = 0.0
        for value in values:
            self.add(value)

    def add(self: 'Self', value: float) -> None:
        """Adds the value to the sum."""

        s, err = two_sum(self._s, value)
        self._s = s
        self._t += err

    @property
    def value(self: 'Self') -> float:
        """The rounded sum."""

        return self._s + self._t

    def __float__(self: 'Self') -> float:
        return self.value

    def __repr__(self: 'Self') -> str:
        return f'<{self.__class__.__name__} {self.value!r}>'


def compensated_array_sum(values: 'np.ndarray') -> float:
    """Sums the array pairwise, collecting the rounding error of every
    addition by the two_sum transformation. The result is about as accurate
    as a sum carried in twice the working precision.
    """

    level = np.asarray(values, dtype=np.float64)
    if level.size == 0:
        return 0.0

    errors: list[np.ndarray] = []
    while level.size > 1:
        if level.size % 2:
            level = np.append(level, 0.0)

        a, b = level[0::2], level[1::2]
        s = a + b
        bb = s - a
        errors.append((a - (s - bb)) + (b - bb))
        level = s

    if not errors:
        return float(level[0])

    return float(level[0] + np.sum(np.concatenate(errors)))
