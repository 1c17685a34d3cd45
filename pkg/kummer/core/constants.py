"""The module contains the constants used in the core."""

import math
from enum import Enum, auto
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing_extensions import Self

# The largest argument math.exp accepts without overflowing.
MAX_EXP_ARG = math.log(1.7976931348623157e308)

NEG_INF = -math.inf


class TaylorVariant(Enum):
    """The class enumerates the Taylor polynomials used to estimate
    the half-widths of the region of interest. The '.5' variants keep
    only half of the final term.
    """

    T1_5 = 't1.5'
    T2 = 't2'
    T2_5 = 't2.5'
    T3 = 't3'

    @classmethod
    def parse(cls: type['Self'], name: 'str | TaylorVariant') -> 'TaylorVariant':
        """Returns the variant designated by the name, ignoring the case."""

        if isinstance(name, TaylorVariant):
            return name

        try:
            return cls(name.strip().lower())
        except ValueError as exc:
            names = ', '.join(variant.value for variant in cls)
            msg = f"Unknown Taylor variant '{name}' (expected one of {names})"
            raise ValueError(msg) from exc

    @property
    def is_cubic(self: 'Self') -> bool:
        """Whether the polynomial of the variant has a cubic term."""

        return self in (TaylorVariant.T2_5, TaylorVariant.T3)

    @property
    def quadratic_factor(self: 'Self') -> float:
        """The factor applied to the quadratic coefficient."""

        return 0.5 if self is TaylorVariant.T1_5 else 1.0

    @property
    def cubic_factor(self: 'Self') -> float:
        """The factor applied to the cubic coefficient."""

        if self is TaylorVariant.T2_5:
            return 0.5

        return 1.0 if self is TaylorVariant.T3 else 0.0


class Direction(Enum):
    """The class enumerates the directions away from the mode."""

    UPPER = 'upper'
    LOWER = 'lower'


class Method(Enum):
    """The class enumerates the summation methods."""

    ROI = auto()
    INCREMENT_CHECK = auto()
