"""The module contains the solver that locates the region of interest (RoI)
of the series: the index of the largest term and the window [n_lower, n_upper]
outside of which every term is below eps times the largest one.

The half-widths of the window come from Taylor polynomials of the log-ratio
log(m_(mode+k) / m_mode) around the mode. With C2 and C3 the coefficients of
k^2 and k^3, the four variants are

    T1.5: (C2 / 2) k^2
    T2:   C2 k^2
    T2.5: C2 k^2 + (C3 / 2) k^3
    T3:   C2 k^2 + C3 k^3

and a half-width is the root of polynomial(k) = log(eps).
"""

import logging
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

from kummer.core.chf import ChfParams, term_ratio
from kummer.core.constants import NEG_INF, Direction, TaylorVariant
from kummer.core.exceptions import (
    EpsilonOutOfRange,
    ModeTooSmall,
    NegativeDiscriminant,
    NoPositiveRoot,
    NotApplicable,
    PrecisionBelowMinimum,
)
from kummer.utils.cubic import root_in_interval

if TYPE_CHECKING:
    from typing_extensions import Self

LOGGER = logging.getLogger(__name__)

_MAX_BRACKETING_SHIFT = 64


@dataclass(frozen=True)
class ModeResult:
    """The class represents the mode of the series terms: the real root of
    n^2 + (b + 1 - z) n + (b - a z) = 0 and the integer index of the
    largest term.
    """

    root_real: float
    n_mode: int
    discriminant: float
    # The smaller root when both roots are positive; the terms then have
    # a second, local maximum at n = 0.
    secondary_root: float | None = None

    @property
    def unimodal(self: 'Self') -> bool:
        """Whether the terms increase from n = 0 up to the mode."""

        return self.secondary_root is None


@dataclass(frozen=True)
class TaylorCoeffs:
    """The class represents the coefficients of k^2 and k^3 in the Taylor
    polynomials of the log-ratio, for both directions away from the mode.
    """

    c2_upper: float
    c3_upper: float
    c2_lower: float
    c3_lower: float

    def raw(self: 'Self', direction: Direction) -> tuple[float, float]:
        """Returns (C2, C3) for the direction."""

        if direction is Direction.UPPER:
            return self.c2_upper, self.c3_upper

        return self.c2_lower, self.c3_lower

    def effective(
        self: 'Self',
        direction: Direction,
        variant: TaylorVariant,
    ) -> tuple[float, float]:
        """Returns the coefficients of the polynomial of the variant."""

        c2, c3 = self.raw(direction)
        return c2 * variant.quadratic_factor, c3 * variant.cubic_factor


@dataclass(frozen=True)
class RoiBounds:
    """The class represents the region of interest of the series."""

    n_lower: int
    n_upper: int
    mode: ModeResult
    k_lower: float
    k_upper: float
    variant: TaylorVariant
    target_log_eps: float
    # Set when the estimated lower edge falls at or below sign_floor, below
    # which the terms may change sign; the window is cut at sign_floor.
    clamped: bool = False
    sign_floor: int = 0

    @property
    def term_count(self: 'Self') -> int:
        """The number of terms the RoI saves to sum, n_upper - n_lower."""

        return self.n_upper - self.n_lower


def sign_floor(params: ChfParams) -> int:
    """Returns the smallest index from which all the terms share one sign."""

    return max(0, math.ceil(-params.a), math.ceil(-params.b))


def solve_mode(params: ChfParams) -> ModeResult:
    """Locates the largest term of the series as the positive root of
    n^2 + (b + 1 - z) n + (b - a z) = 0 (where the term ratio equals one),
    then adjusts the integer index until term_ratio(n_mode - 1) >= 1 >=
    term_ratio(n_mode).
    """

    if params.z <= 0:
        msg = f'the mode is located for z > 0 only, got z = {params.z!r}'
        raise NotApplicable(msg)

    a, b, z = params.a, params.b, params.z
    p = z - 1 - b
    q = b - a * z
    discriminant = p * p - 4 * q
    if discriminant < 0:
        msg = f'the mode quadratic of {params} has a negative discriminant'
        raise NegativeDiscriminant(msg)

    s = math.sqrt(discriminant)
    root = (p + s) / 2 if p >= 0 else -2 * q / (s - p)
    if not root > 0:
        msg = f'the mode quadratic of {params} has no positive root'
        raise NoPositiveRoot(msg)

    secondary = q / root if q > 0 else None
    n_mode = _bracket_mode(params, math.floor(root) + 1)

    return ModeResult(root, n_mode, discriminant, secondary)


def _bracket_mode(params: ChfParams, n_mode: int) -> int:
    """Shifts the integer mode by a few steps if rounding broke
    the bracketing of the unit term ratio.
    """

    lowest = max(1, sign_floor(params) + 1)
    for _ in range(_MAX_BRACKETING_SHIFT):
        if n_mode > lowest and term_ratio(params, n_mode - 1) < 1:
            n_mode -= 1
        elif term_ratio(params, n_mode) > 1:
            n_mode += 1
        else:
            return n_mode

    msg = f'failed to bracket the mode of {params}'
    raise NoPositiveRoot(msg)


def taylor_coefficients(params: ChfParams, mode: ModeResult) -> TaylorCoeffs:
    """Returns the quadratic and cubic Taylor coefficients of the log-ratio
    in both directions, evaluated at the real root of the mode quadratic.
    """

    n = mode.root_real
    if n <= 1:
        msg = f'the mode {n!r} is too small to expand the lower direction'
        raise ModeTooSmall(msg)

    a_term, b_term = 1 / (params.a + n), 1 / (params.b + n)
    up_term, low_term = 1 / (n + 1), 1 / (n - 1)

    return TaylorCoeffs(
        c2_upper=0.5 * (a_term - b_term - up_term),
        c3_upper=-(a_term ** 2 - b_term ** 2 - up_term ** 2) / 6,
        c2_lower=0.5 * (a_term - b_term - low_term),
        c3_lower=(a_term ** 2 - b_term ** 2 - low_term ** 2) / 6,
    )


def epsilon_min(
    coeffs: TaylorCoeffs,
    direction: Direction,
    variant: TaylorVariant = TaylorVariant.T3,
) -> float:
    """Returns log(eps_min) = 4 C2^3 / (27 C3^2), the value of the variant's
    polynomial at its local minimum k = -2 C2 / (3 C3). It is -inf when the
    polynomial has no minimum for k > 0 (any precision is reachable) and 0
    when it does not decrease from k = 0 at all.
    """

    c2, c3 = coeffs.effective(direction, variant)
    if c2 >= 0 and c3 >= 0:
        return 0.0

    if c3 <= 0:
        return NEG_INF

    return 4 * c2 ** 3 / (27 * c3 ** 2)


def predicted_log_precision(
    coeffs: TaylorCoeffs,
    k: float,
    variant: TaylorVariant,
    direction: Direction,
) -> float:
    """Returns the log-precision the variant predicts at half-width k."""

    c2, c3 = coeffs.effective(direction, variant)
    return c2 * k * k + c3 * k * k * k


def half_width(
    coeffs: TaylorCoeffs,
    log_eps: float,
    variant: TaylorVariant,
    direction: Direction,
) -> float:
    """Returns the half-width k at which the variant's polynomial
    reaches log_eps. For a cubic with C3 > 0 it is the root lying in
    (0, -2 C2 / (3 C3)).
    """

    if not log_eps < 0:
        msg = f'log_eps must be negative, got {log_eps!r}'
        raise EpsilonOutOfRange(msg)

    c2, c3 = coeffs.effective(direction, variant)
    if c2 >= 0:
        msg = (
            f'the {variant.value} polynomial does not decrease away from the mode '
            f'({direction.value} direction)'
        )
        raise PrecisionBelowMinimum(msg, 0.0)

    quadratic_root = math.sqrt(log_eps / c2)
    if c3 == 0:
        return quadratic_root

    if c3 > 0:
        upper = -2 * c2 / (3 * c3)
        log_eps_min = 4 * c2 ** 3 / (27 * c3 ** 2)
        if log_eps < log_eps_min:
            msg = (
                f'eps = {math.exp(log_eps):.3e} is below eps_min = {math.exp(log_eps_min):.3e} '
                f'of {variant.value} ({direction.value} direction); '
                f'retry with t2 or t1.5'
            )
            raise PrecisionBelowMinimum(msg, log_eps_min)
    else:
        # A negative cubic term reaches log_eps before the quadratic does.
        upper = quadratic_root

    root = root_in_interval((c3, c2, 0.0, -log_eps), 0.0, upper)
    if root is None:
        msg = f'no {variant.value} root in (0, {upper:.6g}] ({direction.value} direction)'
        raise PrecisionBelowMinimum(msg, epsilon_min(coeffs, direction, variant))

    return root


def roi_bounds(params: ChfParams, eps: float, variant: TaylorVariant) -> RoiBounds:
    """Computes the region of interest for the precision eps: the mode, then
    n_lower = floor(root - k_lower) and n_upper = ceil(root + k_upper).
    """

    if not 0 < eps < 1:
        msg = f'eps must be in (0, 1), got {eps!r}'
        raise EpsilonOutOfRange(msg)

    mode = solve_mode(params)
    coeffs = taylor_coefficients(params, mode)
    log_eps = math.log(eps)

    k_upper = half_width(coeffs, log_eps, variant, Direction.UPPER)
    k_lower = half_width(coeffs, log_eps, variant, Direction.LOWER)

    floor = sign_floor(params)
    raw_lower = math.floor(mode.root_real - k_lower)
    n_lower = min(max(raw_lower, floor), mode.n_mode)
    n_upper = max(math.ceil(mode.root_real + k_upper), mode.n_mode)

    return RoiBounds(
        n_lower=n_lower,
        n_upper=n_upper,
        mode=mode,
        k_lower=k_lower,
        k_upper=k_upper,
        variant=variant,
        target_log_eps=log_eps,
        clamped=raw_lower <= floor,
        sign_floor=floor,
    )


def applicability_issue(params: ChfParams, min_z: float) -> str | None:
    """Returns why the RoI method does not apply to the parameters,
    or None when the parameter ranges allow it.
    """

    if not params.z > min_z:
        return f'z = {params.z:g} is not above {min_z:g}'

    if not params.a > 0:
        return f'a = {params.a:g} is not positive'

    if params.b > params.z and params.b > params.a:
        return f'b = {params.b:g} exceeds both z and a'

    return None
