"""The module contains the ground-truth generators: the exact precision
reached at a window edge, found by walking the term ratios outward from
the mode, and an extended-precision evaluation of M(a, b, z).
"""

import logging
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from kummer.conf import settings
from kummer.core.chf import ChfParams, SignedLog, kummer_reflect, log_term, term_ratio
from kummer.core.constants import Direction
from kummer.core.exceptions import EpsilonOutOfRange, NoConvergence, NoPositiveRoot
from kummer.core.roi import ModeResult, sign_floor, solve_mode
from kummer.utils.summation import DoubleDouble

if TYPE_CHECKING:
    from typing_extensions import Self

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class PrecisionCurve:
    """The class represents the exact precision ln(m_edge / m_mode) reached
    when the window edge is placed at edge_index, for one direction away
    from the mode.
    """

    direction: Direction
    n_mode: int
    points: tuple[tuple[int, float], ...]

    @property
    def edge_indices(self: 'Self') -> list[int]:
        """The edge indices, in the order of the distance from the mode."""

        return [edge for edge, _ in self.points]

    @property
    def log_ratios(self: 'Self') -> list[float]:
        """The log-ratios, in the order of the distance from the mode."""

        return [ratio for _, ratio in self.points]

    def at(self: 'Self', k: int) -> float:
        """Returns the log-ratio at the distance k from the mode."""

        return self.points[k][1]


def _log_abs_ratios(params: ChfParams, n: 'np.ndarray') -> 'np.ndarray':
    """Returns ln|m_(n+1) / m_n| for an array of indices."""

    with np.errstate(divide='ignore'):
        return (
            np.log(np.abs(params.a + n))
            - np.log(np.abs(params.b + n))
            + math.log(params.z)
            - np.log1p(n)
        )


def _lowest_edge(params: ChfParams, mode: ModeResult) -> int:
    """Returns the lowest edge index the lower direction may reach."""

    return min(sign_floor(params), mode.n_mode)


def exact_half_width(params: ChfParams, eps: float, direction: Direction) -> int:
    """Returns the smallest k >= 0 such that m_(mode +- k) / m_mode <= eps,
    computed by accumulating the logs of the term ratios from the mode.
    The lower direction stops at the lowest index the terms keep their sign.
    """

    if not 0 < eps <= 1:
        msg = f'eps must be in (0, 1], got {eps!r}'
        raise EpsilonOutOfRange(msg)

    mode = solve_mode(params)
    log_eps = math.log(eps)
    n_mode = mode.n_mode
    limit = settings.REFERENCE_MAX_TERMS

    log_ratio, k = 0.0, 0
    if direction is Direction.UPPER:
        while log_ratio > log_eps:
            if k >= limit:
                msg = f'the terms of {params} do not fall below {eps:g} within {limit} terms'
                raise NoConvergence(msg)

            ratio = term_ratio(params, n_mode + k)
            if ratio == 0:
                return k + 1

            log_ratio += math.log(abs(ratio))
            k += 1

        return k

    max_k = n_mode - _lowest_edge(params, mode)
    while log_ratio > log_eps and k < max_k:
        ratio = term_ratio(params, n_mode - k - 1)
        if ratio == 0:
            break

        log_ratio -= math.log(abs(ratio))
        k += 1

    return k


def precision_curve(params: ChfParams, k_max: int, direction: Direction) -> PrecisionCurve:
    """Returns ln(m_(mode +- k) / m_mode) for k = 0..k_max as cumulative
    sums of the logs of the term ratios. The lower curve ends at
    the lowest edge the terms keep their sign.
    """

    if k_max < 0:
        msg = f'k_max must be nonnegative, got {k_max}'
        raise ValueError(msg)

    mode = solve_mode(params)
    n_mode = mode.n_mode
    if direction is Direction.UPPER:
        indices = n_mode + np.arange(k_max, dtype=np.float64)
        steps = _log_abs_ratios(params, indices)
        edges = range(n_mode, n_mode + k_max + 1)
    else:
        k_max = min(k_max, n_mode - _lowest_edge(params, mode))
        indices = n_mode - 1 - np.arange(k_max, dtype=np.float64)
        steps = -_log_abs_ratios(params, indices)
        edges = range(n_mode, n_mode - k_max - 1, -1)

    log_ratios = np.concatenate(([0.0], np.cumsum(steps)))
    return PrecisionCurve(
        direction=direction,
        n_mode=n_mode,
        points=tuple(zip(edges, log_ratios.tolist(), strict=True)),
    )


def _dd_ratio(params: ChfParams, n: int) -> DoubleDouble:
    """Returns the term ratio at n in double-double arithmetic."""

    numerator = (DoubleDouble.of(params.a) + float(n)) * params.z
    denominator = (DoubleDouble.of(params.b) + float(n)) * float(n + 1)
    return numerator / denominator


def _start_index(params: ChfParams) -> tuple[int, bool]:
    """Returns the index to sum outward from and whether the downward
    sweep has to run all the way down to n = 0.
    """

    try:
        mode = solve_mode(params)
    except NoPositiveRoot:
        return 0, False

    full_sweep = not mode.unimodal or sign_floor(params) > 0
    return mode.n_mode, full_sweep


def reference_value(params: ChfParams, eps: float) -> SignedLog:
    """Evaluates M(a, b, z) with a double-double accumulator, summing outward
    from the mode in both directions until term / max <= eps^2.
    """

    if not 0 < eps < 1:
        msg = f'eps must be in (0, 1), got {eps!r}'
        raise EpsilonOutOfRange(msg)

    if params.z == 0:
        return SignedLog.one()

    scale = None
    if params.z < 0:
        params, scale = kummer_reflect(params)

    start, full_sweep = _start_index(params)
    anchor = log_term(params, start)
    if anchor.is_zero:
        start, full_sweep = 0, False
        anchor = SignedLog.one()

    tol = eps * eps
    limit = settings.REFERENCE_MAX_TERMS
    total = DoubleDouble(1.0)
    largest = 1.0
    count = 1

    term = DoubleDouble(1.0)
    n = start
    while True:
        ratio = _dd_ratio(params, n)
        term = term * ratio
        n += 1
        if term.hi == 0:
            break

        total = total + term
        largest = max(largest, abs(term.hi))
        count += 1
        if count > limit:
            msg = f'the reference sum of {params} did not converge within {limit} terms'
            raise NoConvergence(msg)

        if abs(term.hi) <= tol * largest and abs(ratio.hi) < 1:
            break

    term = DoubleDouble(1.0)
    n = start
    while n > 0:
        ratio = _dd_ratio(params, n - 1)
        if ratio.hi == 0:
            break

        term = term / ratio
        n -= 1
        total = total + term
        largest = max(largest, abs(term.hi))
        count += 1
        if not full_sweep and abs(term.hi) <= tol * largest:
            break

    LOGGER.debug('Reference sum of %s took %d terms from n = %d', params, count, start)

    if total.hi == 0:
        return SignedLog.zero()

    sign = 1 if total.hi > 0 else -1
    result = anchor * SignedLog(sign, abs(total).log())
    return result if scale is None else result * scale
