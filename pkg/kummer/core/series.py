"""The module contains the evaluation of M(a, b, z): the summation over
the region of interest, the classical increment-and-check summation from n = 0
and the dispatcher that picks one of them.
"""

import logging
import math
from dataclasses import dataclass, replace
from typing import TYPE_CHECKING

import numpy as np

from kummer.conf import settings
from kummer.core.chf import ChfParams, SignedLog, kummer_reflect, log_term, term_ratio
from kummer.core.constants import Method, TaylorVariant
from kummer.core.exceptions import (
    CatastrophicCancellation,
    EpsilonOutOfRange,
    InvalidBounds,
    ModeTooSmall,
    NoConvergence,
    NoPositiveRoot,
    PrecisionBelowMinimum,
    SeriesOverflow,
)
from kummer.core.roi import RoiBounds, applicability_issue, roi_bounds
from kummer.utils.summation import compensated_array_sum

if TYPE_CHECKING:
    from typing_extensions import Self

LOGGER = logging.getLogger(__name__)

_IC_BLOCK = 1024

_LOG_UNIT_ROUNDOFF = -53 * math.log(2)


@dataclass(frozen=True)
class EvalResult:
    """The class represents the value of M(a, b, z) along with
    the diagnostics of its computation.
    """

    value: float
    log_value: SignedLog
    method: Method
    kummer_applied: bool
    terms_summed: int
    # ln of the ratio of the largest to the smallest summed term.
    term_range_log: float
    bounds: RoiBounds | None = None
    # Terms added beyond the estimated window by the edge check.
    extended_terms: int = 0
    # ln(edge term / largest term) at the window edges actually summed.
    edge_log_ratio_lower: float | None = None
    edge_log_ratio_upper: float | None = None

    @property
    def term_range_log10(self: 'Self') -> float:
        """The ratio of the largest to the smallest summed term in decades."""

        return self.term_range_log / math.log(10)


def _check_eps(eps: float) -> None:
    if not 0 < eps < 1:
        msg = f'eps must be in (0, 1), got {eps!r}'
        raise EpsilonOutOfRange(msg)


def _validate_bounds(params: ChfParams, bounds: RoiBounds) -> None:
    if bounds.n_lower < 0 or bounds.n_upper < bounds.n_lower:
        msg = f'invalid window [{bounds.n_lower}, {bounds.n_upper}]'
        raise InvalidBounds(msg)

    if bounds.clamped and bounds.sign_floor > 0:
        msg = (
            f'the window [{bounds.n_lower}, {bounds.n_upper}] reaches below index '
            f'{bounds.sign_floor}, where the terms of {params} change sign'
        )
        raise InvalidBounds(msg)

    if params.z <= 0:
        msg = f'a region of interest applies to z > 0 only, got z = {params.z!r}'
        raise InvalidBounds(msg)


def _window_terms(params: ChfParams, n_lower: int, n_upper: int) -> 'np.ndarray':
    """Returns the terms m_n / m_(n_lower) for n_lower <= n <= n_upper
    built by the forward recurrence.
    """

    n = np.arange(n_lower, n_upper, dtype=np.float64)
    ratios = (params.a + n) / (params.b + n) * params.z / (n + 1)
    return np.concatenate(([1.0], np.cumprod(ratios)))


def sum_region(
    params: ChfParams,
    bounds: RoiBounds,
    *,
    edge_check: bool | None = None,
) -> EvalResult:
    """Sums the terms of the window [n_lower, n_upper], scaled by the term at
    the lower edge, and returns the value anchored back by log m_(n_lower).
    With the edge check on, a window whose edge terms are not yet below
    eps times the largest term is extended outward term by term.
    """

    _validate_bounds(params, bounds)
    if edge_check is None:
        edge_check = settings.ROI_EDGE_CHECK

    anchor = log_term(params, bounds.n_lower)
    if anchor.is_zero:
        msg = f'the term at the lower edge {bounds.n_lower} of {params} is zero'
        raise InvalidBounds(msg)

    with np.errstate(over='ignore'):
        window = _window_terms(params, bounds.n_lower, bounds.n_upper)

    if not np.all(np.isfinite(window)):
        msg = f'the scaled terms of {params} overflow in [{bounds.n_lower}, {bounds.n_upper}]'
        raise SeriesOverflow(msg)

    below: list[float] = []
    above: list[float] = []
    largest = float(np.max(np.abs(window)))
    if edge_check:
        threshold = math.exp(bounds.target_log_eps)
        largest = _extend_edges(
            params, window, largest, below, above, (bounds.n_lower, bounds.n_upper), threshold,
        )
        if below or above:
            LOGGER.debug(
                'Extended the window of %s by %d terms below and %d above',
                params, len(below), len(above),
            )

    terms = np.concatenate((np.array(below[::-1]), window, np.array(above)))
    total = compensated_array_sum(terms)
    if not math.isfinite(total):
        msg = f'the scaled sum of {params} overflows'
        raise SeriesOverflow(msg)

    if np.any(terms < 0):
        _check_cancellation(params, total, largest, terms.size, bounds.target_log_eps)

    magnitudes = np.abs(terms)
    smallest = float(np.min(magnitudes[magnitudes > 0]))
    log_value = anchor * SignedLog.from_float(total)

    return EvalResult(
        value=log_value.to_float(),
        log_value=log_value,
        method=Method.ROI,
        kummer_applied=False,
        terms_summed=int(terms.size),
        term_range_log=math.log(largest) - math.log(smallest),
        bounds=bounds,
        extended_terms=len(below) + len(above),
        edge_log_ratio_lower=_log_ratio(float(terms[0]), largest),
        edge_log_ratio_upper=_log_ratio(float(terms[-1]), largest),
    )


def _log_ratio(term: float, largest: float) -> float:
    if term == 0:
        return -math.inf

    return math.log(abs(term)) - math.log(largest)


def _check_cancellation(
    params: ChfParams,
    total: float,
    largest: float,
    count: int,
    log_eps: float,
) -> None:
    """Raises CatastrophicCancellation when count rounding errors of the size
    of the largest term exceed eps relative to the sum.
    """

    if total != 0:
        lost = math.log(largest) - math.log(abs(total))
        if lost + math.log(count) + _LOG_UNIT_ROUNDOFF <= log_eps:
            return

    msg = (
        f'the terms of {params} cancel: the sum {total!r} is too small against '
        f'the largest term {largest!r} for the requested precision'
    )
    raise CatastrophicCancellation(msg)


def _extend_edges(
    params: ChfParams,
    window: 'np.ndarray',
    largest: float,
    below: list[float],
    above: list[float],
    edges: tuple[int, int],
    threshold: float,
) -> float:
    """Appends terms past the window edges while the edge terms exceed
    threshold times the largest term, and returns the largest term.
    """

    n_first, n_last = edges
    first, last = float(window[0]), float(window[-1])
    limit = settings.IC_MAX_TERMS

    while abs(last) > threshold * largest:
        if len(above) >= limit:
            msg = f'the upper edge of {params} does not converge'
            raise NoConvergence(msg)

        last *= term_ratio(params, n_last)
        n_last += 1
        if not math.isfinite(last):
            msg = f'the scaled terms of {params} overflow above {n_last}'
            raise SeriesOverflow(msg)

        above.append(last)
        largest = max(largest, abs(last))

    floor = max(0, math.ceil(-params.a), math.ceil(-params.b))
    while n_first > floor and abs(first) > threshold * largest:
        ratio = term_ratio(params, n_first - 1)
        if ratio == 0:
            break

        first /= ratio
        n_first -= 1
        below.append(first)
        largest = max(largest, abs(first))

    return largest


def increment_check(
    params: ChfParams,
    eps: float,
    max_terms: int | None = None,
) -> EvalResult:
    """Sums the series from m_0 = 1 by the forward recurrence until
    |m_n| / |S_(n-1)| < eps, once the terms have started to decrease.
    The terms are generated in blocks by a cumulative product of the ratios.
    Mixed signs are checked for cancellation once the sum is complete.
    """

    _check_eps(eps)
    if max_terms is None:
        max_terms = settings.IC_MAX_TERMS

    blocks = [np.ones(1)]
    term, partial, n = 1.0, 1.0, 0
    done = False
    while not done:
        if n + 1 >= max_terms:
            msg = f'the series of {params} did not converge within {max_terms} terms'
            raise NoConvergence(msg)

        size = min(_IC_BLOCK, max_terms - 1 - n)
        k = np.arange(n, n + size + 1, dtype=np.float64)
        ratios = (params.a + k) / (params.b + k) * params.z / (k + 1)
        # m_(n + 1), ..., m_(n + size) and the partial sums ending at them.
        with np.errstate(over='ignore', invalid='ignore'):
            terms = term * np.cumprod(ratios[:-1])
            sums = partial + np.cumsum(terms)

        zeros = np.flatnonzero(terms == 0)
        if zeros.size:
            # Either the series terminates or the terms underflowed.
            terms, sums = terms[:zeros[0]], sums[:zeros[0]]
            done = True

        previous = np.concatenate(([partial], sums))[:terms.size]
        with np.errstate(invalid='ignore'):
            stops = np.flatnonzero(
                (previous != 0)
                & (np.abs(terms) < eps * np.abs(previous))
                & (np.abs(ratios[1:terms.size + 1]) < 1),
            )

        if stops.size:
            terms, sums = terms[:stops[0] + 1], sums[:stops[0] + 1]
            done = True

        overflows = np.flatnonzero(~(np.isfinite(terms) & np.isfinite(sums)))
        if overflows.size:
            msg = f'the series of {params} overflows at n = {n + 1 + int(overflows[0])}'
            raise SeriesOverflow(msg)

        if terms.size:
            blocks.append(terms)
            n += int(terms.size)
            term, partial = float(terms[-1]), float(sums[-1])

    values = np.concatenate(blocks)
    value = compensated_array_sum(values)
    if not math.isfinite(value):
        msg = f'the partial sum of {params} overflows'
        raise SeriesOverflow(msg)

    magnitudes = np.abs(values)
    largest = float(np.max(magnitudes))
    if np.any(values < 0):
        _check_cancellation(params, value, largest, values.size, math.log(eps))

    return EvalResult(
        value=value,
        log_value=SignedLog.from_float(value),
        method=Method.INCREMENT_CHECK,
        kummer_applied=False,
        terms_summed=int(values.size),
        term_range_log=math.log(largest) - math.log(float(np.min(magnitudes))),
    )


def ic_term_count(params: ChfParams, eps: float, max_terms: int | None = None) -> int:
    """Returns the number of terms increment-and-check needs when it stops
    at the first decreasing term below eps times the largest term so far.
    The count is obtained on the log scale, so it never overflows.
    """

    _check_eps(eps)
    if max_terms is None:
        max_terms = settings.IC_MAX_TERMS

    log_eps = math.log(eps)
    log_term_, log_largest = 0.0, 0.0
    for n in range(max_terms):
        ratio = term_ratio(params, n)
        if ratio == 0:
            return n + 1

        log_term_ += math.log(abs(ratio))
        log_largest = max(log_largest, log_term_)
        if log_term_ - log_largest < log_eps and abs(ratio) < 1:
            return n + 1

    msg = f'the terms of {params} do not fall below eps within {max_terms} terms'
    raise NoConvergence(msg)


def plan_roi(params: ChfParams, eps: float, variant: TaylorVariant) -> RoiBounds | None:
    """Applies the applicability gate and returns the region of interest,
    or None when the parameters must be summed by increment-and-check.
    """

    issue = applicability_issue(params, settings.ROI_MIN_Z)
    if issue:
        LOGGER.debug('RoI gate rejected %s: %s', params, issue)
        return None

    try:
        bounds = roi_bounds(params, eps, variant)
    except PrecisionBelowMinimum as exc:
        fallback = TaylorVariant.parse(settings.ROI_FALLBACK_VARIANT)
        if fallback is variant:
            LOGGER.debug('RoI gate rejected %s: %s', params, exc)
            return None

        LOGGER.info('%s; retrying %s with %s', exc, params, fallback.value)
        try:
            bounds = roi_bounds(params, eps, fallback)
        except PrecisionBelowMinimum as fallback_exc:
            LOGGER.debug('RoI gate rejected %s: %s', params, fallback_exc)
            return None
    except (ModeTooSmall, NoPositiveRoot) as exc:
        LOGGER.debug('RoI gate rejected %s: %s', params, exc)
        return None

    if bounds.clamped and bounds.sign_floor > 0:
        LOGGER.debug('RoI gate rejected %s: the window reaches the sign changes', params)
        return None

    if not bounds.mode.unimodal and bounds.n_lower > 0:
        # m_0 = 1 is a second local maximum; it has to be negligible.
        peak = log_term(params, bounds.mode.n_mode)
        if peak.log_mag + bounds.target_log_eps < 0:
            LOGGER.debug('RoI gate rejected %s: the terms near n = 0 are not negligible', params)
            return None

    return bounds


def evaluate(
    params: ChfParams,
    eps: float | None = None,
    variant: 'TaylorVariant | str | None' = None,
    force_method: Method | None = None,
) -> EvalResult:
    """Evaluates M(a, b, z). Negative z is reflected by Kummer's
    transformation first; then the RoI summation runs when the gate allows it
    and increment-and-check otherwise, unless a method is forced.
    """

    eps = settings.DEFAULT_EPS if eps is None else eps
    _check_eps(eps)
    variant = TaylorVariant.parse(settings.DEFAULT_VARIANT if variant is None else variant)

    if params.z == 0:
        return EvalResult(
            value=1.0,
            log_value=SignedLog.one(),
            method=Method.INCREMENT_CHECK,
            kummer_applied=False,
            terms_summed=1,
            term_range_log=0.0,
        )

    scale = None
    work = params
    if params.z < 0:
        work, scale = kummer_reflect(params)

    if force_method is Method.INCREMENT_CHECK:
        result = increment_check(work, eps)
    elif force_method is Method.ROI:
        result = sum_region(work, roi_bounds(work, eps, variant))
    else:
        bounds = plan_roi(work, eps, variant)
        result = increment_check(work, eps) if bounds is None else sum_region(work, bounds)

    if scale is None:
        return result

    log_value = result.log_value * scale
    return replace(
        result,
        value=log_value.to_float(),
        log_value=log_value,
        kummer_applied=True,
    )
