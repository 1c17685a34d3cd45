"""The module contains the builders of the figure tables: precision against
the window edge, the smallest reachable precision over an (a, b) grid, the
number of terms the RoI saves and the dynamic range of the summed terms
in the Poisson-Beta study.
"""

import logging
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from kummer.core.chf import ChfParams
from kummer.core.constants import Direction, TaylorVariant
from kummer.core.exceptions import InvalidInput, NumericFailure, PrecisionBelowMinimum
from kummer.core.oracle import precision_curve
from kummer.core.poisson_beta import PbParams, log_prefactor
from kummer.core.roi import (
    epsilon_min,
    predicted_log_precision,
    roi_bounds,
    solve_mode,
    taylor_coefficients,
)
from kummer.core.series import ic_term_count, increment_check, sum_region
from kummer.experiments.exceptions import InvalidOverride
from kummer.experiments.table import FAILED, SKIP, FigureId, FigureTable

if TYPE_CHECKING:
    from collections.abc import Callable
    from typing import Any

    from typing_extensions import Self

    from kummer.core.series import EvalResult
    from kummer.experiments.types import Cell, Grid

LOGGER = logging.getLogger(__name__)

_LN10 = math.log(10)

VARIANTS = (TaylorVariant.T1_5, TaylorVariant.T2, TaylorVariant.T2_5, TaylorVariant.T3)


def default_a_values(z: float) -> list[float]:
    """Returns the values of a from much smaller to much larger than z."""

    return [0.5, 2.0, 10.0, z, 5 * z]


def default_b_values(z: float) -> list[float]:
    """Returns the values of b from very small to slightly below z."""

    return [0.5, 5.0, z / 2, 0.9 * z]


NEGATIVE_B_VALUES = (-0.5, -5.5, -20.5)


def geometric_grid(start: float, stop: float, num: int) -> list[float]:
    """Returns num values spaced evenly on the log scale."""

    return np.geomspace(start, stop, num).tolist()


def precision_figure(
    z: float,
    a_values: 'Grid',
    b_values: 'Grid',
    k_max: int,
    *,
    figure_id: FigureId = FigureId.F1,
) -> FigureTable:
    """Tabulates, per (a, b) cell and direction, the exact log10-precision
    reached at each edge index along with the one each Taylor variant
    predicts at the same edge.
    """

    columns = (
        'a', 'b', 'direction', 'k', 'edge_index', 'exact_log10',
        *(f'{variant.name.lower()}_log10' for variant in VARIANTS),
    )
    table = FigureTable(
        figure_id,
        columns,
        labels={'direction': (*(direction.value for direction in Direction), SKIP)},
        metadata={'z': z, 'a_values': list(a_values), 'b_values': list(b_values), 'k_max': k_max},
    )

    for a in a_values:
        for b in b_values:
            try:
                params = ChfParams(a, b, z)
                mode = solve_mode(params)
            except (InvalidInput, NumericFailure) as exc:
                LOGGER.debug('Skipped the cell (a=%g, b=%g) of %s: %s', a, b, figure_id.value, exc)
                table.add_row(float(a), float(b), SKIP, *([SKIP] * (len(columns) - 3)))
                continue

            try:
                coeffs = taylor_coefficients(params, mode)
            except NumericFailure as exc:
                LOGGER.debug('No Taylor estimates for %s: %s', params, exc)
                coeffs = None

            for direction in Direction:
                curve = precision_curve(params, k_max, direction)
                for k, (edge, log_ratio) in enumerate(curve.points):
                    distance = abs(edge - mode.root_real)
                    predicted = [
                        SKIP if coeffs is None else predicted_log_precision(
                            coeffs, distance, variant, direction,
                        ) / _LN10
                        for variant in VARIANTS
                    ]
                    table.add_row(
                        params.a, params.b, direction.value, k, edge, log_ratio / _LN10,
                        *predicted,
                    )

    return table


def epsmin_grid(
    z: float,
    a_values: 'Grid',
    b_values: 'Grid',
    *,
    figure_id: FigureId = FigureId.F3,
) -> FigureTable:
    """Tabulates log10 eps_min of T2.5 per (a, b) in both directions;
    the overall value is the larger of the two, since both edges have to
    be estimated. Cells where the mode cannot be expanded are skipped.
    """

    columns = ('a', 'b', 'log10_eps_min_upper', 'log10_eps_min_lower', 'log10_eps_min')
    table = FigureTable(
        figure_id,
        columns,
        metadata={'z': z, 'a_values': list(a_values), 'b_values': list(b_values)},
    )

    for a in a_values:
        for b in b_values:
            try:
                params = ChfParams(a, b, z)
                coeffs = taylor_coefficients(params, solve_mode(params))
            except (InvalidInput, NumericFailure) as exc:
                LOGGER.debug('Skipped the cell (a=%g, b=%g) of %s: %s', a, b, figure_id.value, exc)
                table.add_row(float(a), float(b), SKIP, SKIP, SKIP)
                continue

            upper = epsilon_min(coeffs, Direction.UPPER, TaylorVariant.T2_5) / _LN10
            lower = epsilon_min(coeffs, Direction.LOWER, TaylorVariant.T2_5) / _LN10
            table.add_row(params.a, params.b, upper, lower, max(upper, lower))

    return table


def term_count_comparison(
    z_values: 'Grid',
    a: float,
    b: float,
    eps_values: 'Grid',
    *,
    figure_id: FigureId = FigureId.F5,
) -> FigureTable:
    """Tabulates, per (z, eps), the number of terms the T2.5 region of interest
    spans against the number increment-and-check needs from m_0.
    """

    columns = ('z', 'eps', 'roi_terms', 'ic_terms', 'reduction_factor')
    table = FigureTable(
        figure_id,
        columns,
        metadata={'a': a, 'b': b, 'z_values': list(z_values), 'eps_values': list(eps_values)},
    )

    for z in z_values:
        params = ChfParams(a, b, z)
        for eps in eps_values:
            try:
                roi_terms = roi_bounds(params, eps, TaylorVariant.T2_5).term_count
                ic_terms = ic_term_count(params, eps)
            except NumericFailure as exc:
                LOGGER.debug('Failed to count the terms of %s at eps=%g: %s', params, eps, exc)
                table.add_row(params.z, float(eps), FAILED, FAILED, FAILED)
                continue

            table.add_row(params.z, float(eps), roi_terms, ic_terms, ic_terms / roi_terms)

    return table


def roi_result(params: ChfParams, eps: float) -> 'EvalResult':
    """Sums the series over its T2.5 region of interest, falling back to T1.5
    where the precision is below the reach of T2.5. Unlike evaluate(),
    no gate on the parameters is applied.
    """

    try:
        bounds = roi_bounds(params, eps, TaylorVariant.T2_5)
    except PrecisionBelowMinimum:
        bounds = roi_bounds(params, eps, TaylorVariant.T1_5)

    return sum_region(params, bounds)


def term_range_ratio(
    gammas: 'Grid',
    alpha_values: 'Grid',
    beta_values: 'Grid',
    eps: float = 1e-12,
    x: int = 0,
    *,
    figure_id: FigureId = FigureId.F6,
) -> FigureTable:
    """Tabulates, per point of the Poisson-Beta grid, log10 of the ratio of the
    largest to the smallest summed term of M(beta, alpha + beta + x, gamma) for
    increment-and-check and for the RoI summation, and the log density the RoI
    summation gives.
    """

    columns = ('alpha', 'beta', 'gamma', 'ic_log10_range', 'roi_log10_range', 'log_density')
    table = FigureTable(
        figure_id,
        columns,
        metadata={
            'gammas': list(gammas),
            'alpha_values': list(alpha_values),
            'beta_values': list(beta_values),
            'eps': eps,
            'x': x,
        },
    )

    for alpha in alpha_values:
        for beta in beta_values:
            for gamma in gammas:
                p = PbParams(alpha, beta, gamma, x)
                row: list['Cell'] = [p.alpha, p.beta, p.gamma]
                try:
                    row.append(increment_check(p.chf_params, eps).term_range_log10)
                except NumericFailure as exc:
                    LOGGER.debug('Increment-and-check failed for %s: %s', p, exc)
                    row.append(FAILED)

                try:
                    result = roi_result(p.chf_params, eps)
                except NumericFailure as exc:
                    LOGGER.debug('The RoI summation failed for %s: %s', p, exc)
                    row.extend((FAILED, FAILED))
                else:
                    row.append(result.term_range_log10)
                    row.append(log_prefactor(p) + result.log_value.log_mag)

                table.add_row(*row)

    return table


@dataclass(frozen=True)
class FigureDefinition:
    """The class binds a figure to its builder and the default grid."""

    figure_id: FigureId
    description: str
    builder: 'Callable[..., FigureTable]'
    # Builds the default options from the overrides, some grids depend on z.
    defaults: 'Callable[[dict[str, Any]], dict[str, Any]]'

    def build(self: 'Self', **overrides: 'Any') -> FigureTable:
        """Builds the table with the default grid updated by the overrides.
        Overrides set to None are ignored.
        """

        given = {name: value for name, value in overrides.items() if value is not None}
        options = self.defaults(given)
        unknown = sorted(set(given) - set(options))
        if unknown:
            msg = f'{self.figure_id.value} does not take {", ".join(unknown)}'
            raise InvalidOverride(msg)

        options.update(given)
        return self.builder(figure_id=self.figure_id, **options)


def _precision_defaults(
    z: float,
    *,
    negative_b: bool = False,
) -> 'Callable[[dict[str, Any]], dict[str, Any]]':
    def defaults(given: dict[str, 'Any']) -> dict[str, 'Any']:
        z_ = given.get('z', z)
        return {
            'z': z_,
            'a_values': default_a_values(z_),
            'b_values': list(NEGATIVE_B_VALUES) if negative_b else default_b_values(z_),
            'k_max': math.ceil(z_),
        }

    return defaults


def _epsmin_defaults(z: float) -> 'Callable[[dict[str, Any]], dict[str, Any]]':
    def defaults(given: dict[str, 'Any']) -> dict[str, 'Any']:
        z_ = given.get('z', z)
        return {
            'z': z_,
            'a_values': geometric_grid(0.1, 10 * z_, 25),
            'b_values': geometric_grid(0.1, 2 * z_, 25),
        }

    return defaults


def _term_count_defaults(_given: dict[str, 'Any']) -> dict[str, 'Any']:
    return {
        'z_values': [60.0, 100.0, 200.0, 500.0, 1000.0, 2000.0, 5000.0, 10000.0],
        'a': 2.0,
        'b': 3.0,
        'eps_values': [1e-6, 1e-12, 1e-18],
    }


def _term_range_defaults(_given: dict[str, 'Any']) -> dict[str, 'Any']:
    return {
        'gammas': [10.0, 50.0, 100.0, 200.0, 500.0, 700.0, 1000.0, 1500.0, 1e4, 1e5, 2e5],
        'alpha_values': [0.5, 1.0, 5.0],
        'beta_values': [0.5, 1.0, 5.0],
        'eps': 1e-12,
        'x': 0,
    }


FIGURES: dict[FigureId, FigureDefinition] = {
    FigureId.F1: FigureDefinition(
        FigureId.F1, 'precision against the window edge at z = 50',
        precision_figure, _precision_defaults(50.0),
    ),
    FigureId.F2: FigureDefinition(
        FigureId.F2, 'precision against the window edge at z = 100',
        precision_figure, _precision_defaults(100.0),
    ),
    FigureId.F3: FigureDefinition(
        FigureId.F3, 'smallest precision T2.5 reaches at z = 50',
        epsmin_grid, _epsmin_defaults(50.0),
    ),
    FigureId.F4: FigureDefinition(
        FigureId.F4, 'smallest precision T2.5 reaches at z = 100',
        epsmin_grid, _epsmin_defaults(100.0),
    ),
    FigureId.F5: FigureDefinition(
        FigureId.F5, 'terms summed by the RoI against increment-and-check',
        term_count_comparison, _term_count_defaults,
    ),
    FigureId.F6: FigureDefinition(
        FigureId.F6, 'dynamic range of the summed terms of the Poisson-Beta density',
        term_range_ratio, _term_range_defaults,
    ),
    FigureId.F7: FigureDefinition(
        FigureId.F7, 'precision against the window edge for negative b at z = 50',
        precision_figure, _precision_defaults(50.0, negative_b=True),
    ),
    FigureId.F8: FigureDefinition(
        FigureId.F8, 'precision against the window edge for negative b at z = 100',
        precision_figure, _precision_defaults(100.0, negative_b=True),
    ),
}


def build_figure(figure_id: 'FigureId | str', **overrides: 'Any') -> FigureTable:
    """Builds the table of the figure with its default grid updated by
    the overrides.
    """

    return FIGURES[FigureId.parse(figure_id)].build(**overrides)
