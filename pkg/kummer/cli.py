"""The module contains the command-line front end of Kummer.

    kummer eval --a A --b B --z Z [--eps EPS] [--variant V] [--method auto|roi|ic] [--log]
    kummer roi --a A --b B --z Z --eps EPS [--variant V]
    kummer pb --alpha ALPHA --beta BETA --gamma GAMMA --x X [--eps EPS]
    kummer bench fig1..fig8 [--out FILE] [grid overrides]
    kummer bench all --out-dir DIR

The results are printed as key=value lines. The exit code is 0 on success,
2 on a usage error and 3 on a numeric failure, whose name is reported on
the error stream.
"""

import argparse
import logging
import math
import sys
from pathlib import Path
from typing import TYPE_CHECKING

from kummer.conf import settings
from kummer.core.chf import ChfParams
from kummer.core.constants import Direction, Method, TaylorVariant
from kummer.core.exceptions import ImproperlyConfigured, InvalidInput, NumericFailure
from kummer.core.poisson_beta import PbParams, pb_log_density
from kummer.core.roi import epsilon_min, roi_bounds, taylor_coefficients
from kummer.core.series import evaluate
from kummer.experiments.exceptions import InvalidOverride, UnknownFigure
from kummer.experiments.figures import FIGURES, build_figure, geometric_grid
from kummer.experiments.table import FigureId
from kummer.utils.log import configure_logging

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence
    from typing import IO, Any

LOGGER = logging.getLogger(__name__)

EXIT_OK = 0

EXIT_USAGE = 2

EXIT_NUMERIC_FAILURE = 3

_METHODS: dict[str, Method | None] = {
    'auto': None,
    'roi': Method.ROI,
    'ic': Method.INCREMENT_CHECK,
}

_BENCH_TARGETS = (*(figure.value for figure in FigureId), 'all')

# Grid overrides of the bench subcommand: flag, type, help.
_BENCH_OVERRIDES: tuple[tuple[str, str, str], ...] = (
    ('--z', 'float', 'z of the precision and eps_min figures'),
    ('--a-values', 'grid', 'values of a'),
    ('--b-values', 'grid', 'values of b'),
    ('--k-max', 'int', 'largest distance from the mode'),
    ('--z-values', 'grid', 'values of z of the term count figure'),
    ('--a', 'float', 'a of the term count figure'),
    ('--b', 'float', 'b of the term count figure'),
    ('--eps-values', 'grid', 'precisions of the term count figure'),
    ('--gammas', 'grid', 'values of gamma of the Poisson-Beta figure'),
    ('--alpha-values', 'grid', 'values of alpha of the Poisson-Beta figure'),
    ('--beta-values', 'grid', 'values of beta of the Poisson-Beta figure'),
    ('--eps', 'float', 'precision of the Poisson-Beta figure'),
    ('--x', 'int', 'variate of the Poisson-Beta figure'),
)


def parse_grid(text: str) -> list[float]:
    """Parses a grid given either as comma-separated values or
    as START:STOP:NUM, meaning NUM values spaced evenly on the log scale.
    """

    try:
        if ':' in text:
            start, stop, num = text.split(':')
            return geometric_grid(float(start), float(stop), int(num))

        return [float(value) for value in text.split(',') if value.strip()]
    except ValueError as exc:
        msg = f'invalid grid {text!r}'
        raise argparse.ArgumentTypeError(msg) from exc


def parse_variant(text: str) -> TaylorVariant:
    """Parses the name of a Taylor variant for argparse."""

    try:
        return TaylorVariant.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


_TYPES: dict[str, 'Callable[[str], Any]'] = {
    'float': float,
    'grid': parse_grid,
    'int': int,
}


def build_parser() -> argparse.ArgumentParser:
    """Returns the parser of the command line."""

    parser = argparse.ArgumentParser(
        prog='kummer',
        description="Kummer's confluent hypergeometric function M(a, b, z) "
                    'summed over its region of interest.',
    )
    parser.add_argument('--verbose', action='store_true', help='log the diagnostics')
    subparsers = parser.add_subparsers(dest='command', required=True)

    eval_parser = subparsers.add_parser('eval', help='evaluate M(a, b, z)')
    _add_chf_arguments(eval_parser)
    eval_parser.add_argument('--eps', type=float, default=None, help='target precision')
    eval_parser.add_argument('--variant', type=parse_variant, default=None)
    eval_parser.add_argument('--method', choices=tuple(_METHODS), default='auto')
    eval_parser.add_argument('--log', action='store_true', help='print the signed log')
    eval_parser.set_defaults(handler=_run_eval)

    roi_parser = subparsers.add_parser('roi', help='locate the region of interest')
    _add_chf_arguments(roi_parser)
    roi_parser.add_argument('--eps', type=float, required=True, help='target precision')
    roi_parser.add_argument('--variant', type=parse_variant, default=None)
    roi_parser.set_defaults(handler=_run_roi)

    pb_parser = subparsers.add_parser('pb', help='evaluate the Poisson-Beta density')
    pb_parser.add_argument('--alpha', type=float, required=True)
    pb_parser.add_argument('--beta', type=float, required=True)
    pb_parser.add_argument('--gamma', type=float, required=True)
    pb_parser.add_argument('--x', type=int, required=True)
    pb_parser.add_argument('--eps', type=float, default=None, help='target precision')
    pb_parser.set_defaults(handler=_run_pb)

    bench_parser = subparsers.add_parser('bench', help='regenerate the data of a figure')
    bench_parser.add_argument('figure', choices=_BENCH_TARGETS)
    bench_parser.add_argument('--out', type=Path, default=None, help='CSV file to write')
    bench_parser.add_argument(
        '--out-dir', type=Path, default=None, help='directory for the CSV files of all figures',
    )
    for flag, type_name, help_text in _BENCH_OVERRIDES:
        bench_parser.add_argument(flag, type=_TYPES[type_name], default=None, help=help_text)

    bench_parser.set_defaults(handler=_run_bench)

    return parser


def _add_chf_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--a', type=float, required=True)
    parser.add_argument('--b', type=float, required=True)
    parser.add_argument('--z', type=float, required=True)


def _emit(out: 'IO[str]', **values: 'Any') -> None:
    """Prints the values as key=value lines."""

    for key, value in values.items():
        if isinstance(value, bool):
            value = str(value).lower()
        elif isinstance(value, float):
            value = repr(value)

        print(f'{key}={value}', file=out)


def _run_eval(args: argparse.Namespace, out: 'IO[str]') -> None:
    params = ChfParams(args.a, args.b, args.z)
    result = evaluate(params, args.eps, args.variant, _METHODS[args.method])

    if args.log:
        _emit(out, sign=result.log_value.sign, log_value=result.log_value.log_mag)
    else:
        _emit(out, value=result.value)

    _emit(
        out,
        method=result.method.name.lower(),
        kummer_applied=result.kummer_applied,
        terms_summed=result.terms_summed,
        term_range_log10=result.term_range_log10,
    )
    if result.bounds is not None:
        _emit(
            out,
            variant=result.bounds.variant.value,
            n_mode=result.bounds.mode.n_mode,
            n_lower=result.bounds.n_lower,
            n_upper=result.bounds.n_upper,
            extended_terms=result.extended_terms,
        )


def _run_roi(args: argparse.Namespace, out: 'IO[str]') -> None:
    params = ChfParams(args.a, args.b, args.z)
    variant = TaylorVariant.parse(args.variant or settings.DEFAULT_VARIANT)
    bounds = roi_bounds(params, args.eps, variant)
    coeffs = taylor_coefficients(params, bounds.mode)
    log_eps_min = max(epsilon_min(coeffs, direction, variant) for direction in Direction)

    _emit(
        out,
        n_mode=bounds.mode.n_mode,
        n_lower=bounds.n_lower,
        n_upper=bounds.n_upper,
        k_lower=bounds.k_lower,
        k_upper=bounds.k_upper,
        log10_eps_min=log_eps_min / math.log(10),
    )


def _run_pb(args: argparse.Namespace, out: 'IO[str]') -> None:
    log_density = pb_log_density(PbParams(args.alpha, args.beta, args.gamma, args.x), args.eps)
    _emit(out, log_density=log_density, density=math.exp(log_density))


def _bench_overrides(args: argparse.Namespace) -> dict[str, 'Any']:
    return {
        flag.lstrip('-').replace('-', '_'): getattr(args, flag.lstrip('-').replace('-', '_'))
        for flag, _, _ in _BENCH_OVERRIDES
    }


def _run_bench(args: argparse.Namespace, out: 'IO[str]') -> None:
    overrides = _bench_overrides(args)
    if args.figure == 'all':
        if args.out_dir is None:
            msg = 'bench all requires --out-dir'
            raise InvalidOverride(msg)

        args.out_dir.mkdir(parents=True, exist_ok=True)
        for figure_id, definition in FIGURES.items():
            LOGGER.info('Building %s: %s', figure_id.value, definition.description)
            table = definition.build()
            table.save(args.out_dir / f'{figure_id.value}.csv')

        return

    table = build_figure(args.figure, **overrides)
    if args.out is None:
        table.write_csv(out)
    else:
        table.save(args.out)
        LOGGER.info('Wrote %d rows to %s', len(table.rows), args.out)


def run(
    argv: 'Sequence[str] | None' = None,
    out: 'IO[str] | None' = None,
    err: 'IO[str] | None' = None,
) -> int:
    """Runs the command line and returns the exit code."""

    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        configure_logging(settings.LOGGING, verbose=args.verbose)
        args.handler(args, out)
    except (ImproperlyConfigured, InvalidInput, InvalidOverride, UnknownFigure) as exc:
        print(f'{exc.__class__.__name__}: {exc}', file=err)
        return EXIT_USAGE
    except NumericFailure as exc:
        LOGGER.debug('Numeric failure', exc_info=exc)
        print(f'{exc.__class__.__name__}: {exc}', file=err)
        return EXIT_NUMERIC_FAILURE

    return EXIT_OK


def main() -> None:
    """The entry point of the console script."""

    sys.exit(run())
