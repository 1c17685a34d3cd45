"""The module contains the Poisson-Beta distribution, a Poisson distribution
whose rate is gamma times a Beta(alpha, beta) variable. Its density is
a scaled Kummer's function

    f(x) = gamma^x / x! * alpha^(x) / (alpha + beta)^(x) * e^(-gamma)
           * M(beta, alpha + beta + x, gamma)

which is computed entirely on the log scale.
"""

import logging
import math
import numbers
from dataclasses import dataclass
from typing import TYPE_CHECKING

from scipy.special import betaln, gammaln, xlogy

from kummer.conf import settings
from kummer.core.chf import ChfParams
from kummer.core.exceptions import InvalidParams, NoConvergence
from kummer.core.series import EvalResult, evaluate
from kummer.utils.summation import CompensatedSum

if TYPE_CHECKING:
    from typing_extensions import Self

    from kummer.core.constants import Method

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class PbParams:
    """The class represents the shape parameters alpha and beta, the rate
    scale gamma and the variate x of the Poisson-Beta distribution.
    """

    alpha: float
    beta: float
    gamma: float
    x: int = 0

    def __post_init__(self: 'Self') -> None:
        for name in ('alpha', 'beta', 'gamma'):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, numbers.Real):
                msg = f'{name} must be a real number, got {value!r}'
                raise InvalidParams(msg)

            if not (math.isfinite(value) and value > 0):
                msg = f'{name} must be positive and finite, got {value!r}'
                raise InvalidParams(msg)

            object.__setattr__(self, name, float(value))

        x = self.x
        if (
            isinstance(x, bool)
            or not isinstance(x, numbers.Real)
            or not math.isfinite(x)
            or x < 0
            or x != math.floor(x)
        ):
            msg = f'x must be a nonnegative integer, got {x!r}'
            raise InvalidParams(msg)

        object.__setattr__(self, 'x', int(x))

    @property
    def chf_params(self: 'Self') -> ChfParams:
        """The parameters of the Kummer's function in the density:
        a = beta, b = alpha + beta + x, z = gamma.
        """

        return ChfParams(self.beta, self.alpha + self.beta + self.x, self.gamma)


@dataclass(frozen=True)
class PbEvaluation:
    """The class represents the log density along with the evaluation
    of the Kummer's function it is built on.
    """

    log_density: float
    chf: EvalResult


def log_prefactor(p: PbParams) -> float:
    """Returns ln(gamma^x / x! * alpha^(x) / (alpha + beta)^(x)) - gamma."""

    poisson = xlogy(p.x, p.gamma) - gammaln(p.x + 1) - p.gamma
    rising = betaln(p.alpha + p.x, p.beta) - betaln(p.alpha, p.beta)
    return float(poisson + rising)


def pb_evaluate(
    p: PbParams,
    eps: float | None = None,
    force_method: 'Method | None' = None,
) -> PbEvaluation:
    """Computes the log density and keeps the diagnostics of the series."""

    chf = evaluate(p.chf_params, eps, force_method=force_method)
    # M(beta, alpha + beta + x, gamma) > 0 for positive parameters.
    return PbEvaluation(log_prefactor(p) + chf.log_value.log_mag, chf)


def pb_log_density(
    p: PbParams,
    eps: float | None = None,
    force_method: 'Method | None' = None,
) -> float:
    """Returns the log of the Poisson-Beta density at p.x."""

    return pb_evaluate(p, eps, force_method).log_density


def pb_normalization(
    alpha: float,
    beta: float,
    gamma: float,
    eps: float | None = None,
) -> float:
    """Sums the density over x = 0, 1, ... past the bulk of the mass
    (x > gamma + PB_TAIL_SIGMAS * sqrt(gamma)) until the summand falls below
    eps times the sum. For a valid density the result is 1.
    """

    eps = settings.DEFAULT_EPS if eps is None else eps
    bulk_end = gamma + settings.PB_TAIL_SIGMAS * math.sqrt(gamma)
    limit = settings.PB_MAX_VARIATE

    total = CompensatedSum()
    x = 0
    while True:
        if x > limit:
            msg = f'the density of ({alpha}, {beta}, {gamma}) does not vanish below x = {limit}'
            raise NoConvergence(msg)

        density = math.exp(pb_log_density(PbParams(alpha, beta, gamma, x), eps))
        total.add(density)
        if x > bulk_end and density < eps * total.value:
            break

        x += 1

    LOGGER.debug('Normalization of (%g, %g, %g) summed %d densities', alpha, beta, gamma, x + 1)
    return total.value
