"""The module contains the tests for the Poisson-Beta distribution."""

# ruff: noqa: ANN001, ANN101, ANN201

import math
import os
import unittest

from hypothesis import given
from hypothesis import strategies as st
from scipy.special import gammainc

from kummer.core.constants import Method
from kummer.core.exceptions import InvalidParams, NoConvergence, SeriesOverflow
from kummer.core.poisson_beta import (
    PbParams,
    log_prefactor,
    pb_evaluate,
    pb_log_density,
    pb_normalization,
)
from kummer.core.series import increment_check
from kummer.test.base import BaseTestCase
from kummer.test.utils import override_settings
from tests.base import PROPERTY_SETTINGS, positive_reals

_GRID = (0.5, 1.0, 5.0)


def uniform_log_density(gamma, x):
    """Returns the log density for alpha = beta = 1, which is
    P(x + 1, gamma) / gamma with P the regularized lower incomplete gamma.
    """

    return math.log(float(gammainc(x + 1, gamma))) - math.log(gamma)


class PbParamsTests(BaseTestCase):
    """The class implements the tests for the parameters of the distribution."""

    def test_invalid_shape_or_rate(self):
        """Tests the case when alpha, beta or gamma is not positive and finite."""

        for args in ((0, 1, 1), (1, -1, 1), (1, 1, math.inf), (1, 1, math.nan), ('1', 1, 1)):
            with self.assertRaises(InvalidParams):
                PbParams(*args)

    def test_invalid_variate(self):
        """Tests the case when x is not a nonnegative integer."""

        for x in (-1, 1.5, True, math.inf):
            with self.assertRaises(InvalidParams):
                PbParams(1, 1, 1, x)

    def test_chf_params(self):
        """Tests the case when the parameters of M are derived."""

        p = PbParams(2, 3, 5000, 1667.0)

        self.assertEqual(p.x, 1667)
        self.assertEqual(
            (p.chf_params.a, p.chf_params.b, p.chf_params.z),
            (3.0, 1672.0, 5000.0),
        )


class PbLogDensityTests(BaseTestCase):
    """The class implements the tests for the log density."""

    def test_zero_variate(self):
        """Tests the case when alpha = beta = gamma = 1 and x = 0."""

        log_density = pb_log_density(PbParams(1, 1, 1, 0), 1e-15)

        self.assertRelClose(log_density, math.log(-math.expm1(-1)), 1e-13)

    def test_uniform_mixing(self):
        """Tests the case when alpha = beta = 1, so the rate is uniform."""

        for gamma, x in ((50.0, 0), (50.0, 30), (500.0, 10), (500.0, 400), (5000.0, 4900)):
            log_density = pb_log_density(PbParams(1, 1, gamma, x))
            self.assertAlmostEqual(
                log_density,
                uniform_log_density(gamma, x),
                delta=1e-9,
                msg=f'gamma = {gamma}, x = {x}',
            )

    def test_small_rate(self):
        """Tests the case when gamma is tiny, so almost all the mass is at 0."""

        self.assertAlmostEqual(pb_log_density(PbParams(2, 3, 1e-10)), 0.0, delta=1e-9)

    def test_prefactor_of_zero_variate(self):
        """Tests the case when x = 0, so the prefactor is e^-gamma."""

        self.assertEqual(log_prefactor(PbParams(2, 3, 7.5)), -7.5)

    def test_large_rate(self):
        """Tests the case when increment-and-check overflows but the RoI does not."""

        p = PbParams(2, 3, 5000, 1667)
        evaluation = pb_evaluate(p)

        self.assertFinite(evaluation.log_density)
        self.assertLess(evaluation.log_density, 0)
        self.assertIs(evaluation.chf.method, Method.ROI)
        with self.assertRaises(SeriesOverflow):
            increment_check(p.chf_params, 1e-12)

    def test_methods_agree_at_handoff(self):
        """Tests the case when gamma is just above the RoI threshold and x
        crosses gamma - alpha - beta, where the gate hands over to
        increment-and-check.
        """

        methods = set()
        for alpha, beta in ((0.5, 0.5), (1.0, 5.0), (5.0, 1.0)):
            for x in (0, 50, 150, 180, 190, 193, 195, 198, 200, 205):
                p = PbParams(alpha, beta, 200, x)
                auto = pb_evaluate(p, 1e-12)
                ic = pb_evaluate(p, 1e-12, force_method=Method.INCREMENT_CHECK)
                methods.add(auto.chf.method)
                self.assertAlmostEqual(auto.log_density, ic.log_density, delta=1e-10, msg=str(p))

        self.assertEqual(methods, {Method.ROI, Method.INCREMENT_CHECK})

    @PROPERTY_SETTINGS
    @given(
        alpha=positive_reals(0.1, 20),
        beta=positive_reals(0.1, 20),
        gamma=positive_reals(0.1, 2000),
        x=st.integers(min_value=0, max_value=3000),
    )
    def test_density_is_probability(self, alpha, beta, gamma, x):
        """Tests the case when the density lies in (0, 1], so its log is finite
        and not positive.
        """

        log_density = pb_log_density(PbParams(alpha, beta, gamma, x))

        self.assertFinite(log_density)
        self.assertLessEqual(log_density, 1e-12)


class PbNormalizationTests(BaseTestCase):
    """The class implements the tests for the total mass of the distribution."""

    def test_small_rates(self):
        """Tests the case when the rate is small."""

        self.assertAlmostEqual(pb_normalization(1, 1, 1, 1e-12), 1.0, delta=1e-11)
        self.assertAlmostEqual(pb_normalization(5, 0.5, 50, 1e-10), 1.0, delta=1e-9)

    def test_grid(self):
        """Tests the case when the shapes are varied at gamma = 100 and 1000."""

        for gamma in (100.0, 1000.0):
            for alpha in _GRID:
                for beta in _GRID:
                    total = pb_normalization(alpha, beta, gamma, 1e-12)
                    self.assertAlmostEqual(
                        total, 1.0, delta=1e-9, msg=f'({alpha}, {beta}, {gamma})',
                    )

    def test_large_rate(self):
        """Tests the case when gamma = 10^4."""

        self.assertAlmostEqual(pb_normalization(1, 1, 1e4, 1e-12), 1.0, delta=1e-9)

    def test_very_large_rate(self):
        """Tests the case when gamma = 2 * 10^5 and alpha = beta = 1."""

        self.assertAlmostEqual(pb_normalization(1, 1, 2e5, 1e-12), 1.0, delta=1e-9)

    @unittest.skipUnless(os.environ.get('KUMMER_SLOW_TESTS'), 'set KUMMER_SLOW_TESTS to run')
    def test_very_large_rate_grid(self):
        """Tests the case when the shapes are varied at gamma = 2 * 10^5."""

        for alpha in _GRID:
            for beta in _GRID:
                total = pb_normalization(alpha, beta, 2e5, 1e-12)
                self.assertAlmostEqual(total, 1.0, delta=1e-9, msg=f'({alpha}, {beta})')

    @override_settings(PB_MAX_VARIATE=10)
    def test_no_convergence(self):
        """Tests the case when the variate limit is below the bulk of the mass."""

        with self.assertRaises(NoConvergence):
            pb_normalization(1, 1, 100)
