"""The module contains the tests for the series term algebra."""

# ruff: noqa: ANN001, ANN101, ANN201

import math

from hypothesis import given
from hypothesis import strategies as st

from kummer.core.chf import (
    ChfParams,
    SignedLog,
    _log_term_by_product,
    kummer_reflect,
    log_term,
    reflect_params,
    term_ratio,
)
from kummer.core.exceptions import InvalidParams, NotApplicable
from kummer.test.base import BaseTestCase
from tests.base import PROPERTY_SETTINGS, positive_reals


class ChfParamsTests(BaseTestCase):
    """The class implements the tests for the parameters of M(a, b, z)."""

    def test_b_zero_or_negative_integer(self):
        """Tests the case when b is zero or a negative integer."""

        for b in (0, -1, -3.0):
            with self.assertRaises(InvalidParams):
                ChfParams(1, b, 2)

    def test_non_finite_or_non_real_values(self):
        """Tests the case when a parameter is not a finite real number."""

        for params in ((math.nan, 1, 1), (1, math.inf, 1), (1, 1, '2'), (True, 1, 1)):
            with self.assertRaises(InvalidParams):
                ChfParams(*params)

    def test_invalid_params_is_value_error(self):
        """Tests the case when the invalid parameters are caught as ValueError."""

        with self.assertRaises(ValueError):
            ChfParams(1, -2, 1)

    def test_coercion_and_termination(self):
        """Tests the case when the parameters are given as integers."""

        params = ChfParams(-2, 3, 7)

        self.assertIsInstance(params.a, float)
        self.assertTrue(params.terminates)
        self.assertFalse(ChfParams(-2.5, 3, 7).terminates)


class SignedLogTests(BaseTestCase):
    """The class implements the tests for the signed-log numbers."""

    def test_from_float(self):
        """Tests the case when a double is converted to a signed log."""

        value = SignedLog.from_float(-2.0)

        self.assertEqual(value.sign, -1)
        self.assertAlmostEqual(value.log_mag, math.log(2))
        self.assertTrue(SignedLog.from_float(0.0).is_zero)

    def test_to_float_out_of_range(self):
        """Tests the case when the magnitude exceeds the floating-point range."""

        self.assertEqual(SignedLog(1, 1000.0).to_float(), math.inf)
        self.assertEqual(SignedLog(-1, 1000.0).to_float(), -math.inf)
        self.assertEqual(SignedLog(1, -1000.0).to_float(), 0.0)

    def test_arithmetic(self):
        """Tests the case when signed logs are multiplied and divided."""

        product = SignedLog(-1, 2.0) * SignedLog(-1, 3.0)
        quotient = SignedLog(1, 2.0) / SignedLog(-1, 3.0)

        self.assertEqual(product, SignedLog(1, 5.0))
        self.assertEqual(quotient, SignedLog(-1, -1.0))
        self.assertTrue((SignedLog.zero() * SignedLog(1, 3.0)).is_zero)
        with self.assertRaises(ZeroDivisionError):
            SignedLog.one() / SignedLog.zero()

    def test_invalid_values(self):
        """Tests the case when a signed log is constructed inconsistently."""

        for sign, log_mag in ((2, 0.0), (0, 1.0), (1, math.inf)):
            with self.assertRaises(ValueError):
                SignedLog(sign, log_mag)


class TermAlgebraTests(BaseTestCase):
    """The class implements the tests for the terms of the series."""

    def test_term_ratio(self):
        """Tests the case when a = b, so the ratio is z / (n + 1)."""

        params = ChfParams(1, 1, 1)

        self.assertEqual(term_ratio(params, 0), 1.0)
        self.assertEqual(term_ratio(params, 3), 0.25)

    def test_log_term_for_equal_a_and_b(self):
        """Tests the case when a = b, so m_n = z^n / n!."""

        params = ChfParams(3.7, 3.7, 100)
        for n in (1, 10, 100, 250):
            expected = n * math.log(100) - math.lgamma(n + 1)
            self.assertLogClose(log_term(params, n), expected, 1e-13)

    def test_log_term_first_term(self):
        """Tests the case when the first term is requested."""

        self.assertEqual(log_term(ChfParams(-0.5, -5.5, -3), 0), SignedLog.one())

    def test_log_term_sign_for_negative_z(self):
        """Tests the case when z < 0, so the terms alternate."""

        params = ChfParams(1, 1, -2)

        self.assertEqual(log_term(params, 3).sign, -1)
        self.assertEqual(log_term(params, 4).sign, 1)

    def test_log_term_of_terminating_series(self):
        """Tests the case when a is a non-positive integer."""

        params = ChfParams(-2, 3, 7)
        expected = (-2) * (-1) / (3 * 4) * 7 ** 2 / 2

        self.assertTrue(log_term(params, 3).is_zero)
        self.assertRelClose(log_term(params, 2).to_float(), expected, 1e-14)

    def test_log_term_for_negative_b(self):
        """Tests the case when b is negative, so the sign is tracked factor by factor."""

        params = ChfParams(0.5, -5.5, 10)
        n = 8
        expected = math.prod((0.5 + i) / (-5.5 + i) for i in range(n)) * 10 ** n / math.factorial(n)

        self.assertRelClose(log_term(params, n).to_float(), expected, 1e-13)

    def test_log_term_negative_index(self):
        """Tests the case when a negative index is passed."""

        with self.assertRaises(ValueError):
            log_term(ChfParams(1, 1, 1), -1)

    @PROPERTY_SETTINGS
    @given(
        a=positive_reals(0.1, 50),
        b=positive_reals(0.1, 50),
        z=positive_reals(0.1, 500),
        n=st.integers(min_value=0, max_value=200),
    )
    def test_log_term_consistent_with_ratio(self, a, b, z, n):
        """Tests the case when consecutive log terms differ by the log of the ratio."""

        params = ChfParams(a, b, z)
        current, following = log_term(params, n), log_term(params, n + 1)
        difference = following.log_mag - current.log_mag

        self.assertAlmostEqual(
            difference,
            math.log(term_ratio(params, n)),
            delta=1e-9 * max(1.0, abs(current.log_mag)),
        )

    @PROPERTY_SETTINGS
    @given(
        a=positive_reals(1, 50),
        b=positive_reals(0.1, 50),
        z=positive_reals(0.1, 500),
        n=st.integers(min_value=0, max_value=500),
    )
    def test_term_ratio_decreasing(self, a, b, z, n):
        """Tests the case when a >= 1 and b > 0, so the ratio decreases in n."""

        params = ChfParams(a, b, z)

        self.assertLess(term_ratio(params, n + 1), term_ratio(params, n))

    @PROPERTY_SETTINGS
    @given(
        a=positive_reals(0.1, 50),
        b=positive_reals(0.1, 50),
        z=positive_reals(0.1, 500),
        negative=st.booleans(),
        n=st.integers(min_value=1, max_value=1000),
    )
    def test_log_term_paths_agree(self, a, b, z, negative, n):
        """Tests the case when the log-gamma formula is compared to the product
        of the factors.
        """

        params = ChfParams(a, b, -z if negative else z)
        expected = _log_term_by_product(params, n)

        self.assertLogClose(log_term(params, n), expected.log_mag, 1e-10, sign=expected.sign)


class KummerReflectionTests(BaseTestCase):
    """The class implements the tests for Kummer's transformation."""

    def test_reflect(self):
        """Tests the case when the reflection is applied to z < 0."""

        params, scale = kummer_reflect(ChfParams(1, 2, -3))

        self.assertEqual(params, ChfParams(1, 2, 3))
        self.assertEqual(scale, SignedLog(1, -3.0))

    def test_reflect_non_negative_z(self):
        """Tests the case when the reflection is applied to z >= 0."""

        for z in (0, 5):
            with self.assertRaises(NotApplicable):
                kummer_reflect(ChfParams(1, 2, z))

    @PROPERTY_SETTINGS
    @given(
        a=positive_reals(-20, 20),
        b=positive_reals(0.1, 20),
        z=positive_reals(-300, 300),
    )
    def test_reflect_params_is_involution(self, a, b, z):
        """Tests the case when the parameter mapping is applied twice."""

        params = ChfParams(a, b, z)
        twice = reflect_params(reflect_params(params))

        self.assertEqual((twice.b, twice.z), (params.b, params.z))
        self.assertAlmostEqual(twice.a, params.a, delta=1e-14 * max(abs(a), b))
