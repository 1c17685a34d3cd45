"""The module contains the base class for the tests of Kummer."""

import math
import unittest
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing_extensions import Self

    from kummer.core.chf import SignedLog


class BaseTestCase(unittest.TestCase):
    """The class that subclasses unittest.TestCase to make it
    familiar with comparing floating-point results.
    """

    def assertRelClose(  # noqa: N802
        self: 'Self',
        actual: float,
        expected: float,
        rel_tol: float,
        msg: str | None = None,
    ) -> None:
        """Fails if actual differs from expected by more than
        rel_tol relative to expected.
        """

        if actual == expected:
            return

        error = abs(actual - expected) / abs(expected) if expected else abs(actual)
        if not error <= rel_tol:
            standard_msg = (
                f'{actual!r} != {expected!r} within the relative tolerance {rel_tol:g} '
                f'(relative error {error:.3g})'
            )
            self.fail(self._formatMessage(msg, standard_msg))

    def assertLogClose(  # noqa: N802
        self: 'Self',
        actual: 'SignedLog',
        expected_log: float,
        rel_tol: float,
        sign: int = 1,
        msg: str | None = None,
    ) -> None:
        """Fails if the signed log differs in sign or its log-magnitude
        differs from expected_log by more than rel_tol * max(1, |expected_log|).
        """

        self.assertEqual(actual.sign, sign, msg)
        error = abs(actual.log_mag - expected_log)
        if not error <= rel_tol * max(1.0, abs(expected_log)):
            standard_msg = (
                f'log {actual.log_mag!r} != {expected_log!r} within the relative tolerance '
                f'{rel_tol:g} (absolute error {error:.3g})'
            )
            self.fail(self._formatMessage(msg, standard_msg))

    def assertFinite(self: 'Self', value: float, msg: str | None = None) -> None:  # noqa: N802
        """Fails if the value is infinite or NaN."""

        if not math.isfinite(value):
            self.fail(self._formatMessage(msg, f'{value!r} is not finite'))
