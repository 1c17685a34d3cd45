"""The module contains the tests for the settings and the logging setup."""

# ruff: noqa: ANN001, ANN101, ANN201

import logging

from kummer.conf import LazySettings, Settings, settings
from kummer.core.chf import ChfParams
from kummer.core.constants import Method
from kummer.core.exceptions import ImproperlyConfigured
from kummer.core.series import evaluate
from kummer.test.base import BaseTestCase
from kummer.test.utils import override_settings
from kummer.utils.log import configure_logging


class SettingsTests(BaseTestCase):
    """The class implements the tests for the settings."""

    def test_defaults(self):
        """Tests the case when no settings module is specified."""

        defaults = Settings(None)

        self.assertEqual(defaults.DEFAULT_EPS, 1e-12)
        self.assertEqual(defaults.DEFAULT_VARIANT, 't2.5')
        self.assertEqual(defaults.ROI_MIN_Z, 50.0)
        self.assertEqual(defaults.explicit_settings, set())

    def test_settings_module(self):
        """Tests the case when the settings come from a module."""

        module_settings = Settings('tests.settings')

        self.assertEqual(module_settings.REFERENCE_MAX_TERMS, 20_000_000)
        self.assertEqual(module_settings.IC_MAX_TERMS, 1_000_000)
        self.assertEqual(module_settings.explicit_settings, {'REFERENCE_MAX_TERMS'})

    def test_configure(self):
        """Tests the case when the settings are configured programmatically."""

        lazy = LazySettings()
        self.assertFalse(lazy.configured)

        lazy.configure(DEFAULT_EPS=1e-9)

        self.assertTrue(lazy.configured)
        self.assertEqual(lazy.DEFAULT_EPS, 1e-9)
        self.assertEqual(lazy.DEFAULT_VARIANT, 't2.5')

    def test_configure_errors(self):
        """Tests the case when the configured values are invalid."""

        for options in (
            {'IC_MAX_TERMS': 0},
            {'IC_MAX_TERMS': 10.5},
            {'ROI_MIN_Z': -1.0},
            {'DEFAULT_VARIANT': 't4'},
            {'ROI_FALLBACK_VARIANT': None},
            {'DEFAULT_EPS': 1.0},
            {'LOGGING': []},
        ):
            with self.assertRaises(ImproperlyConfigured, msg=str(options)):
                LazySettings().configure(**options)

    def test_lowercase_setting(self):
        """Tests the case when a setting name is not uppercase."""

        with self.assertRaises(TypeError):
            LazySettings().configure(default_eps=1e-9)

    def test_repr(self):
        """Tests the case when the settings are printed."""

        lazy = LazySettings()
        self.assertEqual(repr(lazy), '<LazySettings [Unevaluated]>')

        lazy.configure()
        self.assertEqual(repr(lazy), '<LazySettings "defaults">')


class OverrideSettingsTests(BaseTestCase):
    """The class implements the tests for overriding the settings in tests."""

    @override_settings(DEFAULT_EPS=1e-6)
    def test_decorator(self):
        """Tests the case when the settings are overridden by a decorator."""

        self.assertEqual(settings.DEFAULT_EPS, 1e-6)
        self.assertEqual(settings.DEFAULT_VARIANT, 't2.5')

    def test_context_manager(self):
        """Tests the case when the settings are overridden by a context manager."""

        original = settings.DEFAULT_EPS
        with override_settings(DEFAULT_EPS=1e-6):
            self.assertEqual(settings.DEFAULT_EPS, 1e-6)

        self.assertEqual(settings.DEFAULT_EPS, original)

    def test_gate_threshold(self):
        """Tests the case when the RoI threshold is raised above z."""

        params = ChfParams(2, 3, 100)

        self.assertIs(evaluate(params).method, Method.ROI)
        with override_settings(ROI_MIN_Z=200.0):
            self.assertIs(evaluate(params).method, Method.INCREMENT_CHECK)

    def test_default_variant(self):
        """Tests the case when the default variant is overridden."""

        with override_settings(DEFAULT_VARIANT='t1.5'):
            result = evaluate(ChfParams(2, 3, 100))

        self.assertEqual(result.bounds.variant.value, 't1.5')

    def test_non_callable(self):
        """Tests the case when something other than a function is decorated."""

        with self.assertRaises(TypeError):
            override_settings(DEFAULT_EPS=1e-6)(42)


class LoggingTests(BaseTestCase):
    """The class implements the tests for the logging setup."""

    def tearDown(self):
        """Restores the default logging setup."""

        configure_logging({})

    def test_default_level(self):
        """Tests the case when the logging is configured with the defaults."""

        configure_logging({})

        self.assertEqual(logging.getLogger('kummer').level, logging.WARNING)

    def test_verbose(self):
        """Tests the case when the diagnostics are requested."""

        configure_logging({}, verbose=True)

        self.assertEqual(logging.getLogger('kummer').level, logging.DEBUG)

    def test_user_settings(self):
        """Tests the case when the logging settings are given."""

        configure_logging({
            'version': 1,
            'disable_existing_loggers': False,
            'loggers': {'kummer': {'level': 'ERROR'}},
        })

        self.assertEqual(logging.getLogger('kummer').level, logging.ERROR)

    def test_fallback_is_logged(self):
        """Tests the case when the RoI falls back to another variant."""

        with self.assertLogs('kummer.core.series', logging.INFO) as logs:
            evaluate(ChfParams(2, 3, 100), 1e-40, 't3')

        self.assertTrue(any('retrying' in message for message in logs.output))
