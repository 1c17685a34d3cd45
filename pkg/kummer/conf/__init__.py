# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions are
# met:
#
#     * Redistributions of source code must retain the above copyright
# notice, this list of conditions and the following disclaimer.
#     * Redistributions in binary form must reproduce the above
# copyright notice, this list of conditions and the following disclaimer
# in the documentation and/or other materials provided with the
# distribution.
#     * Neither the name of Google Inc. nor the names of its
# contributors may be used to endorse or promote products derived from
# this software without specific prior written permission.
#
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS
# "AS IS" AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT
# LIMITED TO, THE IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR
# A PARTICULAR PURPOSE ARE DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT
# OWNER OR CONTRIBUTORS BE LIABLE FOR ANY DIRECT, INDIRECT, INCIDENTAL,
# SPECIAL, EXEMPLARY, OR CONSEQUENTIAL DAMAGES (INCLUDING, BUT NOT
# LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR SERVICES; LOSS OF USE,
# DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER CAUSED AND ON ANY
# THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY, OR TORT
# (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE
# OF THIS SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.
"""
The module contains facilities for working with the settings of Kummer.

kummer.conf.global_settings acts as a source for the settings and their
default values. Then, the values can be overridden using the module
specified via the KUMMER_SETTINGS_MODULE environment variable, or by calling
settings.configure(). When neither is done, the defaults are used as is.

See the global_settings.py for a list of all possible settings.
"""

import importlib
import math
import os
from typing import TYPE_CHECKING

from kummer.conf import global_settings
from kummer.core.constants import TaylorVariant
from kummer.core.exceptions import ImproperlyConfigured

if TYPE_CHECKING:
    from typing import Any

    from typing_extensions import Self

_EMPTY = object()

_KUMMER_SETTINGS_MODULE = 'KUMMER_SETTINGS_MODULE'

_POSITIVE_INT_SETTINGS = (
    'IC_MAX_TERMS',
    'PB_MAX_VARIATE',
    'REFERENCE_MAX_TERMS',
)

_POSITIVE_REAL_SETTINGS = (
    'PB_TAIL_SIGMAS',
    'ROI_MIN_Z',
)

_VARIANT_SETTINGS = (
    'DEFAULT_VARIANT',
    'ROI_FALLBACK_VARIANT',
)


class GlobalSettings:
    """The class implements a simple interface for accessing
    the global settings.
    """

    def __getattr__(self: 'Self', name: str) -> 'Any':
        return getattr(global_settings, name)

    def __repr__(self: 'Self') -> str:
        return f'<{self.__class__.__name__}>'


class UserSettingsHolder:
    """The class holds the settings set on it and looks up the rest
    in the settings it wraps.
    """

    def __init__(self: 'Self', default_settings: 'Any') -> None:
        self.__dict__['default_settings'] = default_settings

    def __getattr__(self: 'Self', name: str) -> 'Any':
        if not name.isupper():
            raise AttributeError(name)

        return getattr(self.default_settings, name)

    def __repr__(self: 'Self') -> str:
        return f'<{self.__class__.__name__}>'


class LazySettings:
    """The class implements a lazy proxy for Kummer settings. The settings
    are loaded the first time they are needed from the module specified via
    the KUMMER_SETTINGS_MODULE environment variable, if any.
    """

    _wrapped: 'Settings | GlobalSettings | object' = _EMPTY

    def __init__(self: 'Self') -> None:
        self.__dict__['_wrapped'] = _EMPTY

    def _setup(self: 'Self') -> None:
        """Loads the settings module specified via the KUMMER_SETTINGS_MODULE
        environment variable, falling back to the defaults.
        """

        self._wrapped = Settings(os.environ.get(_KUMMER_SETTINGS_MODULE) or None)

    def __repr__(self: 'Self') -> str:
        if self._wrapped is _EMPTY:
            return '<LazySettings [Unevaluated]>'

        name = getattr(self._wrapped, 'settings_module_name', None) or 'defaults'
        return f'<LazySettings "{name}">'

    def __getattr__(self: 'Self', name: str) -> 'Any':
        """Returns the value of a setting and caches it in self.__dict__."""

        if self._wrapped is _EMPTY:
            self._setup()

        val = getattr(self._wrapped, name)
        self.__dict__[name] = val

        return val

    def __setattr__(self: 'Self', name: str, value: 'Any') -> None:
        """
        Sets the value of setting. Clears all cached values if _wrapped changes
        (@override_settings does this) or clears single values when set.
        """

        if name == '_wrapped':
            self.__dict__.clear()
            self.__dict__['_wrapped'] = value
            return

        self.__dict__.pop(name, None)
        if self._wrapped is _EMPTY:
            self._setup()

        setattr(self._wrapped, name, value)

    def __delattr__(self: 'Self', name: str) -> None:
        """Deletes a setting and clears it from cache if needed."""

        if name == '_wrapped':
            msg = "can't delete _wrapped."
            raise TypeError(msg)

        if self._wrapped is _EMPTY:
            self._setup()

        delattr(self._wrapped, name)
        self.__dict__.pop(name, None)

    @property
    def configured(self: 'Self') -> bool:
        """Whether the settings have already been loaded."""

        return self._wrapped is not _EMPTY

    def configure(self: 'Self', **options: 'Any') -> None:
        """Configures the settings programmatically on top of the defaults."""

        wrapped = Settings(None)
        for name, value in options.items():
            if not name.isupper():
                msg = f'Setting {name!r} must be uppercase.'
                raise TypeError(msg)

            setattr(wrapped, name, value)
            wrapped.explicit_settings.add(name)

        wrapped.check()
        self._wrapped = wrapped


class Settings:
    """The class implements the interface for working with the settings of
    Kummer, the defaults being overridden by an optional settings module.
    """

    def __init__(self: 'Self', settings_module: str | None) -> None:
        self.settings_module_name = settings_module
        self.explicit_settings: set[str] = set()

        # update this dict from global settings (but only for ALL_CAPS settings)
        for setting in dir(global_settings):
            if setting.isupper():
                setattr(self, setting, getattr(global_settings, setting))

        if settings_module is None:
            return

        module = importlib.import_module(settings_module)
        for setting in dir(module):
            if setting.isupper():
                setattr(self, setting, getattr(module, setting))
                self.explicit_settings.add(setting)

        self.check()

    def check(self: 'Self') -> None:
        """Checks the overridden settings for gross errors."""

        for name in _POSITIVE_INT_SETTINGS:
            value = getattr(self, name)
            if self._is_overridden(name) and (
                not isinstance(value, int) or isinstance(value, bool) or value <= 0
            ):
                msg = f"The '{name}' setting must be a positive integer."
                raise ImproperlyConfigured(msg)

        for name in _POSITIVE_REAL_SETTINGS:
            value = getattr(self, name)
            if self._is_overridden(name) and (
                not isinstance(value, int | float) or not math.isfinite(value) or value <= 0
            ):
                msg = f"The '{name}' setting must be a positive number."
                raise ImproperlyConfigured(msg)

        for name in _VARIANT_SETTINGS:
            if self._is_overridden(name):
                try:
                    TaylorVariant.parse(getattr(self, name))
                except (AttributeError, ValueError) as exc:
                    msg = f"The '{name}' setting must name a Taylor variant."
                    raise ImproperlyConfigured(msg) from exc

        if self._is_overridden('DEFAULT_EPS') and not 0 < self.DEFAULT_EPS < 1:  # type: ignore[attr-defined]
            msg = "The 'DEFAULT_EPS' setting must be in the open interval (0, 1)."
            raise ImproperlyConfigured(msg)

        if self._is_overridden('LOGGING') and not isinstance(
            self.LOGGING, dict,  # type: ignore[attr-defined]
        ):
            msg = "The 'LOGGING' setting must be a dict."
            raise ImproperlyConfigured(msg)

    def _is_overridden(self: 'Self', setting: str) -> bool:
        """Checks if the specified setting is overridden."""

        return setting in self.explicit_settings

    def __repr__(self: 'Self') -> str:
        return f"<{self.__class__.__name__} '{self.settings_module_name}'>"


settings = LazySettings()
