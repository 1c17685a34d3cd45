"""The module contains facilities for configuring logging in Kummer."""

import logging
import logging.config
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Any, Final

DEFAULT_LOGGING: 'Final' = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'standard': {
            'format': '{levelname}: {name}: {asctime}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'formatter': 'standard',
            'level': 'DEBUG',
            'class': 'logging.StreamHandler',
        },
    },
    'loggers': {
        'kummer': {
            'handlers': ['console'],
            'level': 'WARNING',
        },
    },
}


def configure_logging(logging_settings: dict[str, 'Any'], *, verbose: bool = False) -> None:
    """Configures logging with either the given settings or default settings.
    The verbose flag lowers the level of the library logger to DEBUG.
    """

    logging.config.dictConfig(DEFAULT_LOGGING)

    if logging_settings:
        logging.config.dictConfig(logging_settings)

    if verbose:
        logging.getLogger('kummer').setLevel(logging.DEBUG)
