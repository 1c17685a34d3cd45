"""
Default Kummer settings. Override these using the module specified via
the KUMMER_SETTINGS_MODULE environment variable or settings.configure().
"""

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Any

CSV_FLOAT_FORMAT = '.15e'

DEFAULT_EPS = 1e-12

DEFAULT_VARIANT = 't2.5'

IC_MAX_TERMS = 1_000_000

LOGGING: dict[str, 'Any'] = {}

PB_TAIL_SIGMAS = 10.0

PB_MAX_VARIATE = 100_000_000

REFERENCE_MAX_TERMS = 10_000_000

ROI_EDGE_CHECK = True

ROI_FALLBACK_VARIANT = 't1.5'

ROI_MIN_Z = 50.0
