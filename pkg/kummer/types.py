"""The module contains the types used throughout Kummer."""

from collections.abc import Callable
from typing import Any, TypeVar

Func = TypeVar('Func', bound=Callable[..., Any])
