"""Python bindings for the dead-time photon-counting channel library."""

from ._core import *  # noqa: F401,F403
from ._core import __all__ as _core_all

__all__ = list(_core_all)
