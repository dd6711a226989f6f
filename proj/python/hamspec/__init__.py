"""Python bindings for the hamspec toolkit.

The compiled extension lives next to this package in an installed wheel. In a
plain CMake build tree it is found through the HAMSPEC_MODULE_DIR environment
variable instead, which the ctest harness sets to the build directory.
"""

import os
import sys

try:
    from . import _hamspec as _impl  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - build-tree fallback
    _dir = os.environ.get("HAMSPEC_MODULE_DIR")
    if not _dir:
        raise
    if _dir not in sys.path:
        sys.path.insert(0, _dir)
    import _hamspec as _impl  # type: ignore[no-redef]

_EXPORTED = [name for name in dir(_impl) if not name.startswith("_")]
globals().update({name: getattr(_impl, name) for name in _EXPORTED})

__all__ = list(_EXPORTED)
__version__ = "1.0.0"
