"""Kernel backend selection: compiled extension if available, else Python.

Set QDUALITY_PURE_PYTHON=1 to force the pure-Python backend even when the
extension is built.  Both backends implement identical arithmetic; see
``reference`` for the frozen stream contract.
"""

import os

from . import reference

if os.environ.get("QDUALITY_PURE_PYTHON"):
    fast = None
else:
    try:
        from . import _fast as fast  # type: ignore[attr-defined]
    except ImportError:
        fast = None

active = fast if fast is not None else reference
BACKEND_NAME = active.BACKEND_NAME
