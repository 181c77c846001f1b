"""Kernel backend selection.

Prefers the compiled extension; falls back to the pure-Python mirror when
the extension is absent or PSEUDOHERM_FORCE_PYTHON is set (to anything
non-empty) in the environment at import time.
"""
import os

if os.environ.get("PSEUDOHERM_FORCE_PYTHON"):
    from . import _ql_py as _impl
else:
    try:
        from . import _ql as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _ql_py as _impl

BACKEND = _impl.BACKEND_NAME
ql_eigenvalues = _impl.ql_eigenvalues
lu_factor = _impl.lu_factor
lu_solve = _impl.lu_solve

__all__ = ["BACKEND", "ql_eigenvalues", "lu_factor", "lu_solve"]
