"""Kernel backend selection.

Uses the compiled ``_kernels`` extension when it was built, otherwise the
pure-Python ``_pykernels``.  Set ``SUPERTASK_PURE_PYTHON=1`` to force the
fallback.
"""
import os

from supertask import _pykernels

if os.environ.get("SUPERTASK_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from supertask import _kernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "python" if _impl is _pykernels else "compiled"

rho = _impl.rho
spigot_digits = _impl.spigot_digits
period_scan = _impl.period_scan


def backends():
    """Every importable kernel module, keyed by backend name."""
    found = {"python": _pykernels}
    try:
        from supertask import _kernels
    except ImportError:
        pass
    else:
        found["compiled"] = _kernels
    return found
