"""Scalar hot loops, compiled when the extension is built.

Set LERCHKIT_PURE_PYTHON=1 to force the Python implementation.
"""
import os

from . import _pykernels

py = _pykernels

if os.environ.get("LERCHKIT_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

lerch_series = _impl.lerch_series
hurwitz_em = _impl.hurwitz_em
lerch_negint = _impl.lerch_negint
eulerian_row = _pykernels.eulerian_row

__all__ = ["BACKEND", "lerch_series", "hurwitz_em", "lerch_negint", "eulerian_row", "py"]
