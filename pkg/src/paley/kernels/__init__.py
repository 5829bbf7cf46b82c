"""Hot inner loops of the exhaustive scans.

Two interchangeable implementations share one contract: ``numba_impl``
(compiled with ``@njit``) and ``numpy_impl`` (vectorised, no compiler).
The environment variable ``PALEY_BACKEND`` picks one (``numba`` or
``numpy``); by default numba is used when it imports.
"""

import os

from . import numpy_impl

try:
    from . import numba_impl
except ImportError:  # pragma: no cover - numba missing
    numba_impl = None

BACKENDS = {"numpy": numpy_impl}
if numba_impl is not None:
    BACKENDS["numba"] = numba_impl


def backend_name():
    name = os.environ.get("PALEY_BACKEND", "").strip().lower()
    if not name:
        return "numba" if numba_impl is not None else "numpy"
    if name not in BACKENDS:
        raise ValueError(f"PALEY_BACKEND={name!r} not available; choose from {sorted(BACKENDS)}")
    return name


def _impl():
    return BACKENDS[backend_name()]


def count111(chi, sub, a, b, ws):
    return _impl().count111(chi, sub, a, b, ws)


def curve_stats(chi, sqcount, sub, exp, log, a, b, ws):
    return _impl().curve_stats(chi, sqcount, sub, exp, log, a, b, ws)


def find_c_table(chi, sub, neg, squares):
    return _impl().find_c_table(chi, sub, neg, squares)
