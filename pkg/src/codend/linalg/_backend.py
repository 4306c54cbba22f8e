"""Select the elimination kernels at import time.

The compiled extension is used when it has been built; setting
``CODEND_PURE_PYTHON=1`` forces the pure-Python kernels.
"""

from __future__ import annotations

import logging
import os

from . import _kernels_py

log = logging.getLogger(__name__)

compiled = None
if not os.environ.get("CODEND_PURE_PYTHON"):
    try:
        from . import _kernels as compiled  # type: ignore[no-redef]
    except ImportError:  # pragma: no cover - depends on the build
        log.debug("compiled kernels unavailable, using pure Python")
        compiled = None

BACKEND = compiled.BACKEND if compiled is not None else _kernels_py.BACKEND


def echelon_dense(rows, ncols, reduce=False):
    if compiled is not None:
        try:
            return compiled.echelon_dense(rows, ncols, reduce)
        except OverflowError:
            pass
    return _kernels_py.echelon_dense(rows, ncols, reduce)


def echelon_sparse(rows, ncols, reduce=False):
    if compiled is not None:
        try:
            return compiled.echelon_sparse(rows, ncols, reduce)
        except OverflowError:
            pass
    return _kernels_py.echelon_sparse(rows, ncols, reduce)
