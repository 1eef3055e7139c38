"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module.  Setting ``QGONCAROV_PURE_PYTHON=1`` forces
the fallback.
"""

import os

if os.environ.get("QGONCAROV_PURE_PYTHON", "") not in ("", "0"):
    from qgoncarov._pykernels import *  # noqa: F401,F403
    BACKEND = "python"
else:
    try:
        from qgoncarov._ckernels import *  # noqa: F401,F403
        BACKEND = "cython"
    except ImportError:
        from qgoncarov._pykernels import *  # noqa: F401,F403
        BACKEND = "python"
