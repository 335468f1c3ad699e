"""Kernel selection: compiled polynomial kernels with pure-Python fallback.

Set the environment variable ``AK_PURE_PYTHON=1`` to force the pure-Python
kernels even when the compiled extension is available.  ``BACKEND`` records
which implementation is active ("c" or "python").
"""

import os

if os.environ.get("AK_PURE_PYTHON"):
    from arikikoike._poly_py import padd, pmul, pneg, pscale, pshift

    BACKEND = "python"
else:
    try:
        from arikikoike._poly_c import padd, pmul, pneg, pscale, pshift

        BACKEND = "c"
    except ImportError:
        from arikikoike._poly_py import padd, pmul, pneg, pscale, pshift

        BACKEND = "python"

__all__ = ["padd", "pmul", "pneg", "pscale", "pshift", "BACKEND"]
