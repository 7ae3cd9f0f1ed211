"""Select the elimination kernel: compiled `_speedups` if built, else pure.

Set QSCHUR_PURE=1 in the environment to force the pure-Python kernel
(used by the benchmark to compare backends).
"""

import os

if os.environ.get("QSCHUR_PURE"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND
rank_of_int_rows = _impl.rank_of_int_rows
