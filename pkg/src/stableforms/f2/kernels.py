"""Select the GF(2) kernel implementation at import time.

The compiled Cython module is preferred when built; the pure-Python
fallback is always available.  Set STABLEFORMS_F2_IMPL=python to force
the fallback (used by the benchmark for side-by-side timing).
"""

import os

if os.environ.get("STABLEFORMS_F2_IMPL") == "python":
    from . import _fallback as _impl

    IMPL = "python"
else:
    try:
        from . import _kernels as _impl

        IMPL = "compiled"
    except ImportError:
        from . import _fallback as _impl

        IMPL = "python"

rank = _impl.rank
rref = _impl.rref
enumerate_rref = _impl.enumerate_rref
count_decomposable_nonzero = _impl.count_decomposable_nonzero
