"""Hot-kernel dispatch: numba @njit loops by default, pure-numpy fallback.

Set BOXDYN_DISABLE_NUMBA=1 to force the numpy path (it is also used
automatically when numba cannot be imported).  Both paths produce
bit-identical results; see benchmarks/bench_kernels.py for the speed gap.
"""

import os

from . import _vec
from ._vec import (  # noqa: F401  (re-exported vectorized helpers)
    abs_lo_hi,
    add_down,
    add_up,
    base_image,
    fiber_image,
    imul,
    mul_down,
    mul_up,
    sqrt_down,
    sqrt_up,
    sub_down,
    sub_up,
    validate_edges,
    weights_base,
    weights_fiber,
)

_flag = os.environ.get("BOXDYN_DISABLE_NUMBA", "").strip()
if _flag not in ("", "0"):
    from . import _numpy_impl as _impl

    NUMBA_ENABLED = False
else:
    try:
        from . import _numba_impl as _impl

        NUMBA_ENABLED = True
    except ImportError:
        from . import _numpy_impl as _impl

        NUMBA_ENABLED = False

base_edges = _impl.base_edges
fiber_edges = _impl.fiber_edges
bellman_ford_passes = _impl.bellman_ford_passes
karp_table = _impl.karp_table
