"""Kernel selection: compiled extension when available, pure Python otherwise.

Set LUDIGROUP_PURE=1 to force the pure fallback (used by the benchmark and
the kernel-equivalence tests).
"""

import os

if os.environ.get("LUDIGROUP_PURE") == "1":
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

IMPLEMENTATION = _impl.IMPLEMENTATION
compose = _impl.compose
invert = _impl.invert
permute_state = _impl.permute_state
bfs_slot = _impl.bfs_slot
