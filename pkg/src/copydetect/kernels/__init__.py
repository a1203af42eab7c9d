"""Hot numeric kernels with a numba path and a pure-numpy fallback.

The numba path is used when numba imports cleanly, unless the environment
variable ``COPYDETECT_NO_NUMBA`` is set to a non-empty value other than
``0``.  Both paths consume identical inputs; ``sample_patterns`` returns
bit-identical results on either path.
"""

import os

from . import _numpy as numpy_impl

numba_impl = None
if os.environ.get("COPYDETECT_NO_NUMBA", "") in ("", "0"):
    try:
        from . import _numba as numba_impl
    except ImportError:  # pragma: no cover - numba is a declared dependency
        numba_impl = None

_impl = numba_impl if numba_impl is not None else numpy_impl

#: Name of the active backend, ``"numba"`` or ``"numpy"``.
BACKEND = "numba" if _impl is numba_impl else "numpy"

combine_children = _impl.combine_children
sample_patterns = _impl.sample_patterns

__all__ = ["BACKEND", "combine_children", "sample_patterns", "numpy_impl", "numba_impl"]
