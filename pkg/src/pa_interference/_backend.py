"""Pick the compiled kernels when importable, else the numpy fallback.

Set ``PA_INTERFERENCE_PURE=1`` to force the fallback.
"""

import os

from . import _purepy

if os.environ.get("PA_INTERFERENCE_PURE", "") not in ("", "0"):
    _impl = _purepy
else:
    try:
        from . import _kernels as _impl
    except ImportError:  # extension not built
        _impl = _purepy

BACKEND = "python" if _impl is _purepy else "compiled"

lowest_energy = _impl.lowest_energy
lowest_energies = _impl.lowest_energies
dense_scan_min = _impl.dense_scan_min
