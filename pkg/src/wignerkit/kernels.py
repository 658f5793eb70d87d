"""Backend selection for the hot numerical kernels.

The compiled extension is used when it imported successfully at build time;
otherwise the pure-NumPy module takes over.  Set ``WIGNERKIT_PURE_PYTHON=1``
to force the fallback (used by the benchmark and the backend-parity tests).
"""

import os

from . import _kernels_py

if os.environ.get("WIGNERKIT_PURE_PYTHON", "").strip() in ("1", "true", "yes"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND
contract_real = _impl.contract_real
advect_rhs = _impl.advect_rhs


def available_backends():
    """Names of the kernel backends importable in this environment."""
    names = ["python"]
    try:
        from . import _kernels  # noqa: F401
    except ImportError:
        pass
    else:
        names.insert(0, "compiled")
    return names
