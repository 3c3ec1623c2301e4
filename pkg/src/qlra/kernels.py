"""Backend selection for the batched Born-table and Gram kernels.

The compiled extension is used when it was built and ``QLRA_PURE_PYTHON``
is unset; otherwise the numpy implementation is used.
"""
import os

from . import _kernels_py

try:
    if os.environ.get("QLRA_PURE_PYTHON"):
        raise ImportError("compiled kernels disabled by QLRA_PURE_PYTHON")
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

BACKENDS = {"python": _kernels_py}
if _compiled is not None:
    BACKENDS["compiled"] = _compiled

BACKEND = "compiled" if _compiled is not None else "python"
_impl = BACKENDS[BACKEND]

born_tables = _impl.born_tables
gram_residual = _impl.gram_residual


def get_backend(name):
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}") from None
