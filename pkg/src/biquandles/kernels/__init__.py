"""Kernel backend selection.

The compiled extension (`_ckern`, built from ``_ckern.pyx``) is preferred
when importable; otherwise the pure-Python kernels are used.  Set
``BIQUANDLES_KERNELS=pure`` or ``=c`` to force a backend (``c`` raises if the
extension is missing).  Both backends expose the same functions and must
produce identical results; ``tests/test_backends.py`` enforces that.
"""

import os

from . import pure
from .pure import ALL_OPS, CLAUSE_IDS, OP_DOWN, OP_DOWNBAR, OP_UP, OP_UPBAR

_forced = os.environ.get("BIQUANDLES_KERNELS", "").strip().lower()

if _forced == "pure":
    _impl = pure
elif _forced in ("c", "compiled"):
    from . import _ckern as _impl
else:
    try:
        from . import _ckern as _impl
    except ImportError:
        _impl = pure

BACKEND = _impl.BACKEND

axiom_scan = _impl.axiom_scan
yang_baxter = _impl.yang_baxter
search_maps = _impl.search_maps
diagram_count = _impl.diagram_count


def available_backends():
    """Names of importable kernel backends."""
    names = ["pure"]
    try:
        from . import _ckern  # noqa: F401
        names.append("c")
    except ImportError:
        pass
    return names


def get_backend(name):
    """Return the kernel module for ``name`` ("pure" or "c")."""
    if name == "pure":
        return pure
    if name == "c":
        from . import _ckern
        return _ckern
    raise ValueError(f"unknown kernel backend {name!r}")


__all__ = [
    "ALL_OPS", "BACKEND", "CLAUSE_IDS", "OP_DOWN", "OP_DOWNBAR", "OP_UP",
    "OP_UPBAR", "available_backends", "axiom_scan", "diagram_count",
    "get_backend", "search_maps", "yang_baxter",
]
