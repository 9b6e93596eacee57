"""Hot integer kernels, compiled when available.

The Cython extension ``_speedups`` is used when it was built and imports
cleanly; otherwise the pure-Python ``_pykernels`` are used. Set
``PARIKH_PURE=1`` to force the Python versions.
"""

import os

from . import _pykernels

_compiled = None
if not os.environ.get("PARIKH_PURE"):
    try:
        from . import _speedups as _compiled
    except ImportError:
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"

_I64_SAFE = 1 << 62


def _fits(base, periods, target):
    if len(target) > 64:
        return False
    top = max((*base, *target, *(v for p in periods for v in p)), default=0)
    return top < _I64_SAFE


def linear_member(base, periods, target):
    if _compiled is not None and _fits(base, periods, target):
        return _compiled.linear_member(base, periods, target)
    return _pykernels.linear_member(base, periods, target)


def closure_covers(available, roots, intros):
    if _compiled is not None and available < (1 << 64) and all(m < (1 << 64) for m in intros):
        return _compiled.closure_covers(available, roots, intros)
    return _pykernels.closure_covers(available, roots, intros)
