"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``HOLESCOPE_BACKEND=python`` to force the fallback.
"""

import os

from . import _pykernels

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKENDS = {"python": _pykernels}
if _compiled is not None:
    BACKENDS["compiled"] = _compiled

if os.environ.get("HOLESCOPE_BACKEND", "").lower() == "python" or _compiled is None:
    DEFAULT = "python"
else:
    DEFAULT = "compiled"


def get(name=None):
    name = name or DEFAULT
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}") from None
