"""Backend selection for the hot loops.

The compiled module is used when it was built; otherwise, or when the
environment variable ``DCRYSTAL_PURE_PYTHON`` is set to a non-empty value,
the pure-Python reference is used.  ``BACKEND`` names the active choice.
"""

import os

from dcrystal._kernels import _pykernels

_compiled = None
if not os.environ.get("DCRYSTAL_PURE_PYTHON"):
    try:
        from dcrystal._kernels import _ckernels as _compiled
    except ImportError:
        _compiled = None

impl = _compiled if _compiled is not None else _pykernels
BACKEND = "cython" if _compiled is not None else "python"

reduce_runs = impl.reduce_runs
transit = impl.transit
transit_batch = impl.transit_batch
max_subset_sum = impl.max_subset_sum
max_subset_sum_batch = impl.max_subset_sum_batch
column_insert = impl.column_insert
domino_insert = impl.domino_insert


def available_backends():
    """Map backend name to module for every backend importable right now."""
    found = {"python": _pykernels}
    try:
        from dcrystal._kernels import _ckernels
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found
