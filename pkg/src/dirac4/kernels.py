"""Backend selection for the batched closed-form kernels.

The compiled extension is used when it was built; otherwise the numpy
implementation is used. Setting ``DIRAC4_KERNELS=python`` forces the numpy
path.
"""

import os

from . import _pykernels

if os.environ.get("DIRAC4_KERNELS", "").lower() == "python":
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = _impl.BACKEND
compose = _impl.compose
adjugate = _impl.adjugate
det_expanded = _impl.det_expanded
det_compact = _impl.det_compact
to_matrix = _impl.to_matrix
from_matrix = _impl.from_matrix


def available_backends():
    """Mapping of backend name to module for every backend that imports."""
    found = {"python": _pykernels}
    try:
        from . import _ckernels
        found["cython"] = _ckernels
    except ImportError:
        pass
    return found
