"""Hot numerical kernels with a compiled core and a pure-Python fallback.

The compiled extension (`chainent.kernels._fast`, built from Cython) is
preferred at import time; if it is missing, or if the environment variable
``CHAINENT_PURE_KERNELS`` is set to a non-empty value, the NumPy/Python
implementations in `chainent.kernels._pure` are used instead.  Both backends
expose the same functions with the same contracts; ``BACKEND`` records which
one is active.
"""

import os

from . import _pure

if os.environ.get("CHAINENT_PURE_KERNELS"):
    _impl = _pure
else:
    try:
        from . import _fast as _impl
    except ImportError:
        _impl = _pure

BACKEND = _impl.BACKEND_NAME

hyp2f1_series = _impl.hyp2f1_series
cosine_lag_sums = _impl.cosine_lag_sums


def available_backends():
    """Map backend name -> module, for benchmarking and cross-checking."""
    backends = {"pure": _pure}
    try:
        from . import _fast
        backends["cython"] = _fast
    except ImportError:
        pass
    return backends
