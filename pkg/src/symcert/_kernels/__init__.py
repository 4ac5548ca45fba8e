"""Hot loops, compiled when the Cython extension is built.

Set ``SYMCERT_PURE_PYTHON=1`` to force the pure-Python fallback.
"""

import os

from . import _pure
from ._pure import KernelLimit

if os.environ.get("SYMCERT_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pure
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pure

BACKEND = _impl.BACKEND
nf_reduce = _impl.nf_reduce
bareiss_rank = _impl.bareiss_rank
vanishing_search = _impl.vanishing_search


def backends():
    """Every importable backend module, pure first (used by parity tests and benchmarks)."""
    mods = [_pure]
    try:
        from . import _ckernels
        mods.append(_ckernels)
    except ImportError:
        pass
    return mods


__all__ = ["BACKEND", "KernelLimit", "nf_reduce", "bareiss_rank", "vanishing_search", "backends"]
