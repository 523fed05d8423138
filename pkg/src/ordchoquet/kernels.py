"""Bitmask kernels used by the structure predicates.

Sets are encoded as ``int64`` bitmasks (bit ``k`` = k-th ground element) and
an order as a boolean matrix ``leq[i, j] = F_i <= F_j``.  The numba versions
are used when available unless ``ORDCHOQUET_DISABLE_NUMBA`` is set; both
backends return identical results.
"""

from . import _kernels_numpy
from ._jit import JIT_ENABLED

if JIT_ENABLED:
    from . import _kernels_numba as _impl

    BACKEND = "numba"
else:
    _impl = _kernels_numpy
    BACKEND = "numpy"

closure = _impl.closure
unit_lower_inverse = _impl.unit_lower_inverse
subset_of = _impl.subset_of
containment_matrix = _impl.containment_matrix
maximal_in = _impl.maximal_in
union_witness = _impl.union_witness
consecutive_witness = _impl.consecutive_witness
is0_witness = _impl.is0_witness
is1_witness = _impl.is1_witness
co_intersecting = _impl.co_intersecting

KERNEL_NAMES = (
    "closure",
    "unit_lower_inverse",
    "subset_of",
    "containment_matrix",
    "maximal_in",
    "union_witness",
    "consecutive_witness",
    "is0_witness",
    "is1_witness",
    "co_intersecting",
)
