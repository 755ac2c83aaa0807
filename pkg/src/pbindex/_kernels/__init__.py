"""Window-scan kernels used by the brute-force oracle.

The compiled extension is used when it was built; otherwise, or when
``PBINDEX_PURE_PYTHON`` is set to a non-empty value, the pure-Python
module is used. ``BACKEND`` names the one in effect.
"""

import os

from . import _fallback

if os.environ.get("PBINDEX_PURE_PYTHON"):
    _impl = _fallback
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        _impl = _fallback

BACKEND = "cython" if _impl is not _fallback else "python"
ABSENT = _fallback.ABSENT

fill_table = _impl.fill_table
absent_positions = _impl.absent_positions
image_gaps = _impl.image_gaps
compose_tables = _impl.compose_tables
shared_value_points = _impl.shared_value_points
mismatch_positions = _impl.mismatch_positions
