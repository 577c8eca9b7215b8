"""Kernel backend selection.

The compiled extension is preferred when importable; the pure-Python
fallback is selected otherwise.  Set ``CYCLESTAB_PURE=1`` to force the
fallback (useful for benchmarks and cross-checking).
"""

from __future__ import annotations

import os

if os.environ.get("CYCLESTAB_PURE"):
    from . import _pure as _impl
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _pure as _impl

find_longest_cycle = _impl.find_longest_cycle
find_cycle_of_length = _impl.find_cycle_of_length
sweep_filter_range = _impl.sweep_filter_range

backend_name = "compiled" if _impl.__name__.endswith("._core") else "pure"
