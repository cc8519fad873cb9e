"""Backend selection for the hot kernels.

The compiled extension is preferred when importable; ``ARBOR_KERNEL=py``
forces the pure-Python fallback and ``ARBOR_KERNEL=c`` makes a missing
extension a hard error instead of a silent fallback.
"""

from __future__ import annotations

import os

from . import _kernel_py

_requested = os.environ.get("ARBOR_KERNEL", "").strip().lower()
if _requested not in ("", "c", "py"):
    raise RuntimeError(f"ARBOR_KERNEL must be 'c' or 'py', not {_requested!r}")

if _requested == "py":
    _impl = _kernel_py
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        if _requested == "c":
            raise
        _impl = _kernel_py

BACKEND: str = _impl.BACKEND

max_matching = _impl.max_matching
dp_matching_size = _impl.dp_matching_size
match_equiv_range = _impl.match_equiv_range
long_path_seq = _impl.long_path_seq
a_eq_exists = _impl.a_eq_exists


def backends() -> dict[str, object]:
    """All importable kernel backends, keyed by name (for benchmarks/tests)."""
    found: dict[str, object] = {"py": _kernel_py}
    try:
        from . import _speedups

        found["c"] = _speedups
    except ImportError:
        pass
    return found
