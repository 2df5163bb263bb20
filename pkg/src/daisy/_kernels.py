"""Kernel selection: compiled core when importable, pure Python otherwise.

Set DAISY_PURE=1 to force the fallback (used by the benchmark and to test
both implementations).
"""

from __future__ import annotations

import os

from . import _purecore as pure

try:
    from . import _core as compiled
except ImportError:  # extension not built
    compiled = None


def active():
    """The implementation module all library code should call."""
    if compiled is None or os.environ.get("DAISY_PURE") == "1":
        return pure
    return compiled


def implementations() -> dict:
    """Name -> module map of everything available (for tests/benchmarks)."""
    out = {"pure": pure}
    if compiled is not None:
        out["compiled"] = compiled
    return out
