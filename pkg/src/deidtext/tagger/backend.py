"""Kernel backend selection.

The compiled extension is preferred when importable; otherwise the
pure-Python mirror takes over. DEIDTEXT_BACKEND=compiled|pure|auto forces
the choice (``compiled`` raises if the extension is missing).
"""

from __future__ import annotations

import os

from . import _kernel_py

try:
    from . import _kernel  # type: ignore[attr-defined]
except ImportError:
    _kernel = None  # type: ignore[assignment]

_requested = os.environ.get("DEIDTEXT_BACKEND", "auto").strip().lower() or "auto"

if _requested == "pure":
    _active = _kernel_py
elif _requested == "compiled":
    if _kernel is None:
        raise ImportError(
            "DEIDTEXT_BACKEND=compiled but the extension is not built; "
            "run `pip install -e .` or unset the variable"
        )
    _active = _kernel
elif _requested == "auto":
    _active = _kernel if _kernel is not None else _kernel_py
else:
    raise ValueError(f"DEIDTEXT_BACKEND must be auto, compiled, or pure, not {_requested!r}")

BACKEND_NAME: str = _active.BACKEND_NAME


def active_kernel():
    return _active


def available_kernels() -> dict[str, object]:
    kernels: dict[str, object] = {"pure": _kernel_py}
    if _kernel is not None:
        kernels["compiled"] = _kernel
    return kernels
