"""Kernel backend selection.

Prefers the compiled extension (``sarlab._core``); falls back to the NumPy
implementation when the extension was not built or SARLAB_FORCE_PYTHON_KERNELS
is set. Both backends implement the same contract; see ``benchmarks/`` for a
speed comparison.
"""

from __future__ import annotations

import os

if os.environ.get("SARLAB_FORCE_PYTHON_KERNELS") == "1":
    from . import _core_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _core_py as _impl

        BACKEND = "python"

sk_log_prob_up = _impl.sk_log_prob_up
phase_walk_hits = _impl.phase_walk_hits
