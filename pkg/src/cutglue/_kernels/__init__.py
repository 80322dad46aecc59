"""Kernel backend selection.

Both backends expose the same array contract:

    boundary_counts_by_rank(m, rho)        -> (cpos, cneg)
    move_neighbor_table(m, rho, ranks)     -> (nbr, verdict)
    connected_component_labels(n, src, dst) -> labels

The CUTGLUE_BACKEND environment variable picks one: "numba", "numpy", or
"auto" (default: numba when importable, numpy otherwise).
"""

from __future__ import annotations

import os
from types import ModuleType

ENV_VAR = "CUTGLUE_BACKEND"

_loaded: dict[str, ModuleType] = {}


def resolve_backend_name(value: str | None) -> str:
    v = (value or "auto").strip().lower()
    if v in ("", "auto"):
        try:
            import numba  # noqa: F401
        except ImportError:
            return "numpy"
        return "numba"
    if v in ("numba", "numpy"):
        return v
    raise ValueError(f"unknown backend {value!r}; use numba, numpy or auto")


def get_backend(name: str | None = None) -> ModuleType:
    """Load a backend module; None consults CUTGLUE_BACKEND."""
    resolved = resolve_backend_name(
        name if name is not None else os.environ.get(ENV_VAR)
    )
    if resolved not in _loaded:
        if resolved == "numba":
            from . import numba_backend as mod
        else:
            from . import numpy_backend as mod
        _loaded[resolved] = mod
    return _loaded[resolved]


def active_backend_name() -> str:
    return resolve_backend_name(os.environ.get(ENV_VAR))
