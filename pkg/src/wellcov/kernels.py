"""Kernel dispatch: compiled extension when importable, pure Python otherwise.

Set ``WCOV_BACKEND=python`` to force the fallback.  Inputs that exceed the
compiled kernels' word size are routed to the fallback automatically.
"""
from __future__ import annotations

import os

from . import _pykernels

try:
    if os.environ.get("WCOV_BACKEND", "").lower() in ("python", "py", "pure"):
        raise ImportError("pure-Python backend requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"
C_MAX_VERTICES = 64
C_MAX_COVER = 31

iter_mis = _pykernels.iter_mis


def available_backends() -> dict:
    out = {"python": _pykernels}
    if _ckernels is not None:
        out["cython"] = _ckernels
    return out


def mis_all(adj, budget: int) -> list[int]:
    if _ckernels is not None and len(adj) <= C_MAX_VERTICES:
        return _ckernels.mis_all(list(adj), budget)
    return _pykernels.mis_all(adj, budget)


def mis_extremes(adj, budget: int):
    if _ckernels is not None and len(adj) <= C_MAX_VERTICES:
        return _ckernels.mis_extremes(list(adj), budget)
    return _pykernels.mis_extremes(adj, budget)


def partition_scan(adj_c, types, stop_on_change: bool = False, collect: bool = False):
    if _ckernels is not None and len(adj_c) <= C_MAX_COVER:
        return _ckernels.partition_scan(list(adj_c), list(types), stop_on_change, collect)
    return _pykernels.partition_scan(adj_c, types, stop_on_change, collect)


def degen_search(adj, early_exit: bool = True):
    if _ckernels is not None and len(adj) <= C_MAX_VERTICES:
        return _ckernels.degen_search(list(adj), early_exit)
    return _pykernels.degen_search(adj, early_exit)
