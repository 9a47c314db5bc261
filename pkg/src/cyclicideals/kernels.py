"""Backend selection for the bitmask kernels.

The compiled extension is used when it imports and the quiver has at most 64
paths; otherwise the pure-Python twin runs.  Set ``CYCLICIDEALS_PURE_PYTHON=1``
to force the fallback.
"""
from __future__ import annotations

import os

import numpy as np

from . import _pykernels
from .errors import SizeBound
from .quiver import PathTables

try:
    if os.environ.get("CYCLICIDEALS_PURE_PYTHON"):
        raise ImportError("pure-Python backend forced")
    from . import _ckernels as _backend

    BACKEND = "cython"
except ImportError:
    _backend = _pykernels
    BACKEND = "python"


def multiply_masks(t: PathTables, a: int, b: int) -> int:
    if t.wide:
        return _pykernels._mul(a, b, t.split_start.tolist(), t.split_left.tolist(), t.split_right.tolist())
    return int(_backend.multiply(np.uint64(a), np.uint64(b), t.split_start, t.split_left, t.split_right))


def multiply_row(t: PathTables, a: int, bs: np.ndarray) -> np.ndarray:
    """``[a * b for b in bs]`` over a uint64 array (narrow quivers only)."""
    _require_narrow(t)
    return _backend.multiply_row(np.uint64(a), np.ascontiguousarray(bs, dtype=np.uint64),
                                 t.split_start, t.split_left, t.split_right)


def multiply_col(t: PathTables, as_: np.ndarray, b: int) -> np.ndarray:
    """``[a * b for a in as_]`` over a uint64 array (narrow quivers only)."""
    _require_narrow(t)
    return _backend.multiply_col(np.ascontiguousarray(as_, dtype=np.uint64), np.uint64(b),
                                 t.split_start, t.split_left, t.split_right)


def upset_masks(t: PathTables, cap: int) -> list[int]:
    """Masks of every up-closed path set, in enumeration (not canonical) order."""
    try:
        if t.wide:
            return _pykernels.upsets_int(t.order, t.cover_masks, cap)
        return [int(x) for x in _backend.upsets(t.order, t.cover_array, cap)]
    except OverflowError as exc:
        raise SizeBound(str(exc)) from None


def upset_masks_generic(order, covers, cap: int) -> list[int]:
    """Up-sets of an arbitrary poset given by upper-cover masks."""
    try:
        if len(order) > 64:
            return _pykernels.upsets_int(order, covers, cap)
        return [int(x) for x in _backend.upsets(np.asarray(order, dtype=np.int32),
                                                 np.asarray(covers, dtype=np.uint64), cap)]
    except OverflowError as exc:
        raise SizeBound(str(exc)) from None


def _require_narrow(t: PathTables) -> None:
    if t.wide:
        raise ValueError(f"vectorized kernels need <= 64 paths, quiver has {t.n_paths}")
