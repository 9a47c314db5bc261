"""Pure-Python twins of the compiled kernels (same signatures, same results)."""
from __future__ import annotations

import numpy as np


def _mul(a: int, b: int, start, left, right) -> int:
    res = 0
    inter = a & b
    for g in range(len(start) - 1):
        if not inter >> g & 1:
            continue
        for s in range(start[g], start[g + 1]):
            if a >> left[s] & 1 and b >> right[s] & 1:
                res |= 1 << g
                break
    return res


def multiply(a, b, start, left, right) -> int:
    return _mul(int(a), int(b), start.tolist(), left.tolist(), right.tolist())


def multiply_row(a, bs, start, left, right) -> np.ndarray:
    st, le, ri = start.tolist(), left.tolist(), right.tolist()
    a = int(a)
    return np.array([_mul(a, int(b), st, le, ri) for b in bs], dtype=np.uint64)


def multiply_col(as_, b, start, left, right) -> np.ndarray:
    st, le, ri = start.tolist(), left.tolist(), right.tolist()
    b = int(b)
    return np.array([_mul(int(a), b, st, le, ri) for a in as_], dtype=np.uint64)


def upsets_int(order, covers, cap: int) -> list[int]:
    """Up-set enumeration over arbitrary-width Python int masks."""
    order = [int(p) for p in order]
    covers = [int(c) for c in covers]
    n = len(order)
    out: list[int] = []

    def rec(i: int, s: int) -> None:
        if i == n:
            if len(out) >= cap:
                raise OverflowError(f"more than {cap} up-sets")
            out.append(s)
            return
        p = order[i]
        rec(i + 1, s)
        if covers[p] & ~s == 0:
            rec(i + 1, s | 1 << p)

    rec(0, 0)
    return out


def upsets(order, covers, cap: int) -> np.ndarray:
    return np.array(upsets_int(order, covers, cap), dtype=np.uint64)
