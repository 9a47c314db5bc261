"""Compare the compiled and pure-Python kernels on enumeration and product rows.

    python3 benchmarks/bench_kernels.py [--words +-+-+- ++-+--+-] [--repeat 3]
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from cyclicideals import _pykernels
from cyclicideals.quiver import build_from_word

try:
    from cyclicideals import _ckernels
except ImportError:
    _ckernels = None


def _best(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench(word: str, repeat: int, rows: int) -> list[tuple[str, str, float, float | None]]:
    t = build_from_word(word).tables
    out = []
    backends = {"python": _pykernels, "cython": _ckernels}
    res = {}
    for name, mod in backends.items():
        if mod is None:
            continue
        res[name] = _best(lambda: mod.upsets(t.order, t.cover_array, 10 ** 7), repeat)
    masks = _ckernels.upsets(t.order, t.cover_array, 10 ** 7) if _ckernels else _pykernels.upsets(
        t.order, t.cover_array, 10 ** 7)
    out.append((word, f"enumerate ({len(masks)} ideals)", res["python"], res.get("cython")))
    picks = masks[np.linspace(0, len(masks) - 1, min(rows, len(masks))).astype(int)]
    args = (t.split_start, t.split_left, t.split_right)
    res = {}
    for name, mod in backends.items():
        if mod is None:
            continue
        res[name] = _best(lambda: [mod.multiply_row(a, masks, *args) for a in picks], repeat)
    out.append((word, f"products ({len(picks)} x {len(masks)})", res["python"], res.get("cython")))
    return out


def main(argv=None) -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--words", nargs="+", default=["+-+-+-", "+++-+--", "++-+--+-"])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--rows", type=int, default=20)
    args = p.parse_args(argv)
    print(f"{'quiver':<10} {'task':<28} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for w in args.words:
        for word, task, py, cy in bench(w, args.repeat, args.rows):
            sp = f"{py / cy:8.1f}" if cy else "     n/a"
            cys = f"{cy:10.4f}" if cy else "       n/a"
            print(f"{word:<10} {task:<28} {py:10.4f} {cys} {sp}")


if __name__ == "__main__":
    main()
