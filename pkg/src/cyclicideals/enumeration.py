"""Catalan numbers, closed-form ideal counts, and the brute-force ideal enumerator."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from . import kernels
from .ideal import Ideal, is_indecomposable
from .quiver import Quiver, from_signature

DEFAULT_CAP = 2_000_000
FILTERS = ("all", "indecomposable", "nilpotent", "nilpotentIndecomposable")


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("catalan needs n >= 0")
    return math.comb(2 * n, n) // (n + 1)


# -- brute force --------------------------------------------------------------


@lru_cache(maxsize=128)
def ideal_masks(q: Quiver, cap: int = DEFAULT_CAP) -> tuple[int, ...]:
    """Every up-closed path set of ``q`` in canonical ideal order."""
    masks = kernels.upset_masks(q.tables, cap)
    n = q.tables.n_paths
    return tuple(sorted(masks, key=lambda m: tuple(i for i in range(n) if m >> i & 1)))


def _keep(ideal: Ideal, flt: str) -> bool:
    if flt == "all":
        return True
    if flt == "nilpotent":
        return ideal.is_nilpotent
    if flt == "indecomposable":
        return is_indecomposable(ideal)
    if flt == "nilpotentIndecomposable":
        return ideal.is_nilpotent and is_indecomposable(ideal)
    raise ValueError(f"unknown filter {flt!r}; choose from {', '.join(FILTERS)}")


def enumerate_ideals(q: Quiver, flt: str = "all", cap: int = DEFAULT_CAP) -> list[Ideal]:
    """All linearized ideals passing ``flt``; exotic ideals are never listed."""
    if flt not in FILTERS:
        raise ValueError(f"unknown filter {flt!r}; choose from {', '.join(FILTERS)}")
    return [i for i in (Ideal(q, m) for m in ideal_masks(q, cap)) if _keep(i, flt)]


def upper_triangular_ideal_count(n: int, cap: int = DEFAULT_CAP) -> int:
    """Up-sets of the cell poset of ``T_n`` (north-east closed), by brute force."""
    cells = [(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]
    pos = {c: i for i, c in enumerate(cells)}
    covers = []
    for a, b in cells:
        m = 0
        for c in ((a - 1, b), (a, b + 1)):
            if c in pos:
                m |= 1 << pos[c]
        covers.append(m)
    order = sorted(range(len(cells)), key=lambda i: cells[i][0] - cells[i][1])
    return len(kernels.upset_masks_generic(order, covers, cap))


# -- closed forms -------------------------------------------------------------


def count_nilpotent(sig: Sequence[int]) -> int:
    return math.prod(catalan(i) for i in sig)


def count_nilpotent_indecomposable(sig: Sequence[int]) -> int:
    return sum(catalan(i) for i in sig) - len(sig)


def _chain_term(sig: Sequence[int], t: int, s: int) -> int:
    """Chains of ``s`` vertices from arm ``t`` to arm ``t + s - 1`` (cyclic)."""
    L = len(sig)
    a, b = sig[t % L], sig[(t + s - 1) % L]
    inner = math.prod(catalan(sig[(t + r - 1) % L] - 1) for r in range(2, s))
    return (catalan(a) - catalan(a - 1)) * (catalan(b) - catalan(b - 1)) * inner


def indecomposable_terms(sig: Sequence[int], variant: str = "corrected") -> tuple[int, int, int]:
    """(full circle, chains, single vertex) summands of the indecomposable count."""
    L = len(sig)
    full = math.prod(catalan(i - 1) for i in sig)
    if variant == "corrected":
        lengths = range(2, L + 1)
    elif variant == "printed":
        lengths = range(1, L)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    chains = sum(_chain_term(sig, t, s) for t in range(L) for s in lengths)
    single = sum(catalan(i + 1) - 2 * catalan(i) + catalan(i - 1) - 1 for i in sig)
    return full, chains, single


def count_indecomposable(sig: Sequence[int], variant: str = "corrected") -> int:
    return sum(indecomposable_terms(sig, variant))


def count_constant_signature(i: int, k: int) -> int:
    if i < 2 or k < 1:
        raise ValueError("need i >= 2 and k >= 1")
    if i == 2:
        return 4 * k * k + 1
    c = catalan(i - 1)
    series, rem = divmod(c ** (2 * k - 1) - 1, c - 1)
    assert rem == 0
    d = catalan(i) - c
    return 2 * k * (catalan(i + 1) - 2 * catalan(i) + c - 1 + d * d * series) + c ** (2 * k)


# -- reports ------------------------------------------------------------------


@dataclass
class CountReport:
    signature: tuple[int, ...]
    counts: dict[str, int] = field(default_factory=dict)
    methods: dict[str, str] = field(default_factory=dict)

    def to_record(self) -> dict:
        return {
            "signature": list(self.signature),
            "counts": {k: str(v) for k, v in self.counts.items()},
            "methods": dict(self.methods),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), indent=2) + "\n"


def formula_report(sig: Sequence[int], variant: str = "corrected") -> CountReport:
    tag = "formulaCorrected" if variant == "corrected" else "formulaPrinted"
    sig = tuple(sig)
    r = CountReport(sig)
    r.counts = {
        "indecomposable": count_indecomposable(sig, variant),
        "nilpotent": count_nilpotent(sig),
        "nilpotentIndecomposable": count_nilpotent_indecomposable(sig),
    }
    r.methods = {k: tag for k in r.counts}
    return r


def oracle_report(q: Quiver | Sequence[int], cap: int = DEFAULT_CAP) -> CountReport:
    if not isinstance(q, Quiver):
        q = from_signature(q)
    ideals = enumerate_ideals(q, "all", cap)
    indec = [is_indecomposable(i) for i in ideals]
    nil = [i.is_nilpotent for i in ideals]
    r = CountReport(q.signature)
    r.counts = {
        "allIdeals": len(ideals),
        "indecomposable": sum(indec),
        "nilpotent": sum(nil),
        "nilpotentIndecomposable": sum(a and b for a, b in zip(indec, nil)),
    }
    r.methods = {k: "bruteForce" for k in r.counts}
    return r
