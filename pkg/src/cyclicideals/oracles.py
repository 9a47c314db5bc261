"""Slow reference implementations built straight from the definitions.

Nothing here touches the bitmask tables or the kernels, so agreement between
these functions and the fast code is meaningful.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .quiver import Path, Quiver


def leq_J(q: Quiver, w: Path, u: Path) -> bool:
    """``u = p w r`` for some paths ``p``, ``r`` (trivial allowed)."""
    for p in q.all_paths():
        pw = q.concat(p, w)
        if pw is None:
            continue
        for r in q.all_paths():
            if q.concat(pw, r) == u:
                return True
    return False


def is_up_closed(q: Quiver, paths: Iterable[Path]) -> bool:
    s = set(paths)
    for w in s:
        for p in q.all_paths():
            for u in (q.concat(p, w), q.concat(w, p)):
                if u is not None and u not in s:
                    return False
    return True


def all_up_sets(q: Quiver) -> list[frozenset[Path]]:
    """Every subset of paths closed under multiplication by paths (tiny quivers only)."""
    paths = q.all_paths()
    out = []
    for r in range(len(paths) + 1):
        for c in combinations(paths, r):
            if is_up_closed(q, c):
                out.append(frozenset(c))
    return out


def product_paths(q: Quiver, I: Iterable[Path], J: Iterable[Path]) -> frozenset[Path]:
    """Nonzero ``w u`` with ``w`` in ``I`` and ``u`` in ``J``."""
    J = list(J)
    return frozenset(g for w in I for u in J if (g := q.concat(w, u)) is not None)


def summand_count(q: Quiver, paths: Iterable[Path]) -> int:
    """Comparability components of the path set: the number of indecomposable summands."""
    ps = list(paths)
    parent = list(range(len(ps)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in combinations(range(len(ps)), 2):
        if leq_J(q, ps[i], ps[j]) or leq_J(q, ps[j], ps[i]):
            parent[find(i)] = find(j)
    return len({find(i) for i in range(len(ps))})


def summands(q: Quiver, paths: Iterable[Path]) -> list[frozenset[Path]]:
    ps = list(paths)
    groups: list[set[Path]] = []
    for p in ps:
        touching = [g for g in groups if any(leq_J(q, p, x) or leq_J(q, x, p) for x in g)]
        merged = {p}.union(*touching) if touching else {p}
        groups = [g for g in groups if g not in touching] + [merged]
    return [frozenset(g) for g in groups]


def has_factorization(q: Quiver, w: Path, I: Iterable[Path], J: Iterable[Path]) -> bool:
    """``w = a b`` for some ``a`` in ``I``, ``b`` in ``J``."""
    J = list(J)
    return any(q.concat(a, b) == w for a in I for b in J)


def exotic_product(q: Quiver, I: Iterable[Path], exotic_on_left: bool, a: Fraction = Fraction(2)) -> str:
    """Span of ``(w + a u) p`` (or ``p (w + a u)``) for ``p`` in ``I``, as ``"exotic"`` or ``"zero"``.

    ``w``, ``u`` are the two maximal paths; vectors are dictionaries over paths.
    """
    w, u = q.maximal_paths()
    vectors = []
    for p in I:
        if exotic_on_left:
            terms = [(q.concat(w, p), Fraction(1)), (q.concat(u, p), a)]
        else:
            terms = [(q.concat(p, w), Fraction(1)), (q.concat(p, u), a)]
        vec: dict[Path, Fraction] = {}
        for g, c in terms:
            if g is not None:
                vec[g] = vec.get(g, Fraction(0)) + c
        vec = {g: c for g, c in vec.items() if c}
        if vec:
            vectors.append(vec)
    if not vectors:
        return "zero"
    target = {w: Fraction(1), u: a}
    for v in vectors:
        scale = v.get(w, Fraction(0))
        if not scale or {g: c / scale for g, c in v.items()} != target:
            return "other"
    return "exotic"
