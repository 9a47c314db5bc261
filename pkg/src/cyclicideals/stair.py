"""Stair-shaped matrix realization of the path algebra and cylindrical Dyck paths.

Walking from the source ``v_0`` in increasing index order, vertex position ``p``
(``0 <= p <= n``, with ``p == n`` the second copy of ``v_0``) becomes matrix
index ``p + 1`` in an ``(n+1) x (n+1)`` grid.  A path becomes the unit in the
row of its tail and the column of its head; the trivial path at ``v_0`` is the
pair of diagonal corners.  Arm ``s`` fills a triangle whose diagonal has length
``i_s``: north-east (above the diagonal) for even ``s``, south-west for odd
``s``.  With rows indexed by tails, the matrix product of two units composes
the paths in travel order, i.e. ``unit(w) @ unit(u) == unit(concat(u, w))``.

Each triangle also has a local frame in which it is the upper-triangular
``T_m`` (``m = i_s``): local row/column ``d`` is the vertex at distance
``d - 1`` from the arm's sink, a path sits at ``(d(head), d(tail))``, and an
ideal restricted to the arm is a north-east closed set whose south-west
boundary is a generalized Dyck path read from the top row to the right column.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

import numpy as np

from .errors import EmptyComponent, ExoticUnsupported, InvalidDyck
from .ideal import Ideal, close_generators
from .quiver import Path, Quiver, from_signature

BOUNDARY, MEMBER, ALGEBRA, BLANK = "•", "*", "◦", " "


class MatrixUnit(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class Triangle:
    index: int
    orientation: str  # "NE" or "SW"
    lo: int  # first diagonal index (1-based)
    size: int  # diagonal length i_s

    @property
    def hi(self) -> int:
        return self.lo + self.size - 1

    def __contains__(self, c: tuple[int, int]) -> bool:
        a, b = c
        if self.orientation == "NE":
            return self.lo <= a <= b <= self.hi
        return self.lo <= b <= a <= self.hi

    def to_local(self, c: tuple[int, int]) -> tuple[int, int]:
        a, b = c
        if self.orientation == "NE":
            return (self.hi - b + 1, self.hi - a + 1)
        return (b - self.lo + 1, a - self.lo + 1)

    def to_global(self, c: tuple[int, int]) -> MatrixUnit:
        r, s = c
        if self.orientation == "NE":
            return MatrixUnit(self.hi - s + 1, self.hi - r + 1)
        return MatrixUnit(self.lo + s - 1, self.lo + r - 1)


def triangles_of(signature: Sequence[int]) -> tuple[Triangle, ...]:
    out, lo = [], 1
    for s, i in enumerate(signature):
        out.append(Triangle(s, "NE" if s % 2 == 0 else "SW", lo, i))
        lo += i - 1
    return tuple(out)


@dataclass(frozen=True)
class StairRealization:
    quiver: Quiver
    r: int
    triangles: tuple[Triangle, ...]
    unit_of: dict[Path, frozenset[MatrixUnit]]
    path_of: dict[MatrixUnit, Path]

    @property
    def pattern(self) -> frozenset[MatrixUnit]:
        return frozenset(self.path_of)

    def matrix(self, p: Path) -> np.ndarray:
        m = np.zeros((self.r, self.r), dtype=np.int64)
        for u in self.unit_of[p]:
            m[u.row - 1, u.col - 1] = 1
        return m


def _positions(q: Quiver, p: Path) -> tuple[int, int]:
    """Walk positions (0..n) of the tail and head of a non-trivial path."""
    e = p.first_arrow
    if q.word[e] == "+":
        return e, e + p.length
    return e + 1, e + 1 - p.length


@lru_cache(maxsize=256)
def realize(q: Quiver) -> StairRealization:
    r = q.n + 1
    unit_of: dict[Path, frozenset[MatrixUnit]] = {}
    for p in q.all_paths():
        if p.is_trivial:
            v = p.tail
            cells = {MatrixUnit(v + 1, v + 1)}
            if v == 0:
                cells.add(MatrixUnit(r, r))
            unit_of[p] = frozenset(cells)
        else:
            t, h = _positions(q, p)
            unit_of[p] = frozenset({MatrixUnit(t + 1, h + 1)})
    path_of = {u: p for p, us in unit_of.items() for u in us}
    return StairRealization(q, r, triangles_of(q.signature), unit_of, path_of)


@lru_cache(maxsize=256)
def _arm_frames(q: Quiver) -> tuple[tuple[tuple[int, tuple[int, int]], ...], ...]:
    """Per arm: ``(path index, local cell)`` for every path living in its triangle."""
    real = realize(q)
    out = []
    for tri in real.triangles:
        cells = []
        for u, p in real.path_of.items():
            if u in tri:
                cells.append((q.index(p), tri.to_local(u)))
        cells.sort(key=lambda c: c[1])
        out.append(tuple(cells))
    return tuple(out)


@dataclass(frozen=True)
class DyckComponent:
    """Cells of a (possibly empty) generalized Dyck path in the local frame of ``T_size``."""

    size: int
    cells: frozenset[tuple[int, int]] = frozenset()

    @property
    def is_empty(self) -> bool:
        return not self.cells

    def ordered(self) -> list[tuple[int, int]]:
        return sorted(self.cells, key=lambda c: (c[0] + c[1], c[0]))

    def steps(self) -> str:
        cells = self.ordered()
        out = []
        for (a, b), (c, d) in zip(cells, cells[1:]):
            out.append("R" if (c, d) == (a, b + 1) else "D" if (c, d) == (a + 1, b) else "?")
        return "".join(out)

    def problems(self) -> list[str]:
        if self.is_empty:
            return []
        errs = []
        m = self.size
        for a, b in self.cells:
            if not 1 <= a <= b <= m:
                errs.append(f"cell {(a, b)} outside the triangle T_{m}")
        cells = self.ordered()
        if cells[0][0] != 1:
            errs.append(f"starts at {cells[0]}, not on the top row")
        if cells[-1][1] != m:
            errs.append(f"ends at {cells[-1]}, not on the right column")
        if "?" in self.steps():
            errs.append("consecutive cells are not joined by right/down steps")
        return errs

    def to_record(self) -> str:
        """``"row,col:STEPS"`` anchored at the first cell; ``""`` when empty."""
        if self.is_empty:
            return ""
        a, b = self.ordered()[0]
        return f"{a},{b}:{self.steps()}"

    @classmethod
    def from_record(cls, size: int, rec: str) -> DyckComponent:
        if not rec:
            return cls(size)
        try:
            anchor, steps = rec.split(":")
            a, b = (int(x) for x in anchor.split(","))
        except ValueError:
            raise InvalidDyck(f"malformed component {rec!r}") from None
        cells = [(a, b)]
        for ch in steps:
            a, b = cells[-1]
            if ch == "R":
                cells.append((a, b + 1))
            elif ch == "D":
                cells.append((a + 1, b))
            else:
                raise InvalidDyck(f"unknown step {ch!r}")
        return cls(size, frozenset(cells))


def component_of_cells(size: int, ideal_cells) -> DyckComponent:
    """South-west boundary of a north-east closed cell set of ``T_size``."""
    s = set(ideal_cells)
    return DyckComponent(size, frozenset(c for c in s if (c[0] + 1, c[1] - 1) not in s))


def slopes(component: DyckComponent) -> tuple[int, int]:
    """``(is, ts)``: column where the path starts, row where it ends."""
    if component.is_empty:
        raise EmptyComponent("slopes need a non-empty component")
    cells = component.ordered()
    return cells[0][1], cells[-1][0]


@dataclass(frozen=True)
class CylDyckPath:
    signature: tuple[int, ...]
    components: tuple[DyckComponent, ...]

    @property
    def is_empty(self) -> bool:
        return all(c.is_empty for c in self.components)

    def cells(self) -> frozenset[MatrixUnit]:
        tris = triangles_of(self.signature)
        return frozenset(tris[s].to_global(c) for s, comp in enumerate(self.components) for c in comp.cells)

    def to_record(self) -> dict:
        return {"signature": list(self.signature), "components": [c.to_record() for c in self.components]}

    @classmethod
    def from_record(cls, rec: dict) -> CylDyckPath:
        sig = tuple(int(i) for i in rec["signature"])
        comps = rec["components"]
        if len(comps) != len(sig):
            raise InvalidDyck(f"{len(comps)} components for {len(sig)} triangles")
        return cls(sig, tuple(DyckComponent.from_record(i, c) for i, c in zip(sig, comps)))


def definition_problems(pi: CylDyckPath) -> list[str]:
    """Violations of the cylindrical generalized Dyck path axioms (empty when valid)."""
    errs = []
    sig = pi.signature
    if len(pi.components) != len(sig):
        return [f"{len(pi.components)} components for {len(sig)} triangles"]
    for s, (comp, i) in enumerate(zip(pi.components, sig)):
        if comp.size != i:
            errs.append(f"triangle {s}: component size {comp.size} != {i}")
        errs += [f"triangle {s}: {e}" for e in comp.problems()]
    k2 = len(sig)
    for s in range(k2):
        prev = pi.components[s - 1]
        cur = pi.components[s]
        # t_s is a source for even s (local corner (m, m)), a sink for odd s (corner (1, 1))
        a = (prev.size, prev.size) if s % 2 == 0 else (1, 1)
        b = (cur.size, cur.size) if s % 2 == 0 else (1, 1)
        if (a in prev.cells) != (b in cur.cells):
            what = "north-west/south-east corners" if s == 0 else f"shared corner of triangles {s - 1},{s}"
            errs.append(f"{what} disagree")
    return errs


def to_dyck(ideal: Ideal) -> CylDyckPath:
    if ideal.is_exotic:
        raise ExoticUnsupported("exotic ideals have no boundary")
    return _to_dyck_cached(ideal.quiver, ideal.mask)


@lru_cache(maxsize=65536)
def _to_dyck_cached(q: Quiver, mask: int) -> CylDyckPath:
    comps = []
    for s, frame in enumerate(_arm_frames(q)):
        member = [c for p, c in frame if mask >> p & 1]
        comps.append(component_of_cells(q.signature[s], member))
    return CylDyckPath(q.signature, tuple(comps))


def from_dyck(pi: CylDyckPath, q: Quiver | None = None) -> Ideal:
    if q is None:
        q = from_signature(pi.signature)
    if tuple(pi.signature) != q.signature:
        raise InvalidDyck(f"signature {pi.signature} does not match {q!r}")
    errs = definition_problems(pi)
    if errs:
        raise InvalidDyck("; ".join(errs))
    paths = q.all_paths()
    gens = []
    for comp, frame in zip(pi.components, _arm_frames(q)):
        lookup = {c: p for p, c in frame}
        gens += [paths[lookup[c]] for c in comp.cells]
    ideal = close_generators(q, gens)
    if to_dyck(ideal) != pi:
        raise InvalidDyck("cells are not the boundary of any ideal")
    return ideal


def is_connected(pi: CylDyckPath) -> bool:
    """One 4-connected piece of cells once the two diagonal corners are identified."""
    cells = pi.cells()
    if not cells:
        return False
    r = sum(pi.signature) - len(pi.signature) + 1
    parent = {c: c for c in cells}

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    def union(a, b):
        parent[find(a)] = find(b)

    for a, b in cells:
        for nb in ((a + 1, b), (a, b + 1)):
            if nb in parent:
                union((a, b), nb)
    nw, se = MatrixUnit(1, 1), MatrixUnit(r, r)
    if nw in parent and se in parent:
        union(nw, se)
    return len({find(c) for c in cells}) == 1


def avoids_diagonal(pi: CylDyckPath) -> bool:
    return all(c.row != c.col for c in pi.cells())


def render_ascii(obj: Ideal | CylDyckPath, q: Quiver | None = None) -> str:
    """One glyph per matrix entry: boundary, other members, other algebra cells, blank."""
    ideal = obj if isinstance(obj, Ideal) else from_dyck(obj, q)
    real = realize(ideal.quiver)
    boundary = to_dyck(ideal).cells()
    members = {u for p in ideal.paths for u in real.unit_of[p]}
    rows = []
    for a in range(1, real.r + 1):
        line = []
        for b in range(1, real.r + 1):
            u = MatrixUnit(a, b)
            if u in boundary:
                line.append(BOUNDARY)
            elif u in members:
                line.append(MEMBER)
            elif u in real.path_of:
                line.append(ALGEBRA)
            else:
                line.append(BLANK)
        rows.append("".join(line))
    return "\n".join(rows) + "\n"


def parse_ascii(text: str, q: Quiver) -> Ideal:
    """Inverse of :func:`render_ascii`; rejects grids whose glyphs are inconsistent."""
    real = realize(q)
    lines = text.rstrip("\n").split("\n")
    if len(lines) != real.r or any(len(l) != real.r for l in lines):
        raise InvalidDyck(f"expected a {real.r}x{real.r} grid")
    cells = {MatrixUnit(a + 1, b + 1): ch for a, line in enumerate(lines) for b, ch in enumerate(line)}
    for u, ch in cells.items():
        if (u in real.path_of) != (ch != BLANK):
            raise InvalidDyck(f"glyph {ch!r} at {tuple(u)} disagrees with the algebra pattern")
    member = {u for u, ch in cells.items() if ch in (BOUNDARY, MEMBER)}
    paths = {real.path_of[u] for u in member}
    if any(not real.unit_of[p] <= member for p in paths):
        raise InvalidDyck("the two diagonal corners must agree")
    ideal = Ideal.from_paths(q, paths)
    if to_dyck(ideal).cells() != {u for u, ch in cells.items() if ch == BOUNDARY}:
        raise InvalidDyck("boundary glyphs do not match the ideal's boundary")
    return ideal
