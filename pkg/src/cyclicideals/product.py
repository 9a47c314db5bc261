"""Products of ideals, the multisemigroup of indecomposables and its tables.

``multiply(I, J)`` is spanned by the nonzero products ``w u`` with ``w`` in
``I`` and ``u`` in ``J`` (``u`` traversed first).  ``star(I, J)`` is the set of
indecomposable summands of that product.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from . import kernels
from .errors import (ExoticUnsupported, NotIndecomposable, PreconditionViolated,
                     QuiverMismatch, WidthOutOfRange)
from .ideal import Ideal, IdealType, classify_type, decompose, graph_of, is_indecomposable
from .quiver import Path, Quiver
from .stair import slopes, to_dyck


def multiply(I: Ideal, J: Ideal) -> Ideal:
    if I.quiver != J.quiver:
        raise QuiverMismatch(f"{I.quiver!r} vs {J.quiver!r}")
    q = I.quiver
    if I.is_exotic and J.is_exotic:
        return Ideal.zero(q)
    if I.is_exotic:
        return I if J.mask >> q.sources[0] & 1 else Ideal.zero(q)
    if J.is_exotic:
        return J if I.mask >> q.sinks[0] & 1 else Ideal.zero(q)
    return Ideal(q, kernels.multiply_masks(q.tables, I.mask, J.mask))


def star(I: Ideal, J: Ideal) -> frozenset[Ideal]:
    for x in (I, J):
        if not is_indecomposable(x):
            raise NotIndecomposable(f"{x!r} is not indecomposable")
    return frozenset(decompose(multiply(I, J)))


def _delta0(I: Ideal, J: Ideal) -> frozenset[Path]:
    """Vertices of the intersection graph that the product loses (all isolated)."""
    meet = graph_of(I) & graph_of(J)
    return meet.vertices - graph_of(multiply(I, J)).vertices


def reduce_right_factor(I: Ideal, J: Ideal) -> Ideal:
    """Largest sub-ideal of ``J`` avoiding every path below a lost vertex; ``I J`` is unchanged."""
    if I.is_exotic or J.is_exotic:
        raise ExoticUnsupported("the reduction is defined for linearized ideals")
    if I.quiver != J.quiver:
        raise QuiverMismatch(f"{I.quiver!r} vs {J.quiver!r}")
    q = J.quiver
    t = q.tables
    drop = 0
    for w in _delta0(I, J):
        drop |= t.down_masks[q.index(w)]
    return Ideal(q, J.mask & ~drop)


def qualifies_for_split(I: Ideal, J: Ideal) -> bool:
    """Both type II with graphs covering the whole cycle."""
    if I.is_exotic or J.is_exotic or not (is_indecomposable(I) and is_indecomposable(J)):
        return False
    if classify_type(I) is not IdealType.TYPE_II or classify_type(J) is not IdealType.TYPE_II:
        return False
    return (graph_of(I) | graph_of(J)).is_full_circle()


@dataclass(frozen=True)
class IsolatedVertexCheck:
    vertex: Path
    arm: int
    j_edges: tuple[int, ...]
    sink_edge: bool
    is_I: int | None = None
    ts_J: int | None = None

    @property
    def passes(self) -> bool:
        return not self.sink_edge or self.ts_J >= self.is_I


def isolated_vertex_checks(I: Ideal, J: Ideal) -> list[IsolatedVertexCheck]:
    """Per isolated vertex of the intersection graph: its J-edges and the slope comparison.

    A vertex with any source J-edge passes; otherwise the slope inequality is
    applied in the arm's triangle.
    """
    if not qualifies_for_split(I, J):
        raise PreconditionViolated("need two type II ideals whose graphs cover the cycle")
    q = I.quiver
    gI, gJ = graph_of(I), graph_of(J)
    arms = {p: s for s, p in enumerate(q.maximal_paths())}
    sinks = set(q.sinks)
    piI, piJ = to_dyck(I), to_dyck(J)
    out = []
    for w in sorted((gI & gJ).isolated_vertices(), key=lambda p: p.sort_key):
        s = arms[w]
        edges = tuple(gJ.incident_edges(w))
        if any(x not in sinks for x in edges):
            out.append(IsolatedVertexCheck(w, s, edges, False))
            continue
        is_i, _ = slopes(piI.components[s])
        _, ts_j = slopes(piJ.components[s])
        out.append(IsolatedVertexCheck(w, s, edges, True, is_i, ts_j))
    return out


def split_criterion(I: Ideal, J: Ideal) -> bool:
    return all(c.passes for c in isolated_vertex_checks(I, J))


def ambiguous_isolated_vertices(I: Ideal, J: Ideal) -> list[IsolatedVertexCheck]:
    """Checks where the J-edge is not unique, so "the edge" could be read two ways."""
    return [c for c in isolated_vertex_checks(I, J) if len(c.j_edges) != 1]


# -- tables -------------------------------------------------------------------


def indecomposable_ideals(q: Quiver, max_width: int | None = None) -> list[Ideal]:
    from .enumeration import enumerate_ideals

    out = enumerate_ideals(q, "indecomposable")
    if max_width is not None:
        out = [i for i in out if len(graph_of(i).vertices) <= max_width]
    return out


@dataclass
class StarTable:
    quiver: Quiver
    width_bound: int
    elements: list[Ideal]
    entries: dict[tuple[int, int], frozenset[int]] = field(default_factory=dict)

    def index(self, ideal: Ideal) -> int:
        return self._pos[ideal]

    def __post_init__(self):
        self._pos = {e: i for i, e in enumerate(self.elements)}

    def is_closed(self) -> bool:
        n = len(self.elements)
        return all(all(0 <= x < n for x in v) for v in self.entries.values())

    def to_csv(self) -> str:
        n = len(self.elements)
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([""] + list(range(n)))
        for a in range(n):
            w.writerow([a] + [";".join(map(str, sorted(self.entries[a, b]))) for b in range(n)])
        return buf.getvalue()

    def to_record(self) -> dict:
        n = len(self.elements)
        return {
            "quiver": self.quiver.to_record(),
            "width": self.width_bound,
            "elements": [{"index": i, "ideal": e.to_record()} for i, e in enumerate(self.elements)],
            "entries": [[sorted(self.entries[a, b]) for b in range(n)] for a in range(n)],
            "isSemigroup": is_semigroup(self),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), indent=2, sort_keys=True) + "\n"


def build_star_table(q: Quiver, m: int) -> StarTable:
    if not 0 <= m <= 2 * q.k:
        raise WidthOutOfRange(f"width bound {m} outside 0..{2 * q.k}")
    elems = set(indecomposable_ideals(q, m))
    elems.add(Ideal.full(q))
    elems.add(Ideal.zero(q))
    if q.k == 1:
        elems.add(Ideal.exotic(q))
    elements = sorted(elems, key=lambda i: i.sort_key)
    table = StarTable(q, m, elements)
    for a, x in enumerate(elements):
        for b, y in enumerate(elements):
            if x.is_zero or y.is_zero:
                table.entries[a, b] = frozenset()
                continue
            summands = star(x, y)
            table.entries[a, b] = frozenset(table._pos.get(s, -1) for s in summands)
    return table


def is_semigroup(t: StarTable) -> bool:
    return all(len(v) <= 1 for v in t.entries.values())
