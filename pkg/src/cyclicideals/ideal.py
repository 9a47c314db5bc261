"""Two-sided ideals of the path algebra and their graphs.

A linearized ideal is stored as a bitmask over ``quiver.all_paths()``.  When
``k == 1`` the one-dimensional exotic ideals ``k(w + a*u)`` spanned by a
combination of the two maximal paths also exist; they carry an opaque scalar
tag instead of a path set, since no product ever depends on the scalar.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .errors import ExoticUnsupported, InvalidIdeal, NotIndecomposable
from .quiver import Path, Quiver, quiver_from_record


class IdealType(enum.Enum):
    TYPE_I = "TypeI"
    TYPE_II = "TypeII"
    TYPE_III = "TypeIII"
    ZERO = "Zero"
    EXOTIC = "Exotic"


@dataclass(frozen=True)
class Ideal:
    quiver: Quiver
    mask: int = 0
    scalar: str | None = None

    def __post_init__(self):
        if self.scalar is not None:
            if self.quiver.k != 1:
                raise InvalidIdeal(f"exotic ideals need k == 1, {self.quiver!r} has k={self.quiver.k}")
            if self.mask:
                raise InvalidIdeal("an exotic ideal carries no path set")
            return
        t = self.quiver.tables
        if self.mask < 0 or self.mask >> t.n_paths:
            raise InvalidIdeal(f"mask {self.mask:#x} has bits outside the path set")
        m = self.mask
        while m:
            low = m & -m
            p = low.bit_length() - 1
            if t.up_masks[p] & ~self.mask:
                raise InvalidIdeal(f"path set is not up-closed at {self.quiver.all_paths()[p]!r}")
            m ^= low

    @classmethod
    def from_paths(cls, quiver: Quiver, paths: Iterable[Path]) -> Ideal:
        return cls(quiver, quiver.mask_of(paths))

    @classmethod
    def exotic(cls, quiver: Quiver, scalar: str = "a") -> Ideal:
        return cls(quiver, 0, str(scalar))

    @classmethod
    def zero(cls, quiver: Quiver) -> Ideal:
        return cls(quiver, 0)

    @classmethod
    def full(cls, quiver: Quiver) -> Ideal:
        return cls(quiver, quiver.tables.full_mask)

    @property
    def is_exotic(self) -> bool:
        return self.scalar is not None

    @property
    def is_zero(self) -> bool:
        return self.scalar is None and self.mask == 0

    @property
    def is_nilpotent(self) -> bool:
        """Contains no trivial path (exotic ideals square to zero)."""
        return self.is_exotic or not self.mask & self.quiver.tables.trivial_mask

    @property
    def paths(self) -> frozenset[Path]:
        return frozenset(self.quiver.paths_of(self.mask))

    def sorted_paths(self) -> list[Path]:
        return sorted(self.quiver.paths_of(self.mask), key=lambda p: p.sort_key)

    @property
    def dim(self) -> int:
        return 1 if self.is_exotic else self.mask.bit_count()

    def __contains__(self, p: Path) -> bool:
        if self.is_exotic:
            return False
        return bool(self.mask >> self.quiver.index(p) & 1)

    def __le__(self, other: Ideal) -> bool:
        if self.is_exotic or other.is_exotic:
            return self == other or self.is_zero
        return self.mask & ~other.mask == 0

    @property
    def sort_key(self) -> tuple:
        if self.is_exotic:
            return (1, (), self.scalar)
        return (0, tuple(p.sort_key for p in self.sorted_paths()), "")

    def to_record(self) -> dict:
        if self.is_exotic:
            return {"quiver": self.quiver.to_record(), "kind": "exotic", "scalar": self.scalar}
        return {
            "quiver": self.quiver.to_record(),
            "kind": "linearized",
            "paths": [p.to_record() for p in self.sorted_paths()],
        }

    def __repr__(self) -> str:
        if self.is_exotic:
            return f"Ideal(exotic {self.scalar!r} over {self.quiver.word})"
        return f"Ideal({self.quiver.word}: {self.sorted_paths()})"


def ideal_from_record(rec: dict, quiver: Quiver | None = None) -> Ideal:
    """Parse an ideal record; ``generators`` may replace ``paths`` (closure is taken)."""
    q = quiver_from_record(rec["quiver"]) if "quiver" in rec else quiver
    if q is None:
        raise InvalidIdeal("ideal record carries no quiver")
    kind = rec.get("kind", "linearized")
    if kind == "exotic":
        return Ideal.exotic(q, rec.get("scalar", "a"))
    if "generators" in rec:
        return close_generators(q, [q.path_from_record(p) for p in rec["generators"]])
    return Ideal.from_paths(q, [q.path_from_record(p) for p in rec.get("paths", [])])


def close_generators(quiver: Quiver, gens: Iterable[Path]) -> Ideal:
    """Smallest ideal containing ``gens``."""
    t = quiver.tables
    mask = 0
    for g in gens:
        mask |= t.up_masks[quiver.index(g)]
    return Ideal(quiver, mask)


@dataclass(frozen=True)
class IdealGraph:
    """Subgraph of the cycle whose vertices are maximal paths and edges turning points.

    Turning point ``x`` joins the two maximal paths it is an endpoint of; for
    ``k == 1`` both turning points join the same pair (a doubled edge).
    """

    quiver: Quiver
    vertices: frozenset[Path]
    edges: frozenset[int]

    def endpoints(self, x: int) -> tuple[Path, Path]:
        a, b = self.quiver.edge_arms(x)
        maximal = self.quiver.maximal_paths()
        return maximal[a], maximal[b]

    def incident_edges(self, v: Path) -> list[int]:
        return [x for x in sorted(self.edges) if v in self.endpoints(x)]

    def components(self) -> list[tuple[frozenset[Path], frozenset[int]]]:
        seen: set[Path] = set()
        out = []
        for start in sorted(self.vertices, key=lambda p: p.sort_key):
            if start in seen:
                continue
            verts, edges, todo = {start}, set(), [start]
            while todo:
                v = todo.pop()
                for x in self.incident_edges(v):
                    edges.add(x)
                    for w in self.endpoints(x):
                        if w not in verts:
                            verts.add(w)
                            todo.append(w)
            seen |= verts
            out.append((frozenset(verts), frozenset(edges)))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def is_full_circle(self) -> bool:
        q = self.quiver
        return len(self.vertices) == 2 * q.k and len(self.edges) == 2 * q.k

    def isolated_vertices(self) -> frozenset[Path]:
        return frozenset(v for v in self.vertices if not self.incident_edges(v))

    def __and__(self, other: IdealGraph) -> IdealGraph:
        return IdealGraph(self.quiver, self.vertices & other.vertices, self.edges & other.edges)

    def __or__(self, other: IdealGraph) -> IdealGraph:
        return IdealGraph(self.quiver, self.vertices | other.vertices, self.edges | other.edges)

    def __le__(self, other: IdealGraph) -> bool:
        return self.vertices <= other.vertices and self.edges <= other.edges


def full_graph(quiver: Quiver) -> IdealGraph:
    return IdealGraph(quiver, frozenset(quiver.maximal_paths()), frozenset(quiver.turning_points))


def graph_of(ideal: Ideal) -> IdealGraph:
    if ideal.is_exotic:
        raise ExoticUnsupported("the graph is only defined for linearized ideals")
    q, t = ideal.quiver, ideal.quiver.tables
    verts = frozenset(p for p, b in zip(q.maximal_paths(), t.maximal_bits) if ideal.mask >> b & 1)
    edges = frozenset(x for x in q.turning_points if ideal.mask >> x & 1)
    return IdealGraph(q, verts, edges)


def is_indecomposable(ideal: Ideal) -> bool:
    if ideal.is_exotic:
        return True
    if ideal.is_zero:
        return False
    return graph_of(ideal).is_connected()


def decompose(ideal: Ideal) -> list[Ideal]:
    """Indecomposable summands, one per connected component of the graph."""
    if ideal.is_exotic:
        return [ideal]
    if ideal.is_zero:
        return []
    q, t = ideal.quiver, ideal.quiver.tables
    arm = {p: s for s, p in enumerate(q.maximal_paths())}
    out = []
    for verts, edges in graph_of(ideal).components():
        m = 0
        for v in verts:
            m |= t.arm_masks[arm[v]]
        for x in edges:
            m |= 1 << x
        out.append(Ideal(q, ideal.mask & m))
    return sorted(out, key=lambda i: i.sort_key)


def width(ideal: Ideal) -> int:
    return len(graph_of(ideal).vertices)


def classify_type(ideal: Ideal) -> IdealType:
    if ideal.is_exotic:
        return IdealType.EXOTIC
    if ideal.is_zero:
        return IdealType.ZERO
    g = graph_of(ideal)
    if not g.is_connected():
        raise NotIndecomposable(f"{ideal!r} decomposes; classify its summands instead")
    if g.is_full_circle():
        return IdealType.TYPE_I
    return IdealType.TYPE_II if len(g.vertices) >= 2 else IdealType.TYPE_III
