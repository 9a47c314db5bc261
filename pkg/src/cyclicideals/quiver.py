"""Admissibly oriented cyclic quivers and their path semigroups.

Vertices are numbered ``v_0 .. v_{n-1}`` around the cycle and edge ``e_j`` joins
``v_j`` and ``v_{j+1 mod n}``.  The orientation word carries one mark per edge:
``+`` means the arrow ``v_j -> v_{j+1}``, ``-`` the reverse.

A :class:`Quiver` is always stored in canonical rotation: ``v_0`` is a source,
the walk goes in increasing index order, and among all such rotations the one
with lexicographically smallest signature is kept (ties: smallest offset).
The first arm therefore runs forward from ``v_0`` and the word reads as
alternating runs ``+^{l_1} -^{l_2} +^{l_3} ...`` with ``l_s = i_s - 1``.

Paths compose right-to-left: ``concat(w, u)`` is "first ``u``, then ``w``" and
is defined iff ``head(u) == tail(w)``.  The zero element of the path semigroup
is never stored; an impossible concatenation returns ``None``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import NotAdmissible, PathNotInQuiver, TooSmall

_MARKS = {"+": "+", "-": "-", "−": "-", "–": "-"}


def normalize_word(word: str | Sequence[str]) -> str:
    """Map a mark sequence onto the ASCII alphabet ``{'+', '-'}``."""
    try:
        return "".join(_MARKS[c] for c in word)
    except KeyError as exc:
        raise NotAdmissible(f"unknown orientation mark {exc.args[0]!r}") from None


def _runs(word: str) -> tuple[int, ...]:
    return tuple(len(list(g)) for _, g in itertools.groupby(word))


def word_from_signature(signature: Sequence[int]) -> str:
    sig = tuple(int(i) for i in signature)
    if not sig or len(sig) % 2:
        raise NotAdmissible(f"signature needs an even, positive number of entries: {sig}")
    if any(i < 2 for i in sig):
        raise NotAdmissible(f"signature entries must be >= 2: {sig}")
    return "".join(("+" if s % 2 == 0 else "-") * (i - 1) for s, i in enumerate(sig))


def admissible_words(n: int) -> Iterator[str]:
    """All admissible orientation words of length ``n`` in lexicographic order."""
    for marks in itertools.product("+-", repeat=n):
        if "+" in marks and "-" in marks:
            yield "".join(marks)


@dataclass(frozen=True)
class Path:
    """A trivial path (``first_arrow is None``) or an arc of consecutive arrows.

    ``first_arrow`` is the edge traversed first, i.e. the one at the tail.
    """

    tail: int
    head: int
    first_arrow: int | None = None
    length: int = 0

    @property
    def is_trivial(self) -> bool:
        return self.first_arrow is None

    @property
    def sort_key(self) -> tuple[int, int, int]:
        if self.first_arrow is None:
            return (0, self.tail, 0)
        return (1, self.first_arrow, self.length)

    def to_record(self) -> dict:
        if self.first_arrow is None:
            return {"trivial": self.tail}
        return {"arc": [self.first_arrow, self.length]}

    def __repr__(self) -> str:
        if self.first_arrow is None:
            return f"e{self.tail}"
        return f"Path({self.tail}->{self.head}, arc={self.first_arrow}:{self.length})"


@dataclass(frozen=True)
class Support:
    vertices: frozenset[int]
    arrows: frozenset[int]


@dataclass(frozen=True)
class MaxQuiver:
    """Bipartite multigraph on sources/sinks whose arrows are the maximal paths."""

    sources: tuple[int, ...]
    sinks: tuple[int, ...]
    arrows: tuple[Path, ...]


@dataclass(frozen=True)
class PathTables:
    """Flat integer tables over the canonical path order, consumed by the kernels.

    Masks are Python ints (bit ``p`` = path ``p``).  ``split_*`` list, for every
    target path ``g``, all pairs ``(left, right)`` with ``concat(left, right) == g``;
    pairs for ``g`` live at ``split_start[g]:split_start[g+1]``.
    """

    n_paths: int
    up_masks: tuple[int, ...]
    down_masks: tuple[int, ...]
    cover_masks: tuple[int, ...]
    order: np.ndarray
    split_start: np.ndarray
    split_left: np.ndarray
    split_right: np.ndarray
    maximal_bits: tuple[int, ...]
    turning_bits: tuple[int, ...]
    arm_masks: tuple[int, ...]
    trivial_mask: int

    @property
    def wide(self) -> bool:
        return self.n_paths > 64

    @property
    def full_mask(self) -> int:
        return (1 << self.n_paths) - 1

    @cached_property
    def cover_array(self) -> np.ndarray:
        return np.array(self.cover_masks, dtype=np.uint64)


class Quiver:
    """An admissible orientation of the ``n``-cycle, in canonical rotation.

    Construct through :func:`build_from_word` or :func:`from_signature`.
    Equality and hashing use the canonical word only; ``offset`` records how the
    input word was rotated (canonical vertex ``i`` is input vertex
    ``(i + offset) % n``).
    """

    def __init__(self, word: str, offset: int = 0):
        word = normalize_word(word)
        n = len(word)
        if n < 2:
            raise TooSmall(f"the cycle needs at least 2 vertices, got {n}")
        if "+" not in word or "-" not in word:
            raise NotAdmissible(f"uniform orientation {word!r} is an oriented cycle")
        if word[0] != "+" or word[-1] != "-":
            raise NotAdmissible(f"{word!r} is not in canonical rotation; use build_from_word")
        self._word = word
        self._offset = offset % n
        self._n = n
        self._signature = tuple(l + 1 for l in _runs(word))
        k2 = len(self._signature)
        starts = [0]
        for i in self._signature:
            starts.append(starts[-1] + i - 1)
        # starts[s] is the position of turning point t_s; starts[2k] == n wraps to v_0
        self._starts = tuple(starts)
        self._turning = tuple(p % n for p in starts[:k2])
        self._build_paths()

    # -- construction helpers ------------------------------------------------

    def _arc_from(self, first: int, num: int) -> Path | None:
        n, w = self._n, self._word
        if not (0 <= first < n) or num < 1:
            return None
        if w[first] == "+":
            edges = [(first + i) % n for i in range(num)]
            if any(w[e] != "+" for e in edges):
                return None
            return Path(first, (first + num) % n, first, num)
        edges = [(first - i) % n for i in range(num)]
        if any(w[e] != "-" for e in edges):
            return None
        return Path((first + 1) % n, (first + 1 - num) % n, first, num)

    def _build_paths(self) -> None:
        n = self._n
        paths = [Path(v, v) for v in range(n)]
        arm_of_edge = [0] * n
        for s in range(len(self._signature)):
            lo, hi = self._starts[s], self._starts[s + 1]
            for e in range(lo, hi):
                arm_of_edge[e % n] = s
        arcs = []
        for e in range(n):
            num = 1
            while (arc := self._arc_from(e, num)) is not None and num <= n:
                arcs.append(arc)
                num += 1
        arcs.sort(key=lambda p: p.sort_key)
        paths.extend(arcs)
        self._paths = tuple(paths)
        self._index = {p: i for i, p in enumerate(paths)}
        self._arm_of_edge = tuple(arm_of_edge)
        self._edges = {}
        self._verts = {}
        for p in paths:
            if p.is_trivial:
                self._edges[p] = frozenset()
                self._verts[p] = frozenset((p.tail,))
                continue
            step = 1 if self._word[p.first_arrow] == "+" else -1
            self._edges[p] = frozenset((p.first_arrow + step * i) % n for i in range(p.length))
            self._verts[p] = frozenset((p.tail + step * i) % n for i in range(p.length + 1))

    # -- identity ---------------------------------------------------------------

    @property
    def word(self) -> str:
        return self._word

    @property
    def offset(self) -> int:
        return self._offset

    @property
    def n(self) -> int:
        return self._n

    @property
    def signature(self) -> tuple[int, ...]:
        return self._signature

    @property
    def k(self) -> int:
        return len(self._signature) // 2

    @property
    def arm_lengths(self) -> tuple[int, ...]:
        return tuple(i - 1 for i in self._signature)

    @property
    def turning_points(self) -> tuple[int, ...]:
        """``t_0 .. t_{2k-1}``: even entries are sources, odd entries sinks."""
        return self._turning

    @property
    def arm_starts(self) -> tuple[int, ...]:
        """Cycle positions of the turning points, with ``arm_starts[2k] == n``."""
        return self._starts

    @property
    def sources(self) -> tuple[int, ...]:
        return self._turning[0::2]

    @property
    def sinks(self) -> tuple[int, ...]:
        return self._turning[1::2]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Quiver) and other._word == self._word

    def __hash__(self) -> int:
        return hash(("Quiver", self._word))

    def __repr__(self) -> str:
        return f"Quiver({self._word!r}, signature={self._signature})"

    def to_record(self) -> dict:
        return {"word": self._word}

    def vertex_from_input(self, v: int) -> int:
        """Canonical id of vertex ``v`` of the word this quiver was built from."""
        return (v - self._offset) % self._n

    # -- paths ----------------------------------------------------------------

    def all_paths(self) -> tuple[Path, ...]:
        return self._paths

    def index(self, p: Path) -> int:
        try:
            return self._index[p]
        except KeyError:
            raise PathNotInQuiver(f"{p!r} is not a path of {self!r}") from None

    def trivial(self, v: int) -> Path:
        if not 0 <= v < self._n:
            raise PathNotInQuiver(f"no vertex {v} in {self!r}")
        return self._paths[v]

    def arc(self, first_arrow: int, num_arrows: int) -> Path:
        p = self._arc_from(first_arrow, num_arrows)
        if p is None:
            raise PathNotInQuiver(f"no arc ({first_arrow}, {num_arrows}) in {self!r}")
        return p

    def path_between(self, tail: int, head: int, arm: int | None = None) -> Path:
        """The path from ``tail`` to ``head`` (restricted to ``arm`` when ambiguous)."""
        found = [
            p for p in self._paths
            if p.tail == tail and p.head == head and (arm is None or p.is_trivial or self.arm_of(p) == arm)
        ]
        if not found:
            raise PathNotInQuiver(f"no path {tail}->{head} in {self!r}")
        if len(found) > 1:
            raise PathNotInQuiver(f"{len(found)} paths {tail}->{head}; pass arm=")
        return found[0]

    def path_from_record(self, rec: dict) -> Path:
        if "trivial" in rec:
            return self.trivial(int(rec["trivial"]))
        first, num = rec["arc"]
        return self.arc(int(first), int(num))

    def edges_of(self, p: Path) -> frozenset[int]:
        return self._edges[p]

    def vertices_of(self, p: Path) -> frozenset[int]:
        return self._verts[p]

    def arm_of(self, p: Path) -> int:
        """Arm index ``s`` of a non-trivial path, or of an interior vertex."""
        if not p.is_trivial:
            return self._arm_of_edge[p.first_arrow]
        v = p.tail
        if v in self._turning:
            raise ValueError(f"{p!r} sits on a turning point shared by two arms")
        return self._arm_of_edge[v]

    def concat(self, w: Path, u: Path) -> Path | None:
        """``w u``: traverse ``u`` first, then ``w``.  ``None`` stands for zero."""
        if u.head != w.tail:
            return None
        if u.is_trivial:
            return w
        if w.is_trivial:
            return u
        return self._arc_from(u.first_arrow, u.length + w.length)

    # -- orders -------------------------------------------------------------------

    def leq_J(self, w: Path, u: Path) -> bool:
        """``u = p w q`` for some possibly trivial ``p``, ``q``."""
        if w.is_trivial:
            return w.tail in self._verts[u]
        return not u.is_trivial and self._edges[w] <= self._edges[u]

    def leq_L(self, w: Path, u: Path) -> bool:
        """``u = p w``."""
        return self.leq_J(w, u) and u.tail == w.tail

    def leq_R(self, w: Path, u: Path) -> bool:
        """``u = w q``."""
        return self.leq_J(w, u) and u.head == w.head

    def maximal_paths(self) -> tuple[Path, ...]:
        """One maximal path per arm, indexed by arm."""
        out = []
        for s in range(len(self._signature)):
            lo, hi = self._starts[s], self._starts[s + 1]
            first = lo if s % 2 == 0 else hi - 1
            out.append(self.arc(first % self._n, hi - lo))
        return tuple(out)

    def edge_arms(self, x: int) -> tuple[int, int]:
        """Arms joined at turning point ``x`` (the two arms for which it is an end)."""
        s = self._turning.index(x)
        return ((s - 1) % len(self._signature), s)

    def ambiguity_sets(self) -> tuple[frozenset[Path], frozenset[Path]]:
        """Split paths by whether their (head, tail) pair is shared with another path."""
        classes: dict[tuple[int, int], list[Path]] = {}
        for p in self._paths:
            classes.setdefault((p.head, p.tail), []).append(p)
        a = frozenset(ps[0] for ps in classes.values() if len(ps) == 1)
        return a, frozenset(self._paths) - a

    def support(self, p: Path) -> Support:
        return Support(self._verts[p], self._edges[p])

    def max_quiver(self) -> MaxQuiver:
        return MaxQuiver(self.sources, self.sinks, self.maximal_paths())

    # -- kernel tables --------------------------------------------------------

    @cached_property
    def tables(self) -> PathTables:
        paths, idx = self._paths, self._index
        n_paths = len(paths)
        up = [0] * n_paths
        down = [0] * n_paths
        for i, w in enumerate(paths):
            for j, u in enumerate(paths):
                if self.leq_J(w, u):
                    up[i] |= 1 << j
                    down[j] |= 1 << i
        covers = []
        for i, w in enumerate(paths):
            c = 0
            for j, u in enumerate(paths):
                if up[i] >> j & 1 and u.length == w.length + 1:
                    c |= 1 << j
            covers.append(c)
        order = sorted(range(n_paths), key=lambda i: (-paths[i].length, i))

        starts, lefts, rights = [0], [], []
        for g in paths:
            for r in paths:
                if r.tail != g.tail or not self.leq_L(r, g):
                    continue
                for l in paths:
                    if self.concat(l, r) == g:
                        lefts.append(idx[l])
                        rights.append(idx[r])
            starts.append(len(lefts))

        maximal = self.maximal_paths()
        arm_masks = [0] * len(maximal)
        for i, p in enumerate(paths):
            if p.is_trivial and p.tail in self._turning:
                continue
            arm_masks[self.arm_of(p)] |= 1 << i
        return PathTables(
            n_paths=n_paths,
            up_masks=tuple(up),
            down_masks=tuple(down),
            cover_masks=tuple(covers),
            order=np.array(order, dtype=np.int32),
            split_start=np.array(starts, dtype=np.int32),
            split_left=np.array(lefts, dtype=np.int32),
            split_right=np.array(rights, dtype=np.int32),
            maximal_bits=tuple(idx[p] for p in maximal),
            turning_bits=tuple(self._turning),
            arm_masks=tuple(arm_masks),
            trivial_mask=(1 << self._n) - 1,
        )

    def mask_of(self, paths: Iterable[Path]) -> int:
        m = 0
        for p in paths:
            m |= 1 << self.index(p)
        return m

    def paths_of(self, mask: int) -> list[Path]:
        return [self._paths[i] for i in range(len(self._paths)) if mask >> i & 1]


def _canonical_rotation(word: str) -> tuple[str, int]:
    n = len(word)
    best = None
    for o in range(n):
        rot = word[o:] + word[:o]
        if rot[0] != "+" or rot[-1] != "-":
            continue
        key = (tuple(l + 1 for l in _runs(rot)), o)
        if best is None or key < best[0]:
            best = (key, rot)
    assert best is not None
    return best[1], best[0][1]


def build_from_word(word: str | Sequence[str]) -> Quiver:
    """Validate an orientation word and return the quiver in canonical rotation."""
    word = normalize_word(word)
    if len(word) < 2:
        raise TooSmall(f"the cycle needs at least 2 vertices, got {len(word)}")
    if "+" not in word or "-" not in word:
        raise NotAdmissible(f"uniform orientation {word!r} is an oriented cycle")
    rot, offset = _canonical_rotation(word)
    return Quiver(rot, offset)


def from_signature(signature: Sequence[int]) -> Quiver:
    """Quiver whose canonical signature is the lex-smallest even rotation of ``signature``."""
    return build_from_word(word_from_signature(signature))


def quiver_from_record(rec: dict) -> Quiver:
    if "word" in rec:
        return build_from_word(rec["word"])
    if "signature" in rec:
        return from_signature(rec["signature"])
    raise NotAdmissible(f"quiver record needs 'word' or 'signature': {rec}")
