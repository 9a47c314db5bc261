"""Exhaustive invariant checks over all admissible quivers up to a size bound.

Work is grouped per canonical quiver: every admissible word of length ``n``
is validated, but words with the same canonical rotation share one pass over
the ideals, since every invariant is rotation-independent.  Pair checks run row
by row: ``multiply_row`` produces ``I * J`` for all ``J`` at once and the graph
data of the products is read off with numpy bit operations on a compact
encoding (bit ``s`` of ``V`` is arm ``s``, bit ``s`` of ``E`` is turning point
``t_s``, which joins arms ``s - 1`` and ``s``).
"""
from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product as iproduct

import numpy as np

from . import _pykernels, kernels, oracles
from .enumeration import (DEFAULT_CAP, count_constant_signature, count_indecomposable, count_nilpotent,
                          count_nilpotent_indecomposable, ideal_masks, upper_triangular_ideal_count, catalan)
from .errors import SizeBound
from .ideal import (Ideal, IdealType, classify_type, close_generators, decompose, graph_of, is_indecomposable)
from .product import multiply, reduce_right_factor, split_criterion, star
from .quiver import Quiver, admissible_words, build_from_word
from .stair import (CylDyckPath, DyckComponent, avoids_diagonal, component_of_cells, definition_problems,
                    from_dyck, is_connected, parse_ascii, realize, render_ascii, slopes, to_dyck, _arm_frames)

MAX_DUMPS = 5
SMALL_N = 6


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failed: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def record(self, ok: bool, dump=None, **info) -> None:
        """Count one case; ``dump`` is a callable building the counterexample, run only on failure."""
        self.cases += 1
        if not ok:
            if dump is not None and len(self.failures) < MAX_DUMPS:
                info = {**dump(), **info}
            self.fail(**info)

    def fail(self, **dump) -> None:
        self.failed += 1
        if len(self.failures) < MAX_DUMPS:
            self.failures.append(dump)

    def merge(self, other: CheckResult) -> None:
        self.cases += other.cases
        self.failed += other.failed
        room = MAX_DUMPS - len(self.failures)
        self.failures += other.failures[:max(room, 0)]


@dataclass
class QuiverReport:
    word: str
    checks: dict[str, CheckResult] = field(default_factory=dict)
    observations: dict[str, list] = field(default_factory=dict)

    def check(self, name: str) -> CheckResult:
        return self.checks.setdefault(name, CheckResult(name))

    def observe(self, key: str, item) -> None:
        self.observations.setdefault(key, []).append(item)


@dataclass
class VerifyReport:
    max_n: int
    seed: int
    quivers: int = 0
    words: int = 0
    checks: dict[str, CheckResult] = field(default_factory=dict)
    observations: dict[str, list] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def absorb(self, rep: QuiverReport) -> None:
        for name, c in rep.checks.items():
            self.checks.setdefault(name, CheckResult(name)).merge(c)
        for key, items in rep.observations.items():
            self.observations.setdefault(key, []).extend(items)

    def to_record(self) -> dict:
        return {
            "maxN": self.max_n,
            "seed": self.seed,
            "quivers": self.quivers,
            "words": self.words,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "cases": c.cases, "failed": c.failed, "counterexamples": c.failures}
                for c in sorted(self.checks.values(), key=lambda c: c.name)
            ],
            "observations": {k: v for k, v in sorted(self.observations.items())},
        }

    def summary(self) -> str:
        lines = [f"verify max-n={self.max_n} seed={self.seed}: {self.quivers} quivers from {self.words} words"]
        for c in sorted(self.checks.values(), key=lambda c: c.name):
            lines.append(f"{'PASS' if c.passed else 'FAIL'} {c.name} ({c.cases} cases, {c.failed} failed)")
        for k, v in sorted(self.observations.items()):
            lines.append(f"note {k}: {len(v)} item(s)")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines) + "\n"


def canonical_quivers(max_n: int, min_n: int = 2) -> dict[Quiver, list[str]]:
    out: dict[Quiver, list[str]] = {}
    for n in range(min_n, max_n + 1):
        for w in admissible_words(n):
            out.setdefault(build_from_word(w), []).append(w)
    return out


# -- compact graph encoding ---------------------------------------------------


class Bits:
    """Vectorized graph data of ideal masks for one quiver."""

    def __init__(self, q: Quiver):
        t = q.tables
        self.L = len(q.signature)
        self.full = (1 << self.L) - 1
        self.max_bits = np.array(t.maximal_bits, dtype=np.uint64)
        self.turn_bits = np.array(t.turning_bits, dtype=np.uint64)
        self.pop = np.array([bin(i).count("1") for i in range(1 << self.L)], dtype=np.int64)
        # arm s ends at turning points s and s + 1; the odd one is the sink
        self.sink_edge = [s if s % 2 else (s + 1) % self.L for s in range(self.L)]
        self.source_edge = [(s + 1) % self.L if s % 2 else s for s in range(self.L)]
        self.arm_down = [t.down_masks[b] for b in t.maximal_bits]

    def graph(self, masks: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        V = np.zeros(len(masks), dtype=np.int64)
        E = np.zeros(len(masks), dtype=np.int64)
        one = np.uint64(1)
        for s in range(self.L):
            V |= ((masks >> self.max_bits[s]) & one).astype(np.int64) << s
            E |= ((masks >> self.turn_bits[s]) & one).astype(np.int64) << s
        return V, E

    def components(self, V: np.ndarray, E: np.ndarray) -> np.ndarray:
        c = self.pop[V] - self.pop[E]
        return np.where((V == self.full) & (E == self.full), 1, c)

    def isolated(self, V: np.ndarray, E: np.ndarray) -> np.ndarray:
        nxt = (E >> 1) | ((E & 1) << (self.L - 1))
        return V & ~(E | nxt)

    def down_of(self, vbits: np.ndarray) -> np.ndarray:
        out = np.zeros(len(vbits), dtype=np.uint64)
        for s in range(self.L):
            hit = (vbits >> s) & 1 == 1
            out[hit] |= np.uint64(self.arm_down[s])
        return out


def _paths(q: Quiver, mask: int) -> list:
    return [p.to_record() for p in q.paths_of(int(mask))]


def _dump(q: Quiver, **masks) -> dict:
    d = {"word": q.word}
    d.update({k: _paths(q, v) for k, v in masks.items()})
    return d


# -- quiver -------------------------------------------------------------------


def check_quiver(q: Quiver, words: list[str], rep: QuiverReport) -> None:
    c = rep.check("quiver.structure")
    sig = q.signature
    k = q.k
    for w in words:
        qq = build_from_word(w)
        n = len(w)
        srcs = [v for v in range(n) if w[v] == "+" and w[v - 1] == "-"]
        snks = [v for v in range(n) if w[v] == "-" and w[v - 1] == "+"]
        rotations = {build_from_word(w[o:] + w[:o]) for o in range(n)}
        starts = [o for o in range(n) if _rot(w, o)[0] == "+" and _rot(w, o)[-1] == "-"]
        best = min(Quiver(_rot(w, o)).signature for o in starts)
        c.record(
            qq == q and qq.word == _rot(w, qq.offset) and best == sig and len(srcs) == len(snks) == k
            and sum(sig) - 2 * k == n and min(sig) >= 2 and rotations == {q},
            word=w,
        )
    turning = q.turning_points
    c.record(q.sources == tuple(turning[0::2]) and q.sinks == tuple(turning[1::2]), word=q.word, what="alternation")
    c.record(sum(1 for p in q.all_paths() if p.is_trivial) == q.n, word=q.word, what="trivial count")

    paths = q.all_paths()
    c = rep.check("quiver.concat")
    for a in paths:
        for b in paths:
            ab = q.concat(a, b)
            if ab is not None:
                c.record(ab.head == a.head and ab.tail == b.tail and ab.length == a.length + b.length,
                         word=q.word, a=repr(a), b=repr(b))
            for d in paths:
                left = None if ab is None else q.concat(ab, d)
                bd = q.concat(b, d)
                right = None if bd is None else q.concat(a, bd)
                c.record(left == right, word=q.word, triple=[repr(a), repr(b), repr(d)])

    c = rep.check("quiver.orders")
    above = {w: set() for w in paths}
    for w in paths:
        for p in paths:
            pw = q.concat(p, w)
            if pw is None:
                continue
            for r in paths:
                g = q.concat(pw, r)
                if g is not None:
                    above[w].add(g)
    for w in paths:
        for u in paths:
            j = q.leq_J(w, u)
            c.record(j == (u in above[w]), word=q.word, w=repr(w), u=repr(u), what="leq_J oracle")
            if j:
                c.record(w.length <= u.length, word=q.word, w=repr(w), u=repr(u), what="length")
            for rel in (q.leq_J, q.leq_L, q.leq_R):
                if rel(w, u) and rel(u, w):
                    c.record(w == u, word=q.word, w=repr(w), u=repr(u), what="antisymmetry")
                c.record(not rel(w, u) or j, word=q.word, w=repr(w), u=repr(u), what="L/R imply J")
        for rel in (q.leq_J, q.leq_L, q.leq_R):
            c.record(rel(w, w), word=q.word, w=repr(w), what="reflexive")
    for rel in (q.leq_J, q.leq_L, q.leq_R):
        for a in paths:
            ups = [b for b in paths if rel(a, b)]
            for b in ups:
                for d in paths:
                    if rel(b, d):
                        c.record(rel(a, d), word=q.word, what="transitive")

    c = rep.check("quiver.maximal")
    maximal = q.maximal_paths()
    c.record(len(maximal) == 2 * k and [p.length for p in maximal] == [i - 1 for i in sig], word=q.word)
    for p in paths:
        ext = [m for m in maximal if q.leq_J(p, m)]
        is_max = not any(q.leq_J(p, u) and u != p for u in paths)
        c.record(is_max == (p in maximal), word=q.word, path=repr(p), what="maximality")
        expected = 2 if p.is_trivial and p.tail in turning else 1
        c.record(len(ext) == expected, word=q.word, path=repr(p), what="maximal extensions")
        sup = q.support(p)
        c.record(sup.vertices == {v for v in range(q.n) if q.leq_J(q.trivial(v), p)}, word=q.word, path=repr(p))

    c = rep.check("quiver.ambiguity")
    A, B = q.ambiguity_sets()
    if k > 1:
        c.record(not B, word=q.word, B=[repr(p) for p in B])
    else:
        w1, w2 = maximal
        c.record(B == {w1, w2} and (w1.head, w1.tail) == (w2.head, w2.tail), word=q.word, B=[repr(p) for p in B])
    mq = q.max_quiver()
    c.record(len(mq.arrows) == 2 * k and all(a.tail in mq.sources and a.head in mq.sinks for a in mq.arrows),
             word=q.word, what="max quiver")


def _rot(w: str, o: int) -> str:
    return w[o:] + w[:o]


# -- ideal and enumeration ----------------------------------------------------


def _comparability_components(t, mask: int) -> int:
    """Components of the path set under comparability, using only the order tables."""
    rest, count = mask, 0
    while rest:
        low = rest & -rest
        seen, frontier = low, low
        while frontier:
            f = frontier & -frontier
            frontier ^= f
            i = f.bit_length() - 1
            nb = (t.up_masks[i] | t.down_masks[i]) & mask & ~seen
            seen |= nb
            frontier |= nb
        rest &= ~seen
        count += 1
    return count


def check_ideals(q: Quiver, masks: list[int], rep: QuiverReport) -> None:
    t = q.tables
    c9 = rep.check("ideal.indecomposable-iff-connected")
    cd = rep.check("ideal.decompose")
    cc = rep.check("ideal.closure")
    ct = rep.check("ideal.classify")
    cg = rep.check("ideal.graph")
    graphs: dict = {}
    for m in masks:
        I = Ideal(q, m)
        g = graph_of(I)
        ind = is_indecomposable(I)
        pieces = _comparability_components(t, m)
        c9.record(ind == (pieces == 1), dump=lambda: _dump(q, ideal=m))
        parts = decompose(I)
        union = 0
        ok = len(parts) == pieces and len(set(parts)) == len(parts)
        for p in parts:
            ok &= (union & p.mask) == 0 and is_indecomposable(p)
            union |= p.mask
        cd.record(ok and union == m, dump=lambda: _dump(q, ideal=m))
        cc.record(close_generators(q, I.paths) == I, dump=lambda: _dump(q, ideal=m))
        cg.record(all(set(g.endpoints(x)) <= g.vertices for x in g.edges), dump=lambda: _dump(q, ideal=m))
        if ind:
            kind = classify_type(I)
            nv = len(g.vertices)
            expect = (IdealType.TYPE_I if g.is_full_circle() else
                      IdealType.TYPE_II if nv >= 2 else IdealType.TYPE_III)
            ct.record(kind is expect, dump=lambda: _dump(q, ideal=m))
        graphs.setdefault((g.vertices, g.edges), []).append(m)
    if q.n <= SMALL_N:
        same = next((ms for ms in graphs.values() if len(ms) > 1), None)
        if same:
            rep.observe("graph-not-injective-witness", _dump(q, first=same[0], second=same[1]))
    cc.record(close_generators(q, [q.trivial(v) for v in range(q.n)]) == Ideal.full(q), word=q.word)
    cc.record(close_generators(q, []) == Ideal.zero(q), word=q.word)


def check_enumeration(q: Quiver, masks: list[int], rep: QuiverReport, cap: int) -> None:
    sig = q.signature
    ideals = [Ideal(q, m) for m in masks]
    ind = sum(is_indecomposable(i) for i in ideals)
    nil = sum(i.is_nilpotent for i in ideals)
    nil_ind = sum(i.is_nilpotent and is_indecomposable(i) for i in ideals)
    c = rep.check("enumeration.formulas")
    c.record(count_indecomposable(sig, "corrected") == ind, word=q.word, oracle=ind,
             formula=count_indecomposable(sig, "corrected"), what="indecomposable")
    c.record(count_nilpotent(sig) == nil, word=q.word, oracle=nil, what="nilpotent")
    c.record(count_nilpotent_indecomposable(sig) == nil_ind, word=q.word, oracle=nil_ind,
             what="nilpotent indecomposable")
    for o in range(len(sig)):
        r = sig[o:] + sig[:o]
        for f in (lambda s: count_indecomposable(s, "corrected"), count_nilpotent, count_nilpotent_indecomposable):
            c.record(f(r) == f(sig), word=q.word, rotation=list(r), what="rotation invariance")
    if len(set(sig)) == 1:
        c.record(count_constant_signature(sig[0], q.k) == ind, word=q.word, what="constant signature")
    printed = count_indecomposable(sig, "printed")
    if printed != ind:
        rep.observe("printed-formula-differs", {"signature": list(sig), "printed": printed, "corrected": ind})

    c = rep.check("enumeration.kernels")
    py = sorted(_pykernels.upsets_int(q.tables.order, q.tables.cover_masks, cap))
    c.record(py == sorted(masks), word=q.word, what="python and compiled up-set enumerators agree")
    if q.tables.n_paths <= 12:
        brute = {q.mask_of(s) for s in oracles.all_up_sets(q)}
        c.record(brute == set(masks), word=q.word, what="subset oracle")


# -- stair --------------------------------------------------------------------


def check_realization(q: Quiver, rep: QuiverReport) -> None:
    c = rep.check("stair.realization")
    real = realize(q)
    r = real.r
    c.record(r == q.n + 1, word=q.word, what="r = n + 1")
    tris = real.triangles
    pattern = {(a, b) for tri in tris for a in range(1, r + 1) for b in range(1, r + 1) if (a, b) in tri}
    c.record(set(map(tuple, real.pattern)) == pattern, word=q.word, what="pattern")
    c.record(all(len(real.unit_of[p]) == (2 if p.is_trivial and p.tail == 0 else 1) for p in q.all_paths())
             and len(real.path_of) == sum(len(u) for u in real.unit_of.values()), word=q.word, what="bijection")
    c.record([tri.size for tri in tris] == list(q.signature)
             and all(tris[s].hi == tris[s + 1].lo for s in range(len(tris) - 1))
             and tris[0].lo == 1 and tris[-1].hi == r, word=q.word, what="triangles")
    mats = {p: real.matrix(p) for p in q.all_paths()}
    for w in q.all_paths():
        for u in q.all_paths():
            prod = mats[w] @ mats[u]
            g = q.concat(u, w)  # rows index tails: matrix order is travel order
            ok = (not prod.any()) if g is None else np.array_equal(prod, mats[g])
            c.record(ok, word=q.word, w=repr(w), u=repr(u))


def _count_cyl_paths(q: Quiver) -> int:
    """Valid cylindrical Dyck paths, by a transfer matrix over shared-corner states."""
    trans = []
    for s, m in enumerate(q.signature):
        lo = (1, 1)
        hi = (m, m)
        counts = np.zeros((2, 2), dtype=object)
        for comp in _triangle_components(m):
            a = hi if s % 2 == 0 else lo  # corner at t_s
            b = lo if s % 2 == 0 else hi  # corner at t_{s+1}
            counts[int(a in comp.cells), int(b in comp.cells)] += 1
        trans.append(counts)
    M = np.identity(2, dtype=object)
    for T in trans:
        M = M.dot(T)
    return int(M[0, 0] + M[1, 1])


def _triangle_components(m: int) -> list[DyckComponent]:
    cells = [(a, b) for a in range(1, m + 1) for b in range(a, m + 1)]
    pos = {c: i for i, c in enumerate(cells)}
    covers = []
    for a, b in cells:
        mm = 0
        for cc in ((a - 1, b), (a, b + 1)):
            if cc in pos:
                mm |= 1 << pos[cc]
        covers.append(mm)
    order = sorted(range(len(cells)), key=lambda i: cells[i][0] - cells[i][1])
    out = []
    for mask in kernels.upset_masks_generic(order, covers, 10 ** 7):
        out.append(component_of_cells(m, [cells[i] for i in range(len(cells)) if mask >> i & 1]))
    return out


def check_dyck(q: Quiver, masks: list[int], rep: QuiverReport) -> None:
    c = rep.check("stair.dyck-bijection")
    c20 = rep.check("stair.path-properties")
    cu = rep.check("stair.upset-of-boundary")
    ca = rep.check("stair.ascii")
    frames = _arm_frames(q)
    for m in masks:
        I = Ideal(q, m)
        pi = to_dyck(I)
        errs = definition_problems(pi)
        back = CylDyckPath.from_record(json.loads(json.dumps(pi.to_record())))
        c.record(not errs and back == pi and from_dyck(back, q) == I, dump=lambda: _dump(q, ideal=m), problems=errs)
        c20.record(is_connected(pi) == is_indecomposable(I) and avoids_diagonal(pi) == I.is_nilpotent
                   and (I.is_zero == pi.is_empty), dump=lambda: _dump(q, ideal=m))
        ok = True
        for comp, frame in zip(pi.components, frames):
            inside = {cell for p, cell in frame if m >> p & 1}
            ne = {cell for _, cell in frame
                  if any(cell[0] <= b[0] and cell[1] >= b[1] for b in comp.cells)}
            ok &= inside == ne
        cu.record(ok, dump=lambda: _dump(q, ideal=m))
        if q.n <= SMALL_N:
            text = render_ascii(I)
            ca.record(parse_ascii(text, q) == I, dump=lambda: _dump(q, ideal=m))
    total = _count_cyl_paths(q)
    c.record(total == len(masks), word=q.word, what="valid path count", paths=total, ideals=len(masks))
    if q.n <= SMALL_N:
        per = [_triangle_components(i) for i in q.signature]
        seen = set()
        for combo in iproduct(*per):
            pi = CylDyckPath(q.signature, tuple(combo))
            if definition_problems(pi):
                continue
            J = from_dyck(pi, q)
            seen.add(J.mask)
            c.record(to_dyck(J) == pi, word=q.word, what="from_dyck then to_dyck", path=pi.to_record())
        c.record(seen == set(masks), word=q.word, what="every ideal reached from a valid path")


# -- products -----------------------------------------------------------------


def _slope_table(q: Quiver, masks: np.ndarray, rows: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    L = len(q.signature)
    is_ = np.zeros((len(masks), L), dtype=np.int64)
    ts_ = np.zeros((len(masks), L), dtype=np.int64)
    for i in rows:
        pi = to_dyck(Ideal(q, int(masks[i])))
        for s, comp in enumerate(pi.components):
            if not comp.is_empty:
                is_[i, s], ts_[i, s] = slopes(comp)
    return is_, ts_


def check_products(q: Quiver, masks_list: list[int], rep: QuiverReport) -> None:
    t = q.tables
    if t.wide:
        raise SizeBound(f"{q!r} has {t.n_paths} paths; the exhaustive pass needs at most 64")
    bits = Bits(q)
    L, full = bits.L, bits.full
    masks = np.array(masks_list, dtype=np.uint64)
    N = len(masks)
    V, E = bits.graph(masks)
    comps = bits.components(V, E)
    indec = comps == 1
    width = bits.pop[V]
    full_mask = t.full_mask
    is_full = masks == np.uint64(full_mask)
    typeII = indec & (width >= 2) & ~((V == full) & (E == full))
    level = np.where(is_full, 0, width)  # kQ belongs to every width-bounded table
    ind_idx = np.nonzero(indec)[0]
    t2_idx = np.nonzero(typeII)[0]
    is_s, ts_s = _slope_table(q, masks, t2_idx)
    small = q.n <= SMALL_N
    order = np.argsort(masks, kind="stable")
    sorted_masks = masks[order]
    table = np.zeros((N, N), dtype=np.int64) if small else None

    c1 = rep.check("product.graph-inside-meet")
    c2 = rep.check("product.edges-equal-meet")
    c3 = rep.check("product.no-isolated-keeps-meet")
    c4 = rep.check("product.right-factor-reduction")
    csub = rep.check("ideal.inclusion-graph")
    c12 = rep.check("product.summand-bound")
    c24 = rep.check("product.split-necessary")
    c25 = rep.check("product.split-iff-isolated-kept")
    c26 = rep.check("product.split-sufficient")
    c27 = rep.check("product.split-criterion")
    c14 = rep.check("product.width-closure")
    cid = rep.check("product.identity")
    min_multi_level = math.inf
    pair_products: set[int] = set()
    ambiguous = 0
    jprime_zero = 0

    for a in range(N):
        ma = int(masks[a])
        P = kernels.multiply_row(t, ma, masks)
        VP, EP = bits.graph(P)
        Vm, Em = V[a] & V, E[a] & E
        _vec(c1, ((VP & ~Vm) == 0) & ((EP & ~Em) == 0), q, ma, masks)
        _vec(c2, EP == Em, q, ma, masks)
        iso = bits.isolated(Vm, Em)
        noiso = iso == 0
        c3.cases += int(noiso.sum())
        _vec(c3, (VP == Vm) | ~noiso, q, ma, masks, count=False)
        sub = (np.uint64(ma) & ~masks) == 0
        _vec(csub, ~sub | (((V[a] & ~V) == 0) & ((E[a] & ~E) == 0)), q, ma, masks)
        if is_full[a]:
            _vec(cid, P == masks, q, ma, masks)
        _vec(cid, kernels.multiply_col(t, masks[a:a + 1], np.uint64(full_mask)) == masks[a:a + 1],
             q, ma, masks[a:a + 1])

        # reduction of the right factor
        delta = Vm & ~VP
        hit = np.nonzero(delta != 0)[0]
        if len(hit):
            Jp = masks[hit] & ~bits.down_of(delta[hit])
            P2 = kernels.multiply_row(t, ma, Jp)
            VJ, EJ = bits.graph(Jp)
            VP2, EP2 = bits.graph(P2)
            okp = (P2 == P[hit]) & (VP[hit] == (V[a] & VJ)) & (EP[hit] == (E[a] & EJ))
            cJ = bits.components(VJ, EJ)
            keeps = ~indec[hit] | (cJ == 1) | (Jp == 0)
            jprime_zero += int((indec[hit] & (Jp == 0)).sum())
            _vec(c4, okp & keeps, q, ma, masks[hit])
        c4.cases += N - len(hit)

        if small:
            table[a] = order[np.searchsorted(sorted_masks, P)]

        if not indec[a]:
            continue
        Pi, VPi, EPi = P[ind_idx], VP[ind_idx], EP[ind_idx]
        ci = bits.components(VPi, EPi)
        _vec(c12, ci <= min(2, L), q, ma, masks[ind_idx])
        if small:
            pair_products.update(int(x) for x in np.unique(Pi))
        multi = ci >= 2
        both2 = typeII[a] & typeII[ind_idx]
        cover = ((V[a] | V[ind_idx]) == full) & ((E[a] | E[ind_idx]) == full)
        _vec(c24, ~multi | (both2 & cover), q, ma, masks[ind_idx])
        if multi.any():
            lv = np.maximum(level[a], level[ind_idx])[multi]
            min_multi_level = min(min_multi_level, int(lv.min()))
        lvl = np.maximum(level[a], level[ind_idx])
        _vec(c14, (bits.pop[VPi] <= lvl) | (Pi == np.uint64(full_mask)), q, ma, masks[ind_idx])

        if not typeII[a]:
            continue
        qual = typeII[t2_idx] & ((V[a] | V[t2_idx]) == full) & ((E[a] | E[t2_idx]) == full)
        js = t2_idx[qual]
        if not len(js):
            continue
        VPj = VP[js]
        split = bits.components(VPj, EP[js]) == 2
        isoj = bits.isolated(V[a] & V[js], E[a] & E[js])
        EJ = E[js]
        crit = np.ones(len(js), dtype=bool)
        all_source = np.ones(len(js), dtype=bool)
        for s in range(L):
            on = (isoj >> s) & 1 == 1
            if not on.any():
                continue
            sink_e = (EJ >> bits.sink_edge[s]) & 1 == 1
            src_e = (EJ >> bits.source_edge[s]) & 1 == 1
            ambiguous += int((on & (sink_e == src_e)).sum())
            need = on & sink_e & ~src_e
            crit &= ~need | (ts_s[js, s] >= is_s[a, s])
            all_source &= ~on | src_e
        c27.cases += len(js)
        _vec(c27, crit == split, q, ma, masks[js], count=False)
        _vec(c25, split == ((isoj & ~VPj) == 0), q, ma, masks[js])
        _vec(c26, ~all_source | split, q, ma, masks[js])
        if small and len(js):
            for j in js[: 3]:
                I, J = Ideal(q, ma), Ideal(q, int(masks[j]))
                fac = all(oracles.has_factorization(q, w, I.paths, J.paths)
                          for w in (graph_of(I) & graph_of(J)).isolated_vertices())
                c25.record(fac == (len(star(I, J)) == 2) == split_criterion(I, J), dump=lambda: _dump(q, I=ma, J=masks[j]))

    if ambiguous:
        rep.observe("split-edge-ambiguous", {"word": q.word, "vertices": ambiguous})
    if jprime_zero:
        rep.observe("reduction-to-zero", {"word": q.word, "pairs": jprime_zero})

    c14s = rep.check("product.single-valued-up-to-k")
    for m in range(0, 2 * q.k + 1):
        semigroup = m < min_multi_level
        if m <= q.k:
            c14s.record(semigroup, word=q.word, width=m)
        elif semigroup:
            rep.observe("single-valued-above-k", {"word": q.word, "signature": list(q.signature), "width": m})

    if small:
        ca = rep.check("product.associativity")
        for a in range(N):
            left = table[table[a]]  # (a b) c
            right = table[a][table]  # a (b c)
            eq = left == right
            ca.cases += eq.size
            if not eq.all():
                b, cc = np.argwhere(~eq)[0]
                ca.fail(**_dump(q, a=masks[a], b=masks[b], c=masks[cc]))
                ca.failed += int((~eq).sum()) - 1
        c12 = rep.check("product.summand-bound")
        ind_arr = masks[ind_idx]
        for u in sorted(pair_products):
            P3 = kernels.multiply_row(t, u, ind_arr)
            V3, E3 = bits.graph(P3)
            _vec(c12, bits.components(V3, E3) <= min(3, L), q, u, ind_arr)

    if q.k == 1:
        check_exotic(q, masks_list, rep)


def _vec(c: CheckResult, ok: np.ndarray, q: Quiver, a: int, others: np.ndarray, count: bool = True) -> None:
    if count:
        c.cases += len(ok)
    if ok.all():
        return
    bad = np.nonzero(~ok)[0]
    for b in bad[:max(0, MAX_DUMPS - len(c.failures))]:
        c.failures.append(_dump(q, I=int(a), J=int(others[b])))
    c.failed += len(bad)


def check_exotic(q: Quiver, masks: list[int], rep: QuiverReport) -> None:
    c = rep.check("product.exotic")
    X = Ideal.exotic(q, "a")
    x, y = q.sources[0], q.sinks[0]
    c.record(multiply(X, Ideal.exotic(q, "b")).is_zero and multiply(X, X).is_zero, word=q.word)
    for m in masks:
        I = Ideal(q, m)
        left, right = multiply(X, I), multiply(I, X)
        want_l = "exotic" if I.mask >> x & 1 else "zero"
        want_r = "exotic" if I.mask >> y & 1 else "zero"
        got_l = "exotic" if left == X else "zero" if left.is_zero else "other"
        got_r = "exotic" if right == X else "zero" if right.is_zero else "other"
        orl = oracles.exotic_product(q, I.paths, True)
        orr = oracles.exotic_product(q, I.paths, False)
        c.record(got_l == want_l == orl and got_r == want_r == orr, dump=lambda: _dump(q, ideal=m))
        if is_indecomposable(I):
            c.record(star(X, I) in (frozenset({X}), frozenset()), dump=lambda: _dump(q, ideal=m))


def check_reduction_api(q: Quiver, masks: list[int], rep: QuiverReport, rng: np.random.Generator,
                        samples: int = 200) -> None:
    """Object-level product functions against the vectorized pass, on sampled pairs."""
    c = rep.check("product.api")
    ind = [m for m in masks if is_indecomposable(Ideal(q, m))]
    for _ in range(samples):
        I = Ideal(q, int(masks[rng.integers(len(masks))]))
        J = Ideal(q, int(masks[rng.integers(len(masks))]))
        P = multiply(I, J)
        ref = oracles.product_paths(q, I.paths, J.paths)
        Jp = reduce_right_factor(I, J)
        ok = P.paths == ref and multiply(I, Jp) == P and graph_of(P) == (graph_of(I) & graph_of(Jp))
        c.record(ok, dump=lambda: _dump(q, I=I.mask, J=J.mask))
    for _ in range(samples if ind else 0):
        I = Ideal(q, ind[rng.integers(len(ind))])
        J = Ideal(q, ind[rng.integers(len(ind))])
        s = star(I, J)
        c.record(len(s) == oracles.summand_count(q, multiply(I, J).paths) if q.n <= 5 else len(s) <= 2,
                 dump=lambda: _dump(q, I=I.mask, J=J.mask))


# -- random product tuples ---------------------------------------------------


def check_random_tuples(quivers: list[Quiver], rep: QuiverReport, seed: int, total: int = 1000,
                        length: int = 4) -> None:
    c = rep.check("product.summand-bound-random")
    rng = np.random.default_rng(seed)
    pools = {}
    for _ in range(total):
        q = quivers[rng.integers(len(quivers))]
        if q not in pools:
            pools[q] = [m for m in ideal_masks(q) if is_indecomposable(Ideal(q, m))]
        pool = pools[q]
        factors = [Ideal(q, pool[rng.integers(len(pool))]) for _ in range(length)]
        P = factors[0]
        for f in factors[1:]:
            P = multiply(P, f)
        parts = decompose(P)
        union = 0
        for p in parts:
            union |= p.mask
        ok = (len(parts) <= min(length, 2 * q.k) and len(set(parts)) == len(parts)
              and all(not p.is_exotic and is_indecomposable(p) for p in parts) and union == P.mask)
        c.record(ok, word=q.word, factors=[f.to_record()["paths"] for f in factors])


# -- driver -------------------------------------------------------------------

GROUPS = ("quiver", "ideal", "enumeration", "stair", "product")


def verify_quiver(word: str, words: list[str], groups=GROUPS, cap: int = DEFAULT_CAP,
                  seed: int = 0) -> QuiverReport:
    q = build_from_word(word)
    rep = QuiverReport(q.word)
    masks = list(ideal_masks(q, cap))
    if "quiver" in groups:
        check_quiver(q, words, rep)
    if "ideal" in groups:
        check_ideals(q, masks, rep)
    if "enumeration" in groups:
        check_enumeration(q, masks, rep, cap)
    if "stair" in groups:
        check_realization(q, rep)
        check_dyck(q, masks, rep)
    if "product" in groups:
        check_products(q, masks, rep)
        check_reduction_api(q, masks, rep, np.random.default_rng([seed, len(q.word), int(q.word.replace('+', '1').replace('-', '0'), 2)]))
    return rep


def _global_checks(rep: QuiverReport, max_n: int) -> None:
    c = rep.check("enumeration.catalan")
    for n in range(0, 7):
        c.record(upper_triangular_ideal_count(n) == catalan(n + 1) if n else catalan(0) == 1, n=n)
    for i in range(2, 7):
        for k in range(1, 4):
            c.record(count_constant_signature(i, k) == count_indecomposable((i,) * (2 * k), "corrected"),
                     i=i, k=k, what="constant signature formula")


def run_verify(max_n: int = 8, seed: int = 0, workers: int = 1, cap: int = DEFAULT_CAP,
               groups=GROUPS, progress=None) -> VerifyReport:
    qs = canonical_quivers(max_n)
    report = VerifyReport(max_n, seed, quivers=len(qs), words=sum(len(w) for w in qs.values()))
    jobs = [(q.word, ws) for q, ws in qs.items()]
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            futures = [ex.submit(verify_quiver, w, ws, groups, cap, seed) for w, ws in jobs]
            results = [f.result() for f in futures]
    else:
        results = []
        for w, ws in jobs:
            results.append(verify_quiver(w, ws, groups, cap, seed))
            if progress:
                progress(w)
    for r in results:
        report.absorb(r)
    extra = QuiverReport("*")
    if "enumeration" in groups:
        _global_checks(extra, max_n)
    if "product" in groups and qs:
        check_random_tuples(list(qs), extra, seed)
    report.absorb(extra)
    return report
