import csv
import io
import json

import pytest
from hypothesis import given, settings, strategies as st

from cyclicideals import oracles
from cyclicideals.enumeration import enumerate_ideals
from cyclicideals.errors import NotIndecomposable, PreconditionViolated, QuiverMismatch, WidthOutOfRange
from cyclicideals.ideal import Ideal, decompose, graph_of, is_indecomposable
from cyclicideals.product import (build_star_table, is_semigroup, isolated_vertex_checks, multiply,
                                  qualifies_for_split, reduce_right_factor, split_criterion, star)
from cyclicideals.quiver import admissible_words, build_from_word, from_signature

quiver_words = st.integers(2, 6).flatmap(lambda n: st.sampled_from(list(admissible_words(n))))


@st.composite
def ideal_tuples(draw, size=2, flt="all"):
    q = build_from_word(draw(quiver_words))
    pool = enumerate_ideals(q, flt)
    return tuple(draw(st.sampled_from(pool)) for _ in range(size))


def test_split_pair(split_pair):
    q, I, J = split_pair
    parts = star(I, J)
    assert len(parts) == 2
    assert all(len(p.paths) == 1 or p.dim >= 1 for p in parts)
    assert multiply(I, J) == Ideal(q, sum(p.mask for p in parts))


@settings(max_examples=300, deadline=None)
@given(ideal_tuples())
def test_product_matches_path_oracle(pair):
    I, J = pair
    assert multiply(I, J).paths == oracles.product_paths(I.quiver, I.paths, J.paths)


@settings(max_examples=200, deadline=None)
@given(ideal_tuples(3))
def test_associative(triple):
    a, b, c = triple
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


@settings(max_examples=200, deadline=None)
@given(ideal_tuples())
def test_graph_of_product_is_inside_intersection(pair):
    I, J = pair
    gP, meet = graph_of(multiply(I, J)), graph_of(I) & graph_of(J)
    assert gP <= meet
    assert gP.edges == meet.edges
    if not meet.isolated_vertices():
        assert gP == meet


@settings(max_examples=200, deadline=None)
@given(ideal_tuples())
def test_reduction_keeps_product(pair):
    I, J = pair
    Jp = reduce_right_factor(I, J)
    assert Jp <= J
    assert multiply(I, Jp) == multiply(I, J)
    assert graph_of(multiply(I, J)) == graph_of(I) & graph_of(Jp)
    if is_indecomposable(J) and not Jp.is_zero:
        assert is_indecomposable(Jp)


@settings(max_examples=300, deadline=None)
@given(ideal_tuples(flt="indecomposable"))
def test_at_most_two_summands_and_split_criterion(pair):
    I, J = pair
    parts = star(I, J)
    assert len(parts) <= min(2, 2 * I.quiver.k)
    if len(parts) == 2:
        assert qualifies_for_split(I, J)
    if qualifies_for_split(I, J):
        assert split_criterion(I, J) == (len(parts) == 2)
        for c in isolated_vertex_checks(I, J):
            assert c.passes == (not c.sink_edge or c.ts_J >= c.is_I)


def test_errors():
    q, r = build_from_word("+-"), build_from_word("+--")
    with pytest.raises(QuiverMismatch):
        multiply(Ideal.full(q), Ideal.full(r))
    I = Ideal.full(q)
    with pytest.raises(NotIndecomposable):
        star(I, Ideal.zero(q))
    with pytest.raises(PreconditionViolated):
        isolated_vertex_checks(I, I)
    with pytest.raises(WidthOutOfRange):
        build_star_table(q, 3)


def test_exotic_products_match_oracle():
    for w in ["+-", "+--", "++---", "+++--"]:
        q = build_from_word(w)
        X = Ideal.exotic(q)
        assert multiply(X, Ideal.exotic(q, "b")).is_zero
        for I in enumerate_ideals(q):
            for left in (True, False):
                P = multiply(X, I) if left else multiply(I, X)
                want = oracles.exotic_product(q, I.paths, exotic_on_left=left)
                assert ("exotic" if P.is_exotic else "zero" if P.is_zero else "other") == want


def test_star_table_small():
    q = from_signature((2, 2))
    assert not is_semigroup(build_star_table(q, 2))
    t = build_star_table(q, 1)
    assert Ideal.exotic(q) in t.elements and Ideal.zero(q) in t.elements
    assert t.is_closed() and is_semigroup(t)
    rows = list(csv.reader(io.StringIO(t.to_csv())))
    assert rows[0] == [""] + [str(i) for i in range(len(t.elements))]
    rec = json.loads(t.to_json())
    assert rec["isSemigroup"] is True and len(rec["entries"]) == len(t.elements)
    z = t.index(Ideal.zero(q))
    assert all(not t.entries[z, b] and not t.entries[b, z] for b in range(len(t.elements)))


def test_table_for_four_arms_multivalued_only_at_full_width():
    q = from_signature((2, 2, 2, 2))
    assert is_semigroup(build_star_table(q, 2))
    assert not is_semigroup(build_star_table(q, 4))


def test_decompose_product_of_full():
    q = build_from_word("++-+-")
    for I in enumerate_ideals(q):
        assert multiply(Ideal.full(q), I) == I == multiply(I, Ideal.full(q))
        assert decompose(multiply(I, Ideal.full(q))) == decompose(I)
