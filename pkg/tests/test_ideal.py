import pytest
from hypothesis import given, settings, strategies as st

from conftest import DECOMP_WORD, decomp_vertex
from cyclicideals import oracles
from cyclicideals.enumeration import enumerate_ideals
from cyclicideals.errors import ExoticUnsupported, InvalidIdeal, NotIndecomposable
from cyclicideals.ideal import (Ideal, IdealType, classify_type, close_generators, decompose, graph_of,
                                ideal_from_record, is_indecomposable, width)
from cyclicideals.quiver import admissible_words, build_from_word


def _ideal_strategy(max_n=6):
    def draw(w):
        q = build_from_word(w)
        return st.sampled_from(enumerate_ideals(q))
    return st.integers(2, max_n).flatmap(lambda n: st.sampled_from(list(admissible_words(n)))).flatmap(draw)


ideals = _ideal_strategy()


def test_graph_and_decomposition():
    q = build_from_word(DECOMP_WORD)
    v = lambda label: decomp_vertex(q, label)  # noqa: E731
    I = close_generators(q, [q.path_between(v(1), v(2)), q.trivial(v(6))])
    g = graph_of(I)
    assert len(g.vertices) == 3 and g.edges == {v(6)}
    assert not g.is_connected()
    parts = decompose(I)
    assert len(parts) == 2
    assert {classify_type(p) for p in parts} == {IdealType.TYPE_II, IdealType.TYPE_III}


def test_rejects_non_ideal_path_set():
    q = build_from_word("+-")
    with pytest.raises(InvalidIdeal):
        Ideal.from_paths(q, [q.trivial(0)])
    with pytest.raises(InvalidIdeal):
        Ideal.exotic(build_from_word("+-+-"))


def test_special_ideals():
    q = build_from_word("+--")
    assert classify_type(Ideal.full(q)) is IdealType.TYPE_I
    assert classify_type(Ideal.zero(q)) is IdealType.ZERO
    X = Ideal.exotic(q)
    assert classify_type(X) is IdealType.EXOTIC and is_indecomposable(X)
    assert decompose(Ideal.zero(q)) == []
    with pytest.raises(ExoticUnsupported):
        graph_of(X)


def test_enumeration_matches_up_set_oracle():
    for w in ["+-", "+--", "++--", "+-+-", "++-+-"]:
        q = build_from_word(w)
        got = {frozenset(i.paths) for i in enumerate_ideals(q)}
        assert got == set(oracles.all_up_sets(q))


@settings(max_examples=200, deadline=None)
@given(ideals)
def test_decomposition_agrees_with_oracle(I):
    q = I.quiver
    parts = decompose(I)
    assert len(parts) == oracles.summand_count(q, I.paths)
    assert {frozenset(p.paths) for p in parts} == {frozenset(s) for s in oracles.summands(q, I.paths)}
    union = 0
    for p in parts:
        assert p.mask & union == 0
        assert is_indecomposable(p)
        union |= p.mask
    assert union == I.mask
    assert ideal_from_record(I.to_record()) == I


@settings(max_examples=200, deadline=None)
@given(ideals)
def test_classification(I):
    if I.is_zero:
        return
    if not is_indecomposable(I):
        with pytest.raises(NotIndecomposable):
            classify_type(I)
        return
    t = classify_type(I)
    g = graph_of(I)
    if t is IdealType.TYPE_I:
        assert g.is_full_circle()
    else:
        assert (t is IdealType.TYPE_III) == (width(I) == 1)


def test_generators_record():
    q = build_from_word("+--")
    rec = {"quiver": q.to_record(), "generators": [{"trivial": 2}]}
    I = ideal_from_record(rec)
    assert I == close_generators(q, [q.trivial(2)])
    assert q.trivial(2) in I
