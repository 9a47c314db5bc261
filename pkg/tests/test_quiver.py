import pytest
from hypothesis import given, strategies as st

from cyclicideals.errors import NotAdmissible, PathNotInQuiver, TooSmall
from cyclicideals.quiver import (admissible_words, build_from_word, from_signature, quiver_from_record,
                                 word_from_signature)

words = st.integers(2, 9).flatmap(lambda n: st.sampled_from(list(admissible_words(n))))


@pytest.mark.parametrize("word, exc", [("+", TooSmall), ("++++", NotAdmissible), ("----", NotAdmissible),
                                       ("+x-", NotAdmissible)])
def test_rejects_bad_words(word, exc):
    with pytest.raises(exc):
        build_from_word(word)


@pytest.mark.parametrize("sig", [(1, 2), (2,), (2, 2, 2), (2, 0)])
def test_rejects_bad_signatures(sig):
    with pytest.raises(NotAdmissible):
        from_signature(sig)


def test_small_example():
    q = build_from_word("+--")
    assert q.signature == (2, 3)
    assert q.k == 1 and q.sources == (0,) and q.sinks == (1,)
    assert len(q.all_paths()) == 7
    assert len(q.maximal_paths()) == 2
    assert word_from_signature((2, 3)) == "+--"


def test_canonical_rotation_picks_lex_min_signature():
    q = build_from_word("++-+--")
    assert q.word == "+--++-" and q.offset == 3
    assert q.signature == (2, 3, 3, 2)
    assert q.vertex_from_input(3) == 0


def test_word_count():
    # admissible words: neither all '+' nor all '-'
    for n in range(2, 8):
        assert len(list(admissible_words(n))) == 2 ** n - 2


@given(words)
def test_rotations_share_signature(w):
    q = build_from_word(w)
    for o in range(len(w)):
        assert build_from_word(w[o:] + w[:o]) == q


@given(words)
def test_structure_counts(w):
    q = build_from_word(w)
    assert sum(i - 1 for i in q.signature) == q.n
    assert len(q.signature) == 2 * q.k
    assert len(q.all_paths()) == q.n + sum(L * (L + 1) // 2 for L in q.arm_lengths)
    assert len(q.maximal_paths()) == 2 * q.k
    assert quiver_from_record(q.to_record()) == q


@given(words, st.data())
def test_concat_and_order(w, data):
    q = build_from_word(w)
    paths = q.all_paths()
    u = data.draw(st.sampled_from(paths))
    v = data.draw(st.sampled_from(paths))
    # u first, then v
    p = q.concat(v, u)
    if p is not None:
        assert p.tail == u.tail and p.head == v.head
        assert p.length == u.length + v.length
        assert q.leq_J(u, p) or q.leq_J(p, u)
    assert q.concat(u, q.trivial(u.tail)) == u
    assert q.concat(q.trivial(u.head), u) == u
    assert q.leq_J(u, u)


def test_path_lookup_errors():
    q = build_from_word("+-")
    with pytest.raises(PathNotInQuiver):
        q.path_between(1, 0)
