import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import STAIR_ASCII, STAIR_SIGNATURE
from cyclicideals.enumeration import enumerate_ideals
from cyclicideals.errors import EmptyComponent, ExoticUnsupported, InvalidDyck
from cyclicideals.ideal import Ideal, is_indecomposable
from cyclicideals.quiver import admissible_words, build_from_word, from_signature
from cyclicideals.stair import (BOUNDARY, CylDyckPath, DyckComponent, avoids_diagonal, component_of_cells,
                                definition_problems, from_dyck, is_connected, parse_ascii, realize, render_ascii,
                                slopes, to_dyck, triangles_of)


@st.composite
def ideals(draw, max_n=7):
    n = draw(st.integers(2, max_n))
    q = build_from_word(draw(st.sampled_from(list(admissible_words(n)))))
    return draw(st.sampled_from(enumerate_ideals(q)))


def test_triangles_tile_the_diagonal():
    tris = triangles_of(STAIR_SIGNATURE)
    assert [t.lo for t in tris] == [1, 2, 5, 8]
    assert [t.hi for t in tris] == [2, 5, 8, 10]
    assert [t.orientation for t in tris] == ["NE", "SW", "NE", "SW"]
    for t in tris:
        for a in range(t.lo, t.hi + 1):
            for b in range(t.lo, t.hi + 1):
                if (a, b) in t:
                    assert t.to_global(t.to_local((a, b))) == (a, b)


def test_realization_is_multiplicative():
    q = from_signature(STAIR_SIGNATURE)
    real = realize(q)
    assert real.r == q.n + 1
    mats = {p: real.matrix(p) for p in q.all_paths()}
    for w in q.all_paths():
        for u in q.all_paths():
            g = q.concat(u, w)
            prod = mats[w] @ mats[u]
            assert (not prod.any()) if g is None else np.array_equal(prod, mats[g])
    assert sum(mats[q.trivial(v)] for v in range(q.n)).trace() == q.n + 1


def test_stair_diagram_round_trip():
    q = from_signature(STAIR_SIGNATURE)
    I = parse_ascii(STAIR_ASCII, q)
    assert render_ascii(I) == STAIR_ASCII
    pi = to_dyck(I)
    assert len(pi.cells()) == STAIR_ASCII.count(BOUNDARY)
    assert is_connected(pi) and is_indecomposable(I)


def test_component_slopes():
    comp = component_of_cells(5, [(a, b) for a in range(1, 4) for b in range(3, 6)] + [(4, 5)])
    assert comp.to_record() == "1,3:DDRRD"
    assert slopes(comp) == (3, 4)
    assert DyckComponent.from_record(5, comp.to_record()) == comp
    with pytest.raises(EmptyComponent):
        slopes(DyckComponent(5))


@pytest.mark.parametrize("rec", ["1,3", "a,b:R", "1,1:RX"])
def test_malformed_component(rec):
    with pytest.raises(InvalidDyck):
        DyckComponent.from_record(3, rec)


def test_invalid_paths_rejected():
    q = from_signature((2, 2))
    with pytest.raises(InvalidDyck):
        CylDyckPath.from_record({"signature": [2, 2], "components": [""]})
    # start off the top row
    bad = CylDyckPath.from_record({"signature": [2, 2], "components": ["2,2:", ""]})
    assert definition_problems(bad)
    with pytest.raises(InvalidDyck):
        from_dyck(bad, q)
    with pytest.raises(ExoticUnsupported):
        to_dyck(Ideal.exotic(q))


@settings(max_examples=300, deadline=None)
@given(ideals())
def test_bijection_round_trip(I):
    q = I.quiver
    pi = to_dyck(I)
    assert not definition_problems(pi)
    back = CylDyckPath.from_record(json.loads(json.dumps(pi.to_record())))
    assert back == pi and from_dyck(back, q) == I
    assert is_connected(pi) == is_indecomposable(I)
    assert avoids_diagonal(pi) == I.is_nilpotent
    assert pi.is_empty == I.is_zero
    assert parse_ascii(render_ascii(I), q) == I
