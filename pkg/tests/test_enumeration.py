import json

import pytest
from hypothesis import given, strategies as st

from cyclicideals.enumeration import (catalan, count_constant_signature, count_indecomposable, count_nilpotent,
                                      count_nilpotent_indecomposable, enumerate_ideals, formula_report,
                                      indecomposable_terms, oracle_report, upper_triangular_ideal_count)
from cyclicideals.errors import SizeBound
from cyclicideals.quiver import build_from_word, from_signature

SPOT = {
    (2, 2): (5, 4, 2),
    (2, 3): (14, 10, 5),
    (2, 2, 2, 2): (17, 16, 4),
    (2, 2, 2, 2, 2, 2): (37, 64, 6),
}


def test_catalan():
    assert [catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    with pytest.raises(ValueError):
        catalan(-1)


@pytest.mark.parametrize("n", range(1, 7))
def test_triangle_up_sets_are_catalan(n):
    assert upper_triangular_ideal_count(n) == catalan(n + 1)


@pytest.mark.parametrize("sig, want", SPOT.items())
def test_spot_values(sig, want):
    got = (count_indecomposable(sig), count_nilpotent(sig), count_nilpotent_indecomposable(sig))
    assert got == want
    r = oracle_report(sig).counts
    assert (r["indecomposable"], r["nilpotent"], r["nilpotentIndecomposable"]) == want


def test_printed_variant_differs_off_the_constant_two_case():
    assert count_indecomposable((2, 3), "printed") == 18
    assert count_indecomposable((2, 4), "printed") == 106 and count_indecomposable((2, 4)) == 42
    # the two summation ranges cover the same chains when every arm has length one
    for k in range(1, 5):
        sig = (2,) * (2 * k)
        assert count_indecomposable(sig, "printed") == count_indecomposable(sig)
    with pytest.raises(ValueError):
        indecomposable_terms((2, 2), "other")


@pytest.mark.parametrize("i, k", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1), (5, 1), (3, 3), (4, 2)])
def test_constant_signature_closed_form(i, k):
    assert count_constant_signature(i, k) == count_indecomposable((i,) * (2 * k))


def test_constant_signature_brute_force():
    assert count_constant_signature(3, 1) == oracle_report((3, 3)).counts["indecomposable"] == 32
    assert count_constant_signature(2, 3) == 37


@given(st.lists(st.integers(2, 7), min_size=1, max_size=4).map(lambda xs: tuple(xs + xs[::-1])), st.integers(0, 7))
def test_formulas_are_rotation_invariant(sig, o):
    o %= len(sig)
    rot = sig[o:] + sig[:o]
    for f in (count_indecomposable, count_nilpotent, count_nilpotent_indecomposable):
        assert f(sig) == f(rot)


def test_filters_and_cap():
    q = build_from_word("+--")
    assert len(enumerate_ideals(q)) == oracle_report(q).counts["allIdeals"]
    assert all(i.is_nilpotent for i in enumerate_ideals(q, "nilpotent"))
    with pytest.raises(ValueError):
        enumerate_ideals(q, "bogus")
    with pytest.raises(SizeBound):
        enumerate_ideals(from_signature((3, 3, 3, 3)), cap=10)


def test_report_records():
    rec = json.loads(formula_report((2, 3), "printed").to_json())
    assert rec["counts"]["indecomposable"] == "18"
    assert set(rec["methods"].values()) == {"formulaPrinted"}
    assert oracle_report((2, 3)).methods["indecomposable"] == "bruteForce"
