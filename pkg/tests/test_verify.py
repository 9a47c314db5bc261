import json

import pytest

from cyclicideals import kernels
from cyclicideals.verify import CheckResult, run_verify, verify_quiver


@pytest.fixture(scope="module")
def small_report():
    return run_verify(4, seed=0)


def test_small_sweep_passes(small_report):
    assert small_report.passed, small_report.summary()
    assert small_report.quivers == 7 and small_report.words == 2 + 6 + 14
    for name in ["quiver.structure", "ideal.indecomposable-iff-connected", "stair.dyck-bijection", "stair.path-properties", "product.split-criterion",
                 "product.right-factor-reduction", "product.summand-bound-random", "product.associativity", "product.exotic"]:
        assert small_report.checks[name].cases > 0, name
    json.dumps(small_report.to_record())


def test_records_single_valued_width_above_k(small_report):
    seen = {(tuple(o["signature"]), o["width"]) for o in small_report.observations["single-valued-above-k"]}
    assert ((2, 2, 2, 2), 3) in seen


def test_detects_a_broken_kernel(monkeypatch):
    monkeypatch.setattr(kernels, "multiply_row", lambda t, a, bs: bs.copy())
    rep = verify_quiver("+--", ["+--"], groups=("product",))
    assert not all(c.passed for c in rep.checks.values())


def test_check_result_keeps_few_dumps():
    c = CheckResult("x")
    for i in range(20):
        c.record(False, dump=lambda: {"i": 1})
    assert c.failed == 20 and len(c.failures) == 5
    calls = []
    c.record(True, dump=lambda: calls.append(1))
    assert not calls


@pytest.mark.slow
def test_full_sweep_passes(full_report):
    failing = [c.name for c in full_report.checks.values() if not c.passed]
    assert not failing, full_report.summary()
    assert full_report.quivers == 77 and full_report.words == 494
    assert not full_report.observations.get("split-edge-ambiguous")
