import json
import subprocess
import sys

import pytest

from cyclicideals.cli import main
from cyclicideals.ideal import close_generators, ideal_from_record
from cyclicideals.quiver import build_from_word


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_both_reports_discrepancy(capsys):
    code, out, _ = run(capsys, "count", "--signature", "2,3")
    rec = json.loads(out)
    assert code == 0
    assert {r["methods"]["indecomposable"] for r in rec["reports"]} == {"formulaPrinted", "formulaCorrected",
                                                                        "bruteForce"}
    assert rec["discrepancies"] == [{"count": "indecomposable", "formulaPrinted": "18", "formulaCorrected": "14"},
                                    {"count": "indecomposable", "formulaPrinted": "18", "bruteForce": "14"}]


def test_count_summary_and_single_variant(capsys):
    code, out, _ = run(capsys, "count", "--word", "+-+-", "--variant", "corrected", "--format", "summary")
    assert code == 0 and "formulaCorrected: indecomposable=17 nilpotent=16" in out


@pytest.mark.parametrize("argv", [
    ["count", "--word", "++++"],
    ["count"],
    ["count", "--word", "+-", "--signature", "2,2"],
    ["count", "--signature", "2,x"],
    ["star-table", "--word", "+-", "--width", "5"],
    ["enumerate", "--word", "+-", "--format", "csv"],
    ["bogus"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_size_cap_exit_3(capsys):
    code, _, err = run(capsys, "enumerate", "--signature", "3,3,3,3", "--cap", "10")
    assert code == 3 and "error" in err


def test_enumerate_is_deterministic(capsys):
    a = run(capsys, "enumerate", "--word", "++-+-", "--filter", "indecomposable")[1]
    b = run(capsys, "enumerate", "--word=-++-+", "--filter", "indecomposable")[1]
    assert a == b
    rec = json.loads(a)
    assert rec["count"] == len(rec["ideals"]) > 0
    q = build_from_word("++-+-")
    assert all(ideal_from_record({"quiver": rec["quiver"], **i}).quiver == q for i in rec["ideals"])


def test_dyck_round_trip(capsys, tmp_path):
    q = build_from_word("++-+--")
    I = close_generators(q, [q.trivial(2), q.arc(0, 1)])
    src = tmp_path / "ideal.json"
    src.write_text(json.dumps(I.to_record()))
    code, out, _ = run(capsys, "dyck", "--to", str(src))
    assert code == 0
    dy = tmp_path / "dyck.json"
    dy.write_text(out)
    code, out, _ = run(capsys, "dyck", "--from", str(dy))
    assert code == 0 and ideal_from_record(json.loads(out)) == I
    code, art, _ = run(capsys, "dyck", "--from", str(dy), "--format", "ascii")
    assert code == 0 and len(art.splitlines()) == q.n + 1


def test_dyck_rejects_bad_path(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"signature": [2, 2], "components": ["2,2:", ""]}))
    assert run(capsys, "dyck", "--from", str(bad))[0] == 2
    assert run(capsys, "dyck", "--from", str(tmp_path / "missing.json"))[0] == 2


def test_multiply(capsys, tmp_path, split_pair):
    q, I, J = split_pair
    (tmp_path / "i.json").write_text(json.dumps(I.to_record()))
    (tmp_path / "j.json").write_text(json.dumps(J.to_record()))
    code, out, _ = run(capsys, "multiply", str(tmp_path / "i.json"), str(tmp_path / "j.json"))
    rec = json.loads(out)
    assert code == 0 and len(rec["decomposition"]) == 2
    assert rec["splitCriterion"] is True


def test_star_table_csv_and_out(capsys, tmp_path):
    out_file = tmp_path / "t.csv"
    code, out, _ = run(capsys, "star-table", "--signature", "2,2,2,2", "--width", "2", "--format", "csv",
                       "--out", str(out_file))
    assert code == 0 and out == ""
    lines = out_file.read_text().splitlines()
    assert lines[0].startswith(",0,1,")
    code, out, _ = run(capsys, "star-table", "--signature", "2,2,2,2", "--format", "summary")
    assert "semigroup=False" in out


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "3")
    assert code == 0 and "FAIL" not in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "cyclicideals", "count", "--signature", "2,2", "--format",
                          "summary"], capture_output=True, text=True)
    assert res.returncode == 0 and "bruteForce" in res.stdout
