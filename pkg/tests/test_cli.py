import json

import pytest

from mcbounds.betti import BettiDiagram
from mcbounds.cli import main

PAPER_D = BettiDiagram.from_columns({3: 4, 4: 1}, {4: 1, 5: 4}, {8: 1})


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_analyze_text(capsys):
    status, out, _ = run(capsys, "analyze", "1,3,6,6,3,1")
    assert status == 0
    assert "D3 = (1,0,0,-4,0,4,0,0,-1)" in out
    assert "(n1,n2,N1,N2) = (3,5,3,5)" in out
    assert "e = 20" in out


def test_analyze_json_golden(capsys):
    status, out, _ = run(capsys, "analyze", "1,3,6,6,3,1", "--format", "json")
    assert status == 0
    assert out == (
        '{"diagram": {"codim": 3, "entries": [{"degree": 0, "i": 0, "mult": 1}, '
        '{"degree": 3, "i": 1, "mult": 4}, {"degree": 4, "i": 1, "mult": 1}, '
        '{"degree": 4, "i": 2, "mult": 1}, {"degree": 5, "i": 2, "mult": 4}, '
        '{"degree": 8, "i": 3, "mult": 1}]}, "e": 20, "h": [1, 3, 6, 6, 3, 1], "initial_degree": 3, '
        '"invariants": {"N1": 3, "N2": 5, "n1": 3, "n2": 5, "socle_shift": 8}, "linear_forms": false, '
        '"socle_degree": 5, "symmetric": true, "third_difference": [1, 0, 0, -4, 0, 4, 0, 0, -1]}\n'
    )


def test_analyze_json_roundtrip(capsys):
    _, out, _ = run(capsys, "analyze", "1,3,5,6,5,3,1", "--format", "json")
    assert ",".join(map(str, json.loads(out)["h"])) == "1,3,5,6,5,3,1"


def test_analyze_warns_on_linear_forms(capsys):
    _, out, _ = run(capsys, "analyze", "1,2,1")
    assert "linear forms" in out


def test_analyze_non_symmetric_uses_level_diagram(capsys):
    status, out, _ = run(capsys, "analyze", "1,3,2")
    assert status == 0 and "level diagram" in out


def test_bounds_trivial(capsys):
    status, out, _ = run(capsys, "bounds", "1")
    assert status == 0
    rows = [line.split() for line in out.splitlines() if line.startswith("  ")]
    assert len(rows) == 6 and all(r[1:] == ["1", "sharp"] for r in rows)


def test_bounds_csv_golden(capsys):
    _, out, _ = run(capsys, "bounds", "1,3,6,6,3,1", "--format", "csv")
    assert out.splitlines()[1] == '"1,3,6,6,3,1",20,16,80/3,19,76/3,20,20,holds,holds,holds,holds,sharp,sharp'


def test_bounds_from_diagram_file(capsys, tmp_path):
    path = tmp_path / "paper.json"
    path.write_text(PAPER_D.to_json())
    status, out, _ = run(capsys, "bounds", "--diagram", str(path), "--format", "json")
    assert status == 0
    assert json.loads(out)["bounds"]["improved_lower"] == "19"


def test_bounds_level_diagram_file(capsys, tmp_path):
    path = tmp_path / "level.json"
    path.write_text(BettiDiagram.from_columns({2: 4}, {3: 2, 4: 3}, {5: 2}).to_json())
    status, out, _ = run(capsys, "bounds", "--diagram", str(path))
    assert status == 0 and "not Gorenstein" in out


def test_cancel(capsys):
    status, out, _ = run(capsys, "cancel", "1,3,6,6,3,1", "--side", "min")
    assert status == 0
    assert "central pair at degree 4" in out and "n2 = 5" in out
    _, out, _ = run(capsys, "cancel", "1,3,6,6,3,1", "--format", "json")
    traces = json.loads(out)["traces"]
    assert [(t["side"], t["terminal"], t["central_degree"], t["extreme"]) for t in traces] == [
        ("min", "case2", 4, 5),
        ("max", "case2", 4, 3),
    ]


def test_cancel_csv(capsys):
    _, out, _ = run(capsys, "cancel", "1,3,3,1", "--format", "csv")
    assert out.splitlines()[1:] == ['"1,3,3,1",min,,case1,,4', '"1,3,3,1",max,,case1,,2']


def test_enumerate(capsys):
    _, out, _ = run(capsys, "enumerate", "--max-socle", "2")
    assert out.split() == ["1", "1,1", "1,1,1", "1,2,1", "1,3,1"]
    _, out, _ = run(capsys, "enumerate", "--max-socle", "2", "--format", "json")
    assert json.loads(out) == [[1], [1, 1], [1, 1, 1], [1, 2, 1], [1, 3, 1]]
    _, out, _ = run(capsys, "enumerate", "--max-socle", "2", "--no-si-filter")
    assert "candidate only" in out


def test_certify_and_census(capsys, tmp_path):
    status, out, _ = run(capsys, "certify", "--max-socle", "5", "--out", str(tmp_path))
    assert status == 0 and "violations" in out
    status, out, _ = run(capsys, "census", str(tmp_path / "report.json"))
    assert status == 0
    line = next(l for l in out.splitlines() if l.startswith("1,3,6,6,3,1 "))
    assert line.split()[-2:] == ["zanello", "zanello"]
    _, out, _ = run(capsys, "census", str(tmp_path / "report.json"), "--format", "csv")
    assert out == (tmp_path / "census.csv").read_text()


def test_out_flag_writes_file(capsys, tmp_path):
    target = tmp_path / "a.json"
    status, out, _ = run(capsys, "analyze", "1", "--format", "json", "--out", str(target))
    assert status == 0 and out == ""
    assert json.loads(target.read_text())["e"] == 1


def test_validation_error_exit_1(capsys):
    status, _, err = run(capsys, "analyze", "1,3,7")
    assert status == 1 and "binom" in err
    status, _, err = run(capsys, "bounds", "--diagram", "/nonexistent.json")
    assert status == 1


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["bounds", "1", "--diagram", "x.json"])
    assert info.value.code == 2
